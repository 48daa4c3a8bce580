#include <algorithm>
#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "netcoord/certify.hpp"
#include "netcoord/equilibrium.hpp"

using namespace netcoord;

namespace {

DistributionFamily family_of(std::vector<std::vector<double>> mu, int ground, int radius) {
  DistributionFamily family;
  family.ground = ground;
  family.radius = radius;
  family.mu = std::move(mu);
  return family;
}

}  // namespace

TEST_CASE("grand_couple basics") {
  std::vector<double> shared{0.2, 0.5, 0.3};
  DistributionFamily family = family_of({shared, shared, shared}, 3, 0);
  CouplingSample a = grand_couple(family, 77);
  CouplingSample b = grand_couple(family, 77);
  CHECK(a.leaders == b.leaders);
  CHECK(a.exponentials == b.exponentials);
  CHECK(a.leaders[0] == a.leaders[1]);
  CHECK(a.leaders[1] == a.leaders[2]);

  DistributionFamily disjoint = family_of({{1.0, 0.0, 0.0}, {0.0, 0.4, 0.6}}, 3, 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CouplingSample s = grand_couple(disjoint, seed);
    CHECK(s.leaders[0] == 0);
    CHECK(s.leaders[1] != 0);
  }

  DistributionFamily zero = family_of({{0.0, 0.0}}, 2, 0);
  CHECK_THROWS_AS(grand_couple(zero, 1), std::invalid_argument);
}

TEST_CASE("grand_couple marginals follow the distribution") {
  std::vector<double> mu{0.2, 0.3, 0.5};
  DistributionFamily family = family_of({mu}, 3, 0);
  std::vector<long long> counts(3, 0);
  long long trials = 100000;
  Rng base(5);
  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    CouplingSample s = grand_couple(family.mu, 3, rng);
    ++counts[std::size_t(s.leaders[0])];
  }
  // df = 2, 1% critical value 9.2103.
  CHECK(chi_square_statistic(counts, mu) < 9.2103);
}

TEST_CASE("point mass against a fair coin mismatches half the time") {
  DistributionFamily family = family_of({{1.0, 0.0}, {0.5, 0.5}}, 2, 0);
  CollisionAudit audit = coupling_collision_audit(family, {{0, 1}}, 100000, 9);
  const PairAudit& row = audit.pairs.front();
  CHECK(row.tv == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(row.bound_sharp == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  double se = std::sqrt(0.5 * 0.5 / double(audit.trials));
  CHECK(std::abs(row.empirical_mismatch - 0.5) <= 4.0 * se);
  CHECK(row.empirical_mismatch <= row.bound_sharp + 4.0 * se);
}

TEST_CASE("collision audit over random five-point distributions") {
  Rng gen(123);
  std::vector<std::vector<double>> mus;
  for (int i = 0; i < 6; ++i) {
    std::vector<double> mu(5);
    double total = 0.0;
    for (double& x : mu) {
      x = 0.05 + gen.next_unit();
      total += x;
    }
    for (double& x : mu) x /= total;
    mus.push_back(mu);
  }
  DistributionFamily family = family_of(mus, 5, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.push_back({i, j});
  long long trials = 30000;
  CollisionAudit audit = coupling_collision_audit(family, pairs, trials, 31);

  for (const PairAudit& row : audit.pairs) {
    double se = std::sqrt(std::max(row.empirical_mismatch * (1.0 - row.empirical_mismatch),
                                   1e-6) / double(trials));
    CHECK(row.empirical_mismatch <= row.bound_sharp + 4.0 * se);
    CHECK(row.bound_sharp <= row.bound_two_tv + 1e-15);
  }
  // Per-point marginal agreement at four sigma.
  for (std::size_t a = 0; a < audit.audited.size(); ++a)
    for (int k = 0; k < 5; ++k) {
      double expected = mus[std::size_t(audit.audited[a])][std::size_t(k)];
      double freq = double(audit.marginal_counts[a][std::size_t(k)]) / double(trials);
      double se = std::sqrt(expected * (1.0 - expected) / double(trials));
      CHECK(std::abs(freq - expected) <= 4.0 * se);
    }

  DistributionFamily identical = family_of({mus[0], mus[0]}, 5, 0);
  CollisionAudit same = coupling_collision_audit(identical, {{0, 1}}, 2000, 3);
  CHECK(same.pairs.front().empirical_mismatch == 0.0);
}

TEST_CASE("profile_influences on dictator profiles") {
  Graph g = make_cycle(15);
  PartitionCertificate cert = tile_cycle(g, 2);
  StrategyProfile leader = make_leader_profile(g, cert);
  DistributionFamily family = profile_influences(g, 2, leader);
  for (std::size_t k = 0; k < cert.communities.size(); ++k)
    for (int v : cert.communities[k])
      for (int u = 0; u < 15; ++u)
        CHECK(family.mu[std::size_t(v)][std::size_t(u)] ==
              (u == cert.leaders[k] ? 1.0 : 0.0));

  StrategyProfile iid = make_iid_profile(g);
  DistributionFamily self = profile_influences(g, 2, iid);
  for (int v = 0; v < 15; ++v)
    CHECK(self.mu[std::size_t(v)][std::size_t(v)] == 1.0);

  // Locality violation: a rule reading a vertex outside its ball.
  StrategyProfile bad = iid;
  bad.functions[0].scope = {7};
  CHECK_THROWS_AS(profile_influences(g, 2, bad), std::invalid_argument);
}

TEST_CASE("profile_epsilon closed forms") {
  Graph g = make_cycle(15);
  PartitionCertificate cert = tile_cycle(g, 2);

  StrategyProfile leader = make_leader_profile(g, cert);
  CHECK(profile_epsilon(g, leader) == doctest::Approx(0.2).epsilon(1e-12));
  // Bridge identity: for coin-valued play the edge average of
  // (1/2)E[(X_i-X_j)^2] is the expected inefficiency of the profile.
  CHECK(profile_epsilon(g, leader) ==
        doctest::Approx(exact_private_leader(g, cert)).epsilon(1e-12));

  StrategyProfile iid = make_iid_profile(g);
  CHECK(profile_epsilon(g, iid) == doctest::Approx(1.0).epsilon(1e-12));

  // Mixing 10% private play. Per unordered edge: cross-community pairs
  // contribute 1, follower-follower pairs 1 - 0.9^2, and pairs touching the
  // leader 1 - 0.9 (the leader always plays its own coin).
  StrategyProfile mixed = make_perturbed_leader_profile(g, cert, 0.1);
  double expected = (3.0 * 1.0 + 6.0 * 0.19 + 6.0 * 0.1) / 15.0;
  CHECK(profile_epsilon(g, mixed) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("perturbed profile influence masses") {
  Graph g = make_cycle(15);
  PartitionCertificate cert = tile_cycle(g, 2);
  StrategyProfile mixed = make_perturbed_leader_profile(g, cert, 0.1);
  DistributionFamily family = profile_influences(g, 2, mixed);
  // Non-leader mass splits 0.855 / 0.145 between leader and self.
  int v = 0;  // community {0..4}, leader 2
  CHECK(family.mu[0][2] == doctest::Approx(0.855).epsilon(1e-9));
  CHECK(family.mu[0][std::size_t(v)] == doctest::Approx(0.145).epsilon(1e-9));

  CHECK_THROWS_AS(make_perturbed_leader_profile(g, cert, 1.0), std::invalid_argument);
}

TEST_CASE("sample_certificate reproduces a dictator tiling") {
  Graph g = make_cycle(15);
  PartitionCertificate tiling = tile_cycle(g, 2);
  DistributionFamily family = profile_influences(g, 2, make_leader_profile(g, tiling));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    PartitionCertificate cert = sample_certificate(g, 2, family, rng);
    CHECK(cert.cut_edges == tiling.cut_edges);
    CHECK(cert.epsilon == 0.2);
    CHECK(verify_certificate(g, cert).valid);
  }
}

TEST_CASE("extract_certificate on an i.i.d. profile is vacuous but valid") {
  Graph g = make_binary_tree(4);
  StrategyProfile iid = make_iid_profile(g);
  DistributionFamily family = profile_influences(g, 2, iid);
  double eps = profile_epsilon(g, iid);
  CHECK(eps == doctest::Approx(1.0).epsilon(1e-12));
  CertificateEstimate est = extract_certificate(g, 2, family, 50, 3, eps);
  CHECK(est.mean_cut_fraction == 1.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.bound == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK(est.mean_cut_fraction <= est.bound);
  REQUIRE(est.samples.size() == 1);
  CHECK(est.samples[0].communities.size() == std::size_t(g.vertex_count()));
  CHECK(verify_certificate(g, est.samples[0]).valid);
}

TEST_CASE("extract_certificate meets the root bound on a perturbed profile") {
  Graph g = make_cycle(15);
  PartitionCertificate tiling = tile_cycle(g, 2);
  StrategyProfile mixed = make_perturbed_leader_profile(g, tiling, 0.1);
  DistributionFamily family = profile_influences(g, 2, mixed);
  double eps = profile_epsilon(g, mixed);
  CertificateEstimate est = extract_certificate(g, 2, family, 400, 13, eps);
  CHECK(est.mean_cut_fraction <= est.bound + 4.0 * est.std_error);
  for (const PartitionCertificate& cert : est.samples)
    CHECK(verify_certificate(g, cert).valid);

  CertificateEstimate again = extract_certificate(g, 2, family, 400, 13, eps);
  CHECK(again.mean_cut_fraction == est.mean_cut_fraction);
}

TEST_CASE("profile json round trip") {
  Graph g = make_cycle(15);
  StrategyProfile mixed = make_perturbed_leader_profile(g, tile_cycle(g, 2), 0.1);
  std::string path = "test_profile_roundtrip.json";
  save_profile(mixed, path);
  StrategyProfile back = load_profile(path);
  REQUIRE(back.functions.size() == mixed.functions.size());
  for (std::size_t i = 0; i < back.functions.size(); ++i) {
    CHECK(back.functions[i].scope == mixed.functions[i].scope);
    CHECK(back.functions[i].table == mixed.functions[i].table);
  }
  CHECK(profile_epsilon(g, back) == doctest::Approx(profile_epsilon(g, mixed)).epsilon(1e-12));
  std::remove(path.c_str());
}
