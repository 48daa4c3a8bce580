#include "netcoord/certify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace netcoord {

namespace {

void check_family(const DistributionFamily& family) {
  for (const auto& mu : family.mu) {
    if (int(mu.size()) != family.ground)
      throw std::invalid_argument("distribution family: wrong distribution length");
    double sum = 0.0;
    bool any = false;
    for (double p : mu) {
      if (p < 0.0) throw std::invalid_argument("distribution family: negative mass");
      if (p > 0.0) any = true;
      sum += p;
    }
    if (!any) throw std::invalid_argument("distribution family: zero-support distribution");
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("distribution family: masses must sum to 1");
  }
}

void check_supports_local(const Graph& g, const DistributionFamily& family) {
  if (family.ground != g.vertex_count() || int(family.mu.size()) != g.vertex_count())
    throw std::invalid_argument("distribution family: size does not match the graph");
  for (int i = 0; i < g.vertex_count(); ++i) {
    VertexSet reach = ball(g, i, family.radius);
    for (int k = 0; k < family.ground; ++k)
      if (family.mu[std::size_t(i)][std::size_t(k)] > 0.0 &&
          !std::binary_search(reach.begin(), reach.end(), k))
        throw std::invalid_argument("distribution family: support escapes the radius ball");
  }
}

}  // namespace

CouplingSample grand_couple(const std::vector<std::vector<double>>& mu, int ground, Rng& rng) {
  CouplingSample sample;
  sample.exponentials.resize(std::size_t(ground));
  for (double& e : sample.exponentials) e = rng.next_exponential();
  sample.leaders.reserve(mu.size());
  for (const auto& dist : mu) {
    if (int(dist.size()) != ground)
      throw std::invalid_argument("grand_couple: wrong distribution length");
    int best = -1;
    double best_score = 0.0;
    for (int k = 0; k < ground; ++k) {
      double mass = dist[std::size_t(k)];
      if (mass <= 0.0) continue;
      double score = sample.exponentials[std::size_t(k)] / mass;
      if (best < 0 || score < best_score) {
        best = k;
        best_score = score;
      }
    }
    if (best < 0) throw std::invalid_argument("grand_couple: zero-support distribution");
    sample.leaders.push_back(best);
  }
  return sample;
}

CouplingSample grand_couple(const DistributionFamily& family, std::uint64_t seed) {
  check_family(family);
  Rng rng(seed);
  return grand_couple(family.mu, family.ground, rng);
}

CollisionAudit coupling_collision_audit(const DistributionFamily& family,
                                        const std::vector<std::pair<int, int>>& pairs,
                                        long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("coupling_collision_audit: trials must be >= 1");
  check_family(family);
  CollisionAudit audit;
  audit.trials = trials;

  std::vector<int> audited;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= int(family.mu.size()) || b >= int(family.mu.size()))
      throw std::invalid_argument("coupling_collision_audit: pair index out of range");
    audited.push_back(a);
    audited.push_back(b);
  }
  std::sort(audited.begin(), audited.end());
  audited.erase(std::unique(audited.begin(), audited.end()), audited.end());
  audit.audited = audited;
  audit.marginal_counts.assign(audited.size(),
                               std::vector<long long>(std::size_t(family.ground), 0));

  std::vector<long long> mismatches(pairs.size(), 0);
  Rng base(seed);
  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    CouplingSample sample = grand_couple(family.mu, family.ground, rng);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (sample.leaders[std::size_t(pairs[p].first)] !=
          sample.leaders[std::size_t(pairs[p].second)])
        ++mismatches[p];
    for (std::size_t a = 0; a < audited.size(); ++a)
      ++audit.marginal_counts[a][std::size_t(sample.leaders[std::size_t(audited[a])])];
  }

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    PairAudit row;
    row.a = pairs[p].first;
    row.b = pairs[p].second;
    row.empirical_mismatch = double(mismatches[p]) / double(trials);
    row.tv = total_variation(family.mu[std::size_t(row.a)], family.mu[std::size_t(row.b)]);
    row.bound_sharp = 2.0 * row.tv / (1.0 + row.tv);
    row.bound_two_tv = 2.0 * row.tv;
    audit.pairs.push_back(row);
  }
  return audit;
}

DistributionFamily profile_influences(const Graph& g, int r, const StrategyProfile& profile) {
  if (!profile.model || profile.model->variable_count() != g.vertex_count())
    throw std::invalid_argument("profile_influences: one input variable per vertex required");
  if (int(profile.functions.size()) != g.vertex_count())
    throw std::invalid_argument("profile_influences: one rule per vertex required");
  DistributionFamily family;
  family.ground = g.vertex_count();
  family.radius = r;
  family.mu.reserve(profile.functions.size());
  for (int i = 0; i < g.vertex_count(); ++i) {
    const LocalFunction& f = profile.functions[std::size_t(i)];
    VertexSet reach = ball(g, i, r);
    for (int v : f.scope)
      if (!std::binary_search(reach.begin(), reach.end(), v))
        throw std::invalid_argument("profile_influences: rule scope escapes the radius ball");
    family.mu.push_back(shapley_influence(f));
  }
  check_family(family);
  return family;
}

double profile_epsilon(const Graph& g, const StrategyProfile& profile) {
  if (int(profile.functions.size()) != g.vertex_count())
    throw std::invalid_argument("profile_epsilon: one rule per vertex required");
  if (g.ordered_edge_count() == 0) return 0.0;
  std::vector<LocalFunction> standardized;
  standardized.reserve(profile.functions.size());
  for (const LocalFunction& f : profile.functions) standardized.push_back(normalize(f));
  double total = 0.0;
  for (const Edge& e : g.edges())
    total += 0.5 * expected_square_difference(standardized[std::size_t(e.first)],
                                              standardized[std::size_t(e.second)]);
  return total / double(g.edges().size());
}

PartitionCertificate sample_certificate(const Graph& g, int r, const DistributionFamily& family,
                                        Rng& rng) {
  CouplingSample sample = grand_couple(family.mu, family.ground, rng);
  EdgeSet cut;
  for (const Edge& e : g.edges())
    if (sample.leaders[std::size_t(e.first)] != sample.leaders[std::size_t(e.second)])
      cut.push_back(e);
  std::vector<VertexSet> communities = components_after_removal(g, cut);

  std::vector<int> leaders;
  leaders.reserve(communities.size());
  std::map<int, VertexSet> ball_cache;
  for (const VertexSet& c : communities) {
    int leader = sample.leaders[std::size_t(c.front())];
    for (int v : c)
      if (sample.leaders[std::size_t(v)] != leader)
        throw std::logic_error("sample_certificate: component with mixed leaders");
    auto [it, inserted] = ball_cache.try_emplace(leader);
    if (inserted) it->second = ball(g, leader, r);
    const VertexSet& reach = it->second;
    if (!std::includes(reach.begin(), reach.end(), c.begin(), c.end()))
      throw std::logic_error("sample_certificate: component escapes its leader's ball");
    leaders.push_back(leader);
  }

  PartitionCertificate cert;
  cert.r = r;
  cert.communities = std::move(communities);
  cert.leaders = std::move(leaders);
  cert.cut_edges = std::move(cut);
  cert.epsilon = cut_fraction(g, cert.cut_edges);
  return cert;
}

CertificateEstimate extract_certificate(const Graph& g, int r, const DistributionFamily& family,
                                        long long trials, std::uint64_t seed,
                                        double epsilon_input, int keep_samples) {
  if (trials < 1) throw std::invalid_argument("extract_certificate: trials must be >= 1");
  check_family(family);
  check_supports_local(g, family);
  Rng base(seed);
  RunningStats acc;
  CertificateEstimate out;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    PartitionCertificate cert = sample_certificate(g, r, family, rng);
    acc.add(cert.epsilon);
    if (int(out.samples.size()) < keep_samples) out.samples.push_back(std::move(cert));
  }
  out.trials = trials;
  out.mean_cut_fraction = acc.mean();
  out.std_error = acc.std_error();
  out.epsilon_input = epsilon_input;
  out.bound = std::sqrt(8.0 * epsilon_input);
  return out;
}

StrategyProfile make_leader_profile(const Graph& g, const PartitionCertificate& cert) {
  VerifyResult check = verify_certificate(g, cert);
  if (!check.valid)
    throw std::invalid_argument("make_leader_profile: invalid certificate: " + check.violation);
  StrategyProfile profile;
  profile.model = uniform_binary_model(g.vertex_count());
  profile.functions.resize(std::size_t(g.vertex_count()));
  for (std::size_t k = 0; k < cert.communities.size(); ++k)
    for (int v : cert.communities[k]) {
      LocalFunction& f = profile.functions[std::size_t(v)];
      f.model = profile.model;
      f.scope = {cert.leaders[k]};
      f.table = {-1.0, 1.0};  // copy the leader's coin
    }
  return profile;
}

StrategyProfile make_perturbed_leader_profile(const Graph& g, const PartitionCertificate& cert,
                                              double self_weight) {
  VerifyResult check = verify_certificate(g, cert);
  if (!check.valid)
    throw std::invalid_argument("make_perturbed_leader_profile: invalid certificate: " +
                                check.violation);
  if (!(self_weight >= 0.0) || self_weight >= 1.0)
    throw std::invalid_argument("make_perturbed_leader_profile: self weight must be in [0, 1)");

  // Per-vertex input with four equally-likely-by-pairs values: the first two
  // mean "follow the leader" with coin -1/+1, the last two mean "play the
  // private coin" with coin -1/+1.
  auto coin = [](int value_index) { return value_index % 2 == 0 ? -1.0 : 1.0; };
  auto plays_self = [](int value_index) { return value_index >= 2; };
  double follow = (1.0 - self_weight) / 2.0;
  double self = self_weight / 2.0;
  std::vector<Variable> vars;
  vars.reserve(std::size_t(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    vars.push_back({{-1.0, 1.0, -2.0, 2.0}, {follow, follow, self, self}});

  StrategyProfile profile;
  profile.model = std::make_shared<InputModel>(std::move(vars));
  profile.functions.resize(std::size_t(g.vertex_count()));
  for (std::size_t k = 0; k < cert.communities.size(); ++k)
    for (int v : cert.communities[k]) {
      int leader = cert.leaders[k];
      LocalFunction& f = profile.functions[std::size_t(v)];
      f.model = profile.model;
      if (leader == v) {
        f.scope = {v};
        f.table.resize(4);
        for (int zv = 0; zv < 4; ++zv) f.table[std::size_t(zv)] = coin(zv);
      } else {
        f.scope = {std::min(leader, v), std::max(leader, v)};
        f.table.resize(16);
        for (int za = 0; za < 4; ++za)
          for (int zb = 0; zb < 4; ++zb) {
            int zown = f.scope[0] == v ? za : zb;
            int zlead = f.scope[0] == leader ? za : zb;
            f.table[std::size_t(za * 4 + zb)] =
                plays_self(zown) ? coin(zown) : coin(zlead);
          }
      }
    }
  return profile;
}

StrategyProfile make_iid_profile(const Graph& g) {
  StrategyProfile profile;
  profile.model = uniform_binary_model(g.vertex_count());
  profile.functions.resize(std::size_t(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    LocalFunction& f = profile.functions[std::size_t(v)];
    f.model = profile.model;
    f.scope = {v};
    f.table = {-1.0, 1.0};
  }
  return profile;
}

StrategyProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_profile: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_profile: " + path + ": " + e.what());
  }
  auto supports = j.at("supports").get<std::vector<std::vector<double>>>();
  auto probs = j.at("probs").get<std::vector<std::vector<double>>>();
  if (supports.size() != probs.size())
    throw std::invalid_argument("load_profile: supports/probs length mismatch");
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < supports.size(); ++i) vars.push_back({supports[i], probs[i]});
  StrategyProfile profile;
  profile.model = std::make_shared<InputModel>(std::move(vars));
  for (const auto& fn : j.at("functions")) {
    LocalFunction f;
    f.model = profile.model;
    f.scope = fn.at("scope").get<std::vector<int>>();
    f.table = fn.at("table").get<std::vector<double>>();
    profile.functions.push_back(std::move(f));
  }
  return profile;
}

void save_profile(const StrategyProfile& profile, const std::string& path) {
  nlohmann::json j;
  auto supports = nlohmann::json::array();
  auto probs = nlohmann::json::array();
  for (int v = 0; v < profile.model->variable_count(); ++v) {
    supports.push_back(profile.model->variable(v).support);
    probs.push_back(profile.model->variable(v).probs);
  }
  j["supports"] = std::move(supports);
  j["probs"] = std::move(probs);
  auto functions = nlohmann::json::array();
  for (const LocalFunction& f : profile.functions)
    functions.push_back(nlohmann::json{{"scope", f.scope}, {"table", f.table}});
  j["functions"] = std::move(functions);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_profile: cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace netcoord
