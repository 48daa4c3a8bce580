#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netcoord/graph.hpp"
#include "netcoord/influence.hpp"
#include "netcoord/partition.hpp"
#include "netcoord/rng.hpp"
#include "netcoord/stats.hpp"

namespace netcoord {

// One probability distribution per vertex over the vertex set, each
// supported inside the vertex's radius-r ball.
struct DistributionFamily {
  int ground = 0;  // distributions live on {0, ..., ground-1}
  int radius = 0;
  std::vector<std::vector<double>> mu;
};

// One joint draw of the exponential race: a shared family of unit
// exponentials (E_k) and, per distribution, the winner
// argmin_k E_k / mu_i(k) over the support of mu_i. Winners have the correct
// marginal law and disagree between two distributions with probability at
// most 2*TV/(1+TV).
struct CouplingSample {
  std::vector<double> exponentials;
  std::vector<int> leaders;
};

CouplingSample grand_couple(const std::vector<std::vector<double>>& mu, int ground, Rng& rng);
CouplingSample grand_couple(const DistributionFamily& family, std::uint64_t seed);

struct PairAudit {
  int a = 0;
  int b = 0;
  double empirical_mismatch = 0.0;
  double tv = 0.0;
  double bound_sharp = 0.0;   // 2*TV / (1 + TV)
  double bound_two_tv = 0.0;  // 2*TV
};

struct CollisionAudit {
  long long trials = 0;
  std::vector<PairAudit> pairs;
  std::vector<int> audited;  // distinct indices appearing in the pairs
  std::vector<std::vector<long long>> marginal_counts;  // aligned with audited
};

CollisionAudit coupling_collision_audit(const DistributionFamily& family,
                                        const std::vector<std::pair<int, int>>& pairs,
                                        long long trials, std::uint64_t seed);

// A local strategy profile: one independent input variable per vertex and,
// per vertex, an action rule over the variables in its communication ball.
struct StrategyProfile {
  std::shared_ptr<const InputModel> model;  // variable i belongs to vertex i
  std::vector<LocalFunction> functions;     // indexed by vertex
};

// Influence distribution of each vertex's rule; rejects rules whose scope
// escapes the radius-r ball.
DistributionFamily profile_influences(const Graph& g, int r, const StrategyProfile& profile);

// Average over ordered neighbor pairs of (1/2) E[(X_i - X_j)^2], computed
// exhaustively edge by edge; for coin-valued rules this equals the expected
// inefficiency of the profile.
double profile_epsilon(const Graph& g, const StrategyProfile& profile);

// One coupled draw turned into a certificate: cut the edges whose endpoints
// picked different leaders, take components, and label each component with
// its members' common leader. Every component must land inside the leader's
// radius-r ball; a violation signals a bug and throws logic_error.
PartitionCertificate sample_certificate(const Graph& g, int r, const DistributionFamily& family,
                                        Rng& rng);

struct CertificateEstimate {
  long long trials = 0;
  double mean_cut_fraction = 0.0;  // ordered deleted pairs / ordered |E|
  double std_error = 0.0;
  double epsilon_input = 0.0;
  double bound = 0.0;  // sqrt(8 * epsilon_input)
  std::vector<PartitionCertificate> samples;
};

CertificateEstimate extract_certificate(const Graph& g, int r, const DistributionFamily& family,
                                        long long trials, std::uint64_t seed,
                                        double epsilon_input, int keep_samples = 1);

// Built-in profiles.
StrategyProfile make_leader_profile(const Graph& g, const PartitionCertificate& cert);
// Each non-leader follows its leader's coin with probability 1 - self_weight
// and its own private coin otherwise, using an enlarged per-vertex input.
StrategyProfile make_perturbed_leader_profile(const Graph& g, const PartitionCertificate& cert,
                                              double self_weight);
StrategyProfile make_iid_profile(const Graph& g);

// File format: {"supports": [[vals]...], "probs": [[p]...],
// "functions": [{"scope": [...], "table": [...]}, ...]} with one function
// per vertex, sharing the model.
StrategyProfile load_profile(const std::string& path);
void save_profile(const StrategyProfile& profile, const std::string& path);

}  // namespace netcoord
