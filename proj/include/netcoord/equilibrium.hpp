#pragma once

#include <cstdint>
#include <vector>

#include "netcoord/graph.hpp"
#include "netcoord/partition.hpp"
#include "netcoord/rng.hpp"
#include "netcoord/stats.hpp"

namespace netcoord {

// One action per vertex, each -1 or +1.
using ActionProfile = std::vector<std::int8_t>;

struct TrialOutcome {
  ActionProfile actions;
  double inefficiency = 0.0;
};

// Twice the fraction of ordered neighbor pairs that mismatch: 0 when all
// agents coordinate, 2 when all neighbors miscoordinate. Throws on graphs
// with no edges, where the metric is undefined.
double inefficiency(const Graph& g, const ActionProfile& a);

// One sampled round of leader play: each community copies its leader's
// private fair coin. The messaging layer is collapsed; only the resulting
// action distribution is simulated.
ActionProfile sample_private_leader(const Graph& g, const PartitionCertificate& cert, Rng& rng);

// Leader play over a stable partition with public coins: each community
// follows its own fair coin and every unassigned vertex flips an
// independent one.
ActionProfile sample_public_stable(const Graph& g, const StablePartition& sp, Rng& rng);

MonteCarloStats simulate_private_leader(const Graph& g, const PartitionCertificate& cert,
                                        long long trials, std::uint64_t seed);

// Closed form of the expectation above: the ordered cut fraction. Every
// cross-community pair mismatches with probability one half, contributing
// 2 * (1/2) / |E| each.
double exact_private_leader(const Graph& g, const PartitionCertificate& cert);

MonteCarloStats simulate_public_stable(const Graph& g, const StablePartition& sp,
                                       long long trials, std::uint64_t seed);

// Closed form: ordered |deleted_edges| / ordered |E|; every deleted pair
// mismatches with probability exactly one half.
double exact_public_stable(const Graph& g, const StablePartition& sp);

// Decentralized tile-selection play on a torus. Every translated
// (r+1)x(r+1) square is selected independently with the same probability;
// boundaries of selected squares and all edges of uncovered vertices are
// removed; each remaining component follows the coin of its member with the
// highest auxiliary draw.
struct LocalTransitiveResult {
  MonteCarloStats inefficiency;
  MonteCarloStats deleted_fraction;  // ordered deleted pairs / ordered |E|
  MonteCarloStats uncovered_rate;    // fraction of vertices in no selected square
  double selection_p = 0.0;
  long long squares_per_vertex = 0;  // number of squares containing a fixed vertex
  double tile_epsilon = 0.0;         // ordered surface-to-volume ratio of one square
  double deleted_bound = 0.0;        // p * M * tile_epsilon + (1 - p)^M
  double expected_uncovered = 0.0;   // (1 - p)^M
};
LocalTransitiveResult simulate_local_transitive(const Graph& g, int w, int h, int r,
                                                long long trials, std::uint64_t seed);

// Fractional part of the sum of shares in [0, 1). With at least one share
// uniform, the result is uniform no matter what the other shares are.
double secret_share(const std::vector<double>& values);

// min(ln(1/epsilon) / m, 1); natural log. epsilon must lie in (0, 1).
double selection_probability(long long m, double epsilon);

// Best achievable expected inefficiency of any r-local action-symmetric play
// on a long cycle; the tiling with arcs of length 2r+1 attains it.
double cycle_optimal_inefficiency(int r);

}  // namespace netcoord
