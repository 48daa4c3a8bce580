#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcoord/graph.hpp"

namespace netcoord {

// Witness that a graph splits into connected communities of radius at most r
// with few edges crossing between them. epsilon is the cut fraction in
// ordered-pair counts: 2 * |cut_edges| / ordered |E| (0 on edgeless graphs).
// The leader of a community need not be a member, but the community must lie
// inside the leader's radius-r ball.
struct PartitionCertificate {
  int r = 0;
  std::vector<VertexSet> communities;
  std::vector<int> leaders;  // one per community
  EdgeSet cut_edges;         // exactly the pairs whose endpoints differ in community
  double epsilon = 0.0;
};

struct VerifyResult {
  bool valid = false;
  double epsilon = 0.0;   // recomputed from the communities
  std::string violation;  // name of the first violated invariant, empty if valid
};

// Partition into stable communities plus a set of unassigned vertices that
// are isolated once deleted_edges are removed. A community is stable when
// every member has at least as many neighbors inside as outside.
struct StablePartition {
  int r = 0;
  std::vector<VertexSet> communities;
  std::vector<int> leaders;  // per community; a member or an unassigned vertex
  VertexSet unassigned;
  EdgeSet deleted_edges;
};

struct PeelTrace {
  long long steps = 0;
  // Total over communities of the ordered inside-to-outside boundary count,
  // recorded before the first removal and after each one.
  std::vector<std::int64_t> boundary_totals;
};

// Exact tilings for the canonical generators. Both demand the canonical
// vertex numbering produced by make_cycle / make_torus.
PartitionCertificate tile_cycle(const Graph& g, int r);              // (2r+1) | n
PartitionCertificate tile_torus(const Graph& g, int w, int h, int r);  // r even, (r+1) | w, h

// Seeded heuristic for arbitrary graphs: repeatedly grow a ball of radius at
// most r inside the unassigned vertices around a random center, carving the
// prefix with the smallest surface-to-volume ratio. Always yields a valid
// certificate; makes no optimality claim.
PartitionCertificate greedy_ball_carve(const Graph& g, int r, std::uint64_t seed);

// Independent re-derivation of every certificate invariant.
VerifyResult verify_certificate(const Graph& g, const PartitionCertificate& cert);

bool is_stable(const Graph& g, const VertexSet& c);

// Repeatedly banish the lowest-id vertex (in the lowest-index community)
// that has strictly more neighbors outside its community than inside, until
// every community is stable or empty. Deleted edges are the boundaries of
// the surviving communities plus all edges touching the banished set; their
// ordered count never exceeds d_max times the certificate's ordered cut.
StablePartition peel_to_stable(const Graph& g, const PartitionCertificate& cert,
                               PeelTrace* trace = nullptr);

// Empty string when valid, otherwise the violated invariant.
std::string validate_stable_partition(const Graph& g, const StablePartition& sp);

// Helpers shared by the constructors above.
EdgeSet cut_edges_of(const Graph& g, const std::vector<VertexSet>& communities);
double cut_fraction(const Graph& g, const EdgeSet& cut);
PartitionCertificate make_certificate(const Graph& g, int r,
                                      std::vector<VertexSet> communities,
                                      std::vector<int> leaders);

// File format: {"r": int, "communities": [[ids]...], "leaders": [ids],
// "cut_edges": [[i, j]...], "epsilon": real}. verify_certificate is the
// canonical validator for loaded files.
PartitionCertificate load_certificate(const std::string& path);
void save_certificate(const PartitionCertificate& cert, const std::string& path);

}  // namespace netcoord
