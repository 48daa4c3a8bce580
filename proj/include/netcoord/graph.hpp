#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netcoord/rng.hpp"

namespace netcoord {

// Sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

// Unordered edge stored as (i, j) with i < j.
using Edge = std::pair<int, int>;

// Sorted lexicographically, no duplicates; every pair must be a real edge of
// the ambient graph.
using EdgeSet = std::vector<Edge>;

inline Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

// Finite undirected simple graph, immutable once built. Adjacency lists are
// sorted. Edge-count ratios throughout the library are stated over ordered
// pairs: ordered |E| = sum of degrees = 2 * edges().size().
class Graph {
public:
  Graph() = default;
  Graph(int n, EdgeSet edges);  // validates range, simplicity, uniqueness

  int vertex_count() const { return n_; }
  int degree(int v) const { return int(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int max_degree() const { return max_degree_; }
  std::int64_t ordered_edge_count() const { return 2 * std::int64_t(edges_.size()); }
  const EdgeSet& edges() const { return edges_; }

  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }
  // Index into edges() of the unordered pair {i, j}; -1 if absent.
  int edge_index(int i, int j) const;
  // Edge index of the k-th entry of neighbors(v).
  int edge_index_at(int v, int k) const { return adj_edge_index_[v][k]; }

  void check_vertex(int v) const;

private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> adj_edge_index_;
  EdgeSet edges_;
};

// Generators. All are pure functions of their parameters (and seed).
Graph make_cycle(int n);                 // n >= 3, vertex i ~ (i +- 1) mod n
Graph make_torus(int w, int h);          // w, h >= 3, vertex id = y*w + x
Graph make_binary_tree(int depth);       // complete rooted tree, 2^(depth+1)-1 vertices
Graph make_erdos_renyi(int n, double expected_degree, std::uint64_t seed);

// Metric primitives.
std::vector<int> bfs_distances(const Graph& g, int source);  // -1 if unreachable
VertexSet ball(const Graph& g, int center, int radius);

struct SetRadius {
  int radius;
  int center;  // smallest member attaining the radius
};
// Smallest r such that s fits in the radius-r ball of one of its members,
// distances measured in the full graph.
SetRadius set_radius(const Graph& g, const VertexSet& s);

// Unordered pairs {i, j} with exactly one endpoint in f.
EdgeSet boundary(const Graph& g, const VertexSet& f);
// Number of ordered pairs (i, j) with i in f and j outside f.
std::int64_t ordered_boundary_count(const Graph& g, const VertexSet& f);

// Connected components of g with the edges in d removed, as a partition
// ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, const EdgeSet& d);

// File format: {"n": int, "edges": [[i, j], ...]} with i < j, plus an
// optional "family" object recording generator provenance.
struct FamilyTag {
  std::string kind;  // "cycle", "torus", "tree", "er", or "" when untagged
  int n = 0;
  int w = 0;
  int h = 0;
  int depth = 0;
  double expected_degree = 0.0;
  std::uint64_t seed = 0;
};

struct LoadedGraph {
  Graph graph;
  FamilyTag family;
};

LoadedGraph load_graph(const std::string& path);
void save_graph(const Graph& g, const FamilyTag& family, const std::string& path);

}  // namespace netcoord
