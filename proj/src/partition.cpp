#include "netcoord/partition.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace netcoord {

namespace {

std::vector<int> community_of(const Graph& g, const std::vector<VertexSet>& communities) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t k = 0; k < communities.size(); ++k)
    for (int v : communities[k]) {
      g.check_vertex(v);
      owner[v] = int(k);
    }
  return owner;
}

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (a.neighbors(v) != b.neighbors(v)) return false;
  return true;
}

}  // namespace

EdgeSet cut_edges_of(const Graph& g, const std::vector<VertexSet>& communities) {
  std::vector<int> owner = community_of(g, communities);
  EdgeSet cut;
  for (const Edge& e : g.edges())
    if (owner[e.first] != owner[e.second]) cut.push_back(e);
  return cut;
}

double cut_fraction(const Graph& g, const EdgeSet& cut) {
  std::int64_t ordered = g.ordered_edge_count();
  if (ordered == 0) return 0.0;
  return double(2 * std::int64_t(cut.size())) / double(ordered);
}

PartitionCertificate make_certificate(const Graph& g, int r,
                                      std::vector<VertexSet> communities,
                                      std::vector<int> leaders) {
  PartitionCertificate cert;
  cert.r = r;
  cert.communities = std::move(communities);
  cert.leaders = std::move(leaders);
  cert.cut_edges = cut_edges_of(g, cert.communities);
  cert.epsilon = cut_fraction(g, cert.cut_edges);
  return cert;
}

PartitionCertificate tile_cycle(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("tile_cycle: negative radius");
  int n = g.vertex_count();
  if (n < 3 || !same_adjacency(g, make_cycle(n)))
    throw std::invalid_argument("tile_cycle: graph is not a canonically numbered cycle");
  int c = 2 * r + 1;
  if (n % c != 0)
    throw std::invalid_argument("tile_cycle: community length 2r+1 must divide n");
  std::vector<VertexSet> communities;
  std::vector<int> leaders;
  for (int start = 0; start < n; start += c) {
    VertexSet arc(c);
    std::iota(arc.begin(), arc.end(), start);
    communities.push_back(std::move(arc));
    leaders.push_back(start + r);
  }
  return make_certificate(g, r, std::move(communities), std::move(leaders));
}

PartitionCertificate tile_torus(const Graph& g, int w, int h, int r) {
  if (r < 0 || r % 2 != 0) throw std::invalid_argument("tile_torus: radius must be even");
  if (w < 3 || h < 3 || !same_adjacency(g, make_torus(w, h)))
    throw std::invalid_argument("tile_torus: graph is not the canonical torus of given dimensions");
  int side = r + 1;
  if (w % side != 0 || h % side != 0)
    throw std::invalid_argument("tile_torus: r+1 must divide both torus dimensions");
  auto id = [w](int x, int y) { return y * w + x; };
  std::vector<VertexSet> communities;
  std::vector<int> leaders;
  for (int ty = 0; ty < h / side; ++ty)
    for (int tx = 0; tx < w / side; ++tx) {
      VertexSet tile;
      tile.reserve(std::size_t(side) * side);
      for (int dy = 0; dy < side; ++dy)
        for (int dx = 0; dx < side; ++dx) tile.push_back(id(tx * side + dx, ty * side + dy));
      std::sort(tile.begin(), tile.end());
      communities.push_back(std::move(tile));
      leaders.push_back(id(tx * side + r / 2, ty * side + r / 2));
    }
  return make_certificate(g, r, std::move(communities), std::move(leaders));
}

PartitionCertificate greedy_ball_carve(const Graph& g, int r, std::uint64_t seed) {
  if (r < 0) throw std::invalid_argument("greedy_ball_carve: negative radius");
  int n = g.vertex_count();
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[std::size_t(rng.next_below(std::uint64_t(i) + 1))]);

  std::vector<char> assigned(n, 0);
  std::vector<int> mark(n, 0);  // 0 = untouched, 1 = queued, 2 = in the piece
  std::vector<VertexSet> communities;
  std::vector<int> leaders;

  for (int center : order) {
    if (assigned[center]) continue;
    // Grow BFS layers through unassigned vertices only, tracking the ordered
    // inside-to-outside boundary of each prefix in the full graph. Keep the
    // prefix with the smallest surface-to-volume ratio; ties favor the
    // larger piece, so a whole component wins whenever it fits in the ball.
    std::vector<int> piece{center};
    std::vector<int> touched{center};
    mark[center] = 2;
    std::int64_t boundary = g.degree(center);
    double best_ratio = double(boundary);
    std::size_t best_size = 1;
    std::vector<int> frontier{center};
    for (int depth = 1; depth <= r && !frontier.empty(); ++depth) {
      std::vector<int> next;
      for (int v : frontier)
        for (int u : g.neighbors(v))
          if (!assigned[u] && mark[u] == 0) {
            mark[u] = 1;
            next.push_back(u);
            touched.push_back(u);
          }
      if (next.empty()) break;
      for (int u : next) {
        boundary += g.degree(u);
        for (int x : g.neighbors(u))
          if (mark[x] == 2) boundary -= 2;
        mark[u] = 2;
        piece.push_back(u);
      }
      double ratio = double(boundary) / double(piece.size());
      if (ratio <= best_ratio) {
        best_ratio = ratio;
        best_size = piece.size();
      }
      frontier = std::move(next);
    }
    VertexSet community(piece.begin(), piece.begin() + best_size);
    for (int v : touched) mark[v] = 0;
    for (int v : community) assigned[v] = 1;
    std::sort(community.begin(), community.end());
    communities.push_back(std::move(community));
    leaders.push_back(center);
  }
  return make_certificate(g, r, std::move(communities), std::move(leaders));
}

VerifyResult verify_certificate(const Graph& g, const PartitionCertificate& cert) {
  VerifyResult out;
  int n = g.vertex_count();
  if (cert.communities.size() != cert.leaders.size())
    return {false, 0.0, "leader-count-mismatch"};
  if (cert.r < 0) return {false, 0.0, "negative-radius"};

  std::vector<char> covered(n, 0);
  for (const VertexSet& c : cert.communities) {
    if (c.empty()) return {false, 0.0, "empty-community"};
    for (std::size_t i = 0; i < c.size(); ++i) {
      int v = c[i];
      if (v < 0 || v >= n) return {false, 0.0, "vertex-out-of-range"};
      if (i > 0 && c[i] <= c[i - 1]) return {false, 0.0, "community-not-sorted"};
      if (covered[v]) return {false, 0.0, "overlapping-communities"};
      covered[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return {false, 0.0, "uncovered-vertex"};

  for (std::size_t k = 0; k < cert.communities.size(); ++k) {
    int leader = cert.leaders[k];
    if (leader < 0 || leader >= n) return {false, 0.0, "leader-out-of-range"};
    VertexSet reach = ball(g, leader, cert.r);
    if (!std::includes(reach.begin(), reach.end(), cert.communities[k].begin(),
                       cert.communities[k].end()))
      return {false, 0.0, "radius-violation"};
  }

  EdgeSet derived = cut_edges_of(g, cert.communities);
  EdgeSet declared = cert.cut_edges;
  std::sort(declared.begin(), declared.end());
  if (declared != derived) return {false, 0.0, "cut-set-mismatch"};

  // Connectivity inside the community, i.e. in the graph minus the cut.
  std::vector<char> member(n, 0);
  for (const VertexSet& c : cert.communities) {
    for (int v : c) member[v] = 1;
    std::deque<int> queue{c.front()};
    std::vector<char> seen(n, 0);
    seen[c.front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v))
        if (member[u] && !seen[u]) {
          seen[u] = 1;
          ++reached;
          queue.push_back(u);
        }
    }
    for (int v : c) member[v] = 0;
    if (reached != c.size()) return {false, 0.0, "community-disconnected"};
  }

  double epsilon = cut_fraction(g, derived);
  if (std::abs(epsilon - cert.epsilon) > 1e-12) return {false, epsilon, "epsilon-mismatch"};
  return {true, epsilon, ""};
}

bool is_stable(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw std::invalid_argument("is_stable: empty set");
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : c) {
    g.check_vertex(v);
    in[v] = 1;
  }
  for (int v : c) {
    int inside = 0;
    for (int u : g.neighbors(v))
      if (in[u]) ++inside;
    int outside = g.degree(v) - inside;
    if (inside < outside) return false;
  }
  return true;
}

StablePartition peel_to_stable(const Graph& g, const PartitionCertificate& cert,
                               PeelTrace* trace) {
  VerifyResult check = verify_certificate(g, cert);
  if (!check.valid)
    throw std::invalid_argument("peel_to_stable: invalid certificate: " + check.violation);

  int n = g.vertex_count();
  std::vector<int> owner = community_of(g, cert.communities);
  std::vector<VertexSet> communities = cert.communities;

  auto boundary_total = [&]() {
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
      if (owner[v] < 0) continue;
      for (int u : g.neighbors(v))
        if (owner[u] != owner[v]) ++total;
    }
    return total;
  };
  if (trace) {
    trace->steps = 0;
    trace->boundary_totals = {boundary_total()};
  }

  // Lowest-id unstable vertex of the lowest-index community first; the bound
  // does not depend on the order, fixing it gives determinism.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < communities.size() && !changed; ++k) {
      for (int v : communities[k]) {
        int inside = 0;
        for (int u : g.neighbors(v))
          if (owner[u] == int(k)) ++inside;
        if (g.degree(v) - inside > inside) {
          owner[v] = -1;
          auto& c = communities[k];
          c.erase(std::lower_bound(c.begin(), c.end(), v));
          if (trace) {
            ++trace->steps;
            trace->boundary_totals.push_back(boundary_total());
          }
          changed = true;
          break;
        }
      }
    }
  }

  StablePartition sp;
  sp.r = cert.r;
  for (std::size_t k = 0; k < communities.size(); ++k)
    if (!communities[k].empty()) {
      sp.communities.push_back(communities[k]);
      sp.leaders.push_back(cert.leaders[k]);
    }
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0) sp.unassigned.push_back(v);
  for (const Edge& e : g.edges())
    if (owner[e.first] != owner[e.second] || owner[e.first] < 0) sp.deleted_edges.push_back(e);
  return sp;
}

std::string validate_stable_partition(const Graph& g, const StablePartition& sp) {
  int n = g.vertex_count();
  if (sp.communities.size() != sp.leaders.size()) return "leader-count-mismatch";
  std::vector<int> owner(n, -2);
  for (int v : sp.unassigned) {
    if (v < 0 || v >= n || owner[v] != -2) return "unassigned-malformed";
    owner[v] = -1;
  }
  for (std::size_t k = 0; k < sp.communities.size(); ++k) {
    if (sp.communities[k].empty()) return "empty-community";
    for (int v : sp.communities[k]) {
      if (v < 0 || v >= n || owner[v] != -2) return "not-a-partition";
      owner[v] = int(k);
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -2) return "not-a-partition";

  for (const VertexSet& c : sp.communities)
    if (!is_stable(g, c)) return "unstable-community";

  std::vector<char> deleted(n, 0);
  EdgeSet sorted = sp.deleted_edges;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted)
    if (g.edge_index(e.first, e.second) < 0) return "deleted-pair-not-an-edge";
  for (const Edge& e : g.edges()) {
    bool removed = std::binary_search(sorted.begin(), sorted.end(), e);
    bool touches_unassigned = owner[e.first] < 0 || owner[e.second] < 0;
    bool crossing = touches_unassigned || owner[e.first] != owner[e.second];
    // Deleted set must be exactly the community boundaries plus all edges
    // touching the unassigned vertices.
    if (crossing && !removed)
      return touches_unassigned ? "unassigned-vertex-not-isolated" : "cut-edge-not-deleted";
    if (!crossing && removed) return "internal-edge-deleted";
  }

  for (std::size_t k = 0; k < sp.communities.size(); ++k) {
    int leader = sp.leaders[k];
    if (leader < 0 || leader >= n) return "leader-out-of-range";
    if (owner[leader] != int(k) && owner[leader] != -1) return "leader-not-member-or-unassigned";
    VertexSet reach = ball(g, leader, sp.r);
    if (!std::includes(reach.begin(), reach.end(), sp.communities[k].begin(),
                       sp.communities[k].end()))
      return "radius-violation";
  }
  return "";
}

PartitionCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_certificate: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_certificate: " + path + ": " + e.what());
  }
  PartitionCertificate cert;
  cert.r = j.at("r").get<int>();
  for (const auto& c : j.at("communities")) {
    VertexSet community = c.get<VertexSet>();
    std::sort(community.begin(), community.end());
    cert.communities.push_back(std::move(community));
  }
  cert.leaders = j.at("leaders").get<std::vector<int>>();
  for (const auto& pair : j.at("cut_edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("load_certificate: malformed cut edge");
    cert.cut_edges.push_back(make_edge(pair[0].get<int>(), pair[1].get<int>()));
  }
  std::sort(cert.cut_edges.begin(), cert.cut_edges.end());
  cert.epsilon = j.at("epsilon").get<double>();
  return cert;
}

void save_certificate(const PartitionCertificate& cert, const std::string& path) {
  nlohmann::json j;
  j["r"] = cert.r;
  auto communities = nlohmann::json::array();
  for (const VertexSet& c : cert.communities) communities.push_back(c);
  j["communities"] = std::move(communities);
  j["leaders"] = cert.leaders;
  auto cut = nlohmann::json::array();
  for (const Edge& e : cert.cut_edges) cut.push_back({e.first, e.second});
  j["cut_edges"] = std::move(cut);
  j["epsilon"] = cert.epsilon;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_certificate: cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace netcoord
