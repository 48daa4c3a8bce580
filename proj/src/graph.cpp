#include "netcoord/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace netcoord {

Graph::Graph(int n, EdgeSet edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::sort(edges.begin(), edges.end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (i == j) throw std::invalid_argument("graph: self-loop rejected");
    if (i > j) throw std::invalid_argument("graph: edge must be stored as (i, j) with i < j");
    if (e > 0 && edges[e] == edges[e - 1])
      throw std::invalid_argument("graph: duplicate edge rejected");
  }
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  adj_edge_index_.assign(n_, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [i, j] = edges_[e];
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    max_degree_ = std::max(max_degree_, int(adj_[v].size()));
  }
  for (int v = 0; v < n_; ++v) {
    adj_edge_index_[v].reserve(adj_[v].size());
    for (int u : adj_[v]) {
      auto it = std::lower_bound(edges_.begin(), edges_.end(), make_edge(v, u));
      adj_edge_index_[v].push_back(int(it - edges_.begin()));
    }
  }
}

int Graph::edge_index(int i, int j) const {
  if (i == j) return -1;
  Edge e = make_edge(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return int(it - edges_.begin());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n must be at least 3");
  EdgeSet edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph make_torus(int w, int h) {
  if (w < 3 || h < 3) throw std::invalid_argument("make_torus: dimensions must be at least 3");
  auto id = [w](int x, int y) { return y * w + x; };
  EdgeSet edges;
  edges.reserve(std::size_t(2) * w * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      edges.push_back(make_edge(id(x, y), id((x + 1) % w, y)));
      edges.push_back(make_edge(id(x, y), id(x, (y + 1) % h)));
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(w * h, std::move(edges));
}

Graph make_binary_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("make_binary_tree: negative depth");
  if (depth > 22) throw std::invalid_argument("make_binary_tree: depth too large");
  int n = (1 << (depth + 1)) - 1;
  EdgeSet edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(v, (v - 1) / 2));
  return Graph(n, std::move(edges));
}

Graph make_erdos_renyi(int n, double expected_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("make_erdos_renyi: n must be at least 2");
  if (!(expected_degree > 0.0) || expected_degree >= double(n))
    throw std::invalid_argument("make_erdos_renyi: expected degree must be in (0, n)");
  double p = expected_degree / double(n);
  Rng rng(seed);
  EdgeSet edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  g.check_vertex(source);
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

VertexSet ball(const Graph& g, int center, int radius) {
  g.check_vertex(center);
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{center};
  dist[center] = 0;
  VertexSet out{center};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        out.push_back(u);
        queue.push_back(u);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SetRadius set_radius(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("set_radius: empty set");
  int best_radius = -1;
  int best_center = -1;
  for (int c : s) {
    g.check_vertex(c);
    std::vector<int> dist = bfs_distances(g, c);
    int radius = 0;
    bool ok = true;
    for (int v : s) {
      if (dist[v] < 0) { ok = false; break; }
      radius = std::max(radius, dist[v]);
    }
    if (ok && (best_radius < 0 || radius < best_radius)) {
      best_radius = radius;
      best_center = c;
    }
  }
  if (best_radius < 0)
    throw std::invalid_argument("set_radius: set is not contained in one component");
  return SetRadius{best_radius, best_center};
}

EdgeSet boundary(const Graph& g, const VertexSet& f) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : f) {
    g.check_vertex(v);
    in[v] = 1;
  }
  EdgeSet out;
  for (int v : f)
    for (int u : g.neighbors(v))
      if (!in[u]) out.push_back(make_edge(v, u));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ordered_boundary_count(const Graph& g, const VertexSet& f) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : f) {
    g.check_vertex(v);
    in[v] = 1;
  }
  std::int64_t count = 0;
  for (int v : f)
    for (int u : g.neighbors(v))
      if (!in[u]) ++count;
  return count;
}

std::vector<VertexSet> components_after_removal(const Graph& g, const EdgeSet& d) {
  std::vector<char> removed(g.edges().size(), 0);
  for (const Edge& e : d) {
    int idx = g.edge_index(e.first, e.second);
    if (idx < 0) throw std::invalid_argument("components_after_removal: pair is not an edge");
    removed[idx] = 1;
  }
  std::vector<VertexSet> components;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
    VertexSet comp{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      const auto& nbrs = g.neighbors(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (removed[g.edge_index_at(v, int(k))]) continue;
        int u = nbrs[k];
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
          queue.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_graph: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("load_graph: " + path + ": " + e.what());
  }
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("load_graph: missing \"n\" or \"edges\"");
  int n = j.at("n").get<int>();
  EdgeSet edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("load_graph: malformed edge entry");
    int a = pair[0].get<int>();
    int b = pair[1].get<int>();
    if (a >= b) throw std::invalid_argument("load_graph: edges must satisfy i < j");
    edges.push_back({a, b});
  }
  LoadedGraph out{Graph(n, std::move(edges)), {}};
  if (j.contains("family")) {
    const auto& f = j.at("family");
    out.family.kind = f.value("kind", std::string{});
    out.family.n = f.value("n", 0);
    out.family.w = f.value("w", 0);
    out.family.h = f.value("h", 0);
    out.family.depth = f.value("depth", 0);
    out.family.expected_degree = f.value("expected_degree", 0.0);
    out.family.seed = f.value("seed", std::uint64_t{0});
  }
  return out;
}

void save_graph(const Graph& g, const FamilyTag& family, const std::string& path) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  if (!family.kind.empty()) {
    nlohmann::json f;
    f["kind"] = family.kind;
    if (family.kind == "cycle") f["n"] = family.n;
    if (family.kind == "torus") { f["w"] = family.w; f["h"] = family.h; }
    if (family.kind == "tree") f["depth"] = family.depth;
    if (family.kind == "er") {
      f["n"] = family.n;
      f["expected_degree"] = family.expected_degree;
      f["seed"] = family.seed;
    }
    j["family"] = std::move(f);
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_graph: cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace netcoord
