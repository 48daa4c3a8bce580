#include "netcoord/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace netcoord {

namespace {

std::vector<int> owner_map(const Graph& g, const std::vector<VertexSet>& communities) {
  std::vector<int> owner(g.vertex_count(), -1);
  for (std::size_t k = 0; k < communities.size(); ++k)
    for (int v : communities[k]) owner[v] = int(k);
  return owner;
}

std::int64_t mismatch_pairs(const Graph& g, const ActionProfile& a) {
  std::int64_t mismatched = 0;
  for (const Edge& e : g.edges())
    if (a[e.first] != a[e.second]) ++mismatched;
  return mismatched;
}

void require_valid(const Graph& g, const PartitionCertificate& cert) {
  VerifyResult check = verify_certificate(g, cert);
  if (!check.valid)
    throw std::invalid_argument("certificate rejected: " + check.violation);
}

}  // namespace

double inefficiency(const Graph& g, const ActionProfile& a) {
  if (int(a.size()) != g.vertex_count())
    throw std::invalid_argument("inefficiency: profile length mismatch");
  if (g.ordered_edge_count() == 0)
    throw std::domain_error("inefficiency: undefined on a graph with no edges");
  return 4.0 * double(mismatch_pairs(g, a)) / double(g.ordered_edge_count());
}

ActionProfile sample_private_leader(const Graph& g, const PartitionCertificate& cert, Rng& rng) {
  std::vector<int> owner = owner_map(g, cert.communities);
  std::vector<std::int8_t> coin(cert.communities.size());
  for (auto& c : coin) c = std::int8_t(rng.next_sign());
  ActionProfile a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) a[v] = coin[owner[v]];
  return a;
}

MonteCarloStats simulate_private_leader(const Graph& g, const PartitionCertificate& cert,
                                        long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("simulate_private_leader: trials must be >= 1");
  require_valid(g, cert);
  Rng base(seed);
  RunningStats acc;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    acc.add(inefficiency(g, sample_private_leader(g, cert, rng)));
  }
  return finalize_stats(acc, seed);
}

double exact_private_leader(const Graph& g, const PartitionCertificate& cert) {
  require_valid(g, cert);
  return cut_fraction(g, cert.cut_edges);
}

ActionProfile sample_public_stable(const Graph& g, const StablePartition& sp, Rng& rng) {
  std::vector<int> owner = owner_map(g, sp.communities);
  std::vector<std::int8_t> coin(sp.communities.size());
  for (auto& c : coin) c = std::int8_t(rng.next_sign());
  ActionProfile a(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    a[v] = owner[v] >= 0 ? coin[owner[v]] : std::int8_t(rng.next_sign());
  return a;
}

MonteCarloStats simulate_public_stable(const Graph& g, const StablePartition& sp,
                                       long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("simulate_public_stable: trials must be >= 1");
  std::string violation = validate_stable_partition(g, sp);
  if (!violation.empty())
    throw std::invalid_argument("stable partition rejected: " + violation);
  Rng base(seed);
  RunningStats acc;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    acc.add(inefficiency(g, sample_public_stable(g, sp, rng)));
  }
  return finalize_stats(acc, seed);
}

double exact_public_stable(const Graph& g, const StablePartition& sp) {
  std::int64_t ordered = g.ordered_edge_count();
  if (ordered == 0) return 0.0;
  return double(2 * std::int64_t(sp.deleted_edges.size())) / double(ordered);
}

LocalTransitiveResult simulate_local_transitive(const Graph& g, int w, int h, int r,
                                                long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("simulate_local_transitive: trials must be >= 1");
  if (r < 0 || r % 2 != 0)
    throw std::invalid_argument("simulate_local_transitive: radius must be even");
  {
    Graph reference = make_torus(w, h);
    if (g.vertex_count() != reference.vertex_count())
      throw std::invalid_argument("simulate_local_transitive: graph is not the given torus");
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.neighbors(v) != reference.neighbors(v))
        throw std::invalid_argument("simulate_local_transitive: graph is not the given torus");
  }
  int side = r + 1;
  if (w % side != 0 || h % side != 0)
    throw std::invalid_argument("simulate_local_transitive: r+1 must divide both dimensions");

  int n = w * h;
  auto id = [w](int x, int y) { return y * w + x; };

  // One square per translate; the square anchored at (ox, oy) covers cells
  // (ox..ox+r, oy..oy+r) modulo the torus. M counts squares through a vertex.
  long long square_count = n;
  long long m_per_vertex = std::int64_t(side) * side;

  VertexSet origin_tile;
  for (int dy = 0; dy < side; ++dy)
    for (int dx = 0; dx < side; ++dx) origin_tile.push_back(id(dx, dy));
  std::sort(origin_tile.begin(), origin_tile.end());
  double tile_epsilon =
      double(ordered_boundary_count(g, origin_tile)) / double(origin_tile.size());

  double p = 1.0;
  if (tile_epsilon > 0.0 && tile_epsilon < 1.0)
    p = selection_probability(m_per_vertex, tile_epsilon);
  double expected_uncovered = std::pow(1.0 - p, double(m_per_vertex));
  double deleted_bound = p * double(m_per_vertex) * tile_epsilon + expected_uncovered;

  Rng base(seed);
  RunningStats ineff_acc, deleted_acc, uncovered_acc;

  std::vector<char> selected(static_cast<std::size_t>(square_count));
  std::vector<char> covered(n);
  std::vector<char> deleted(g.edges().size());
  std::vector<double> aux(n);
  std::vector<std::int8_t> coin(n);
  std::vector<int> component_leader(n);

  auto inside_square = [&](int ox, int oy, int x, int y) {
    int dx = x - ox;
    if (dx < 0) dx += w;
    int dy = y - oy;
    if (dy < 0) dy += h;
    return dx <= r && dy <= r;
  };

  for (long long t = 0; t < trials; ++t) {
    Rng rng = base.split(std::uint64_t(t));
    for (long long s = 0; s < square_count; ++s) selected[s] = rng.next_unit() < p;
    for (int v = 0; v < n; ++v) aux[v] = rng.next_unit();
    for (int v = 0; v < n; ++v) coin[v] = std::int8_t(rng.next_sign());

    std::fill(covered.begin(), covered.end(), 0);
    std::fill(deleted.begin(), deleted.end(), 0);
    for (long long s = 0; s < square_count; ++s) {
      if (!selected[s]) continue;
      int ox = int(s) % w, oy = int(s) / w;
      for (int dy = 0; dy < side; ++dy)
        for (int dx = 0; dx < side; ++dx) {
          int x = (ox + dx) % w, y = (oy + dy) % h;
          int v = id(x, y);
          covered[v] = 1;
          const auto& nbrs = g.neighbors(v);
          for (std::size_t k = 0; k < nbrs.size(); ++k) {
            int u = nbrs[k];
            if (!inside_square(ox, oy, u % w, u / w))
              deleted[g.edge_index_at(v, int(k))] = 1;
          }
        }
    }
    int uncovered = 0;
    for (int v = 0; v < n; ++v) {
      if (covered[v]) continue;
      ++uncovered;
      const auto& nbrs = g.neighbors(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) deleted[g.edge_index_at(v, int(k))] = 1;
    }

    // Components of the remaining graph; each follows the coin of its member
    // with the highest auxiliary draw (ties to the lowest id).
    std::fill(component_leader.begin(), component_leader.end(), -1);
    std::deque<int> queue;
    std::vector<int> members;
    for (int s = 0; s < n; ++s) {
      if (component_leader[s] >= 0) continue;
      members.assign(1, s);
      component_leader[s] = s;
      queue.push_back(s);
      int leader = s;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        const auto& nbrs = g.neighbors(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
          if (deleted[g.edge_index_at(v, int(k))]) continue;
          int u = nbrs[k];
          if (component_leader[u] < 0) {
            component_leader[u] = s;
            members.push_back(u);
            queue.push_back(u);
          }
        }
      }
      for (int v : members)
        if (aux[v] > aux[leader]) leader = v;
      for (int v : members) component_leader[v] = leader;
    }

    std::int64_t mismatched = 0;
    std::int64_t deleted_count = 0;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      if (deleted[e]) ++deleted_count;
      const Edge& edge = g.edges()[e];
      if (coin[component_leader[edge.first]] != coin[component_leader[edge.second]]) ++mismatched;
    }
    ineff_acc.add(4.0 * double(mismatched) / double(g.ordered_edge_count()));
    deleted_acc.add(double(deleted_count) / double(g.edges().size()));
    uncovered_acc.add(double(uncovered) / double(n));
  }

  LocalTransitiveResult out;
  out.inefficiency = finalize_stats(ineff_acc, seed);
  out.deleted_fraction = finalize_stats(deleted_acc, seed);
  out.uncovered_rate = finalize_stats(uncovered_acc, seed);
  out.selection_p = p;
  out.squares_per_vertex = m_per_vertex;
  out.tile_epsilon = tile_epsilon;
  out.deleted_bound = deleted_bound;
  out.expected_uncovered = expected_uncovered;
  return out;
}

double secret_share(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("secret_share: empty share list");
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0) || v >= 1.0)
      throw std::invalid_argument("secret_share: shares must lie in [0, 1)");
    sum += v;
  }
  return sum - std::floor(sum);
}

double selection_probability(long long m, double epsilon) {
  if (m < 1) throw std::invalid_argument("selection_probability: m must be positive");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("selection_probability: epsilon must lie in (0, 1)");
  return std::min(std::log(1.0 / epsilon) / double(m), 1.0);
}

double cycle_optimal_inefficiency(int r) {
  if (r < 0) throw std::invalid_argument("cycle_optimal_inefficiency: negative radius");
  return 1.0 / double(2 * r + 1);
}

}  // namespace netcoord
