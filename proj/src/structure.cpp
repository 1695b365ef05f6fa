#include "sg/structure.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <stdexcept>

#include "graph_detail.hpp"

namespace sg {

using detail::bit;
using detail::for_each_bit;

namespace {

std::vector<uint64_t> adjacency_rows(const SignedGraph& g) {
  std::vector<uint64_t> adj(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  return adj;
}

std::vector<uint64_t> negative_rows(const SignedGraph& g) {
  std::vector<uint64_t> neg(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) neg[static_cast<size_t>(v)] = g.negative_neighbors(v);
  return neg;
}

// Distances from start within `allowed`; -1 when unreachable.
std::vector<int> bfs_distances(int n, const uint64_t* adj, int start, uint64_t allowed,
                               uint64_t skip_edge_from = ~uint64_t{0},
                               uint64_t skip_edge_to = 0) {
  std::vector<int> dist(static_cast<size_t>(n), -1);
  if (!(allowed & bit(start))) return dist;
  dist[static_cast<size_t>(start)] = 0;
  std::vector<int> queue{start};
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    uint64_t nbrs = adj[u] & allowed;
    if (bit(u) == skip_edge_from) nbrs &= ~skip_edge_to;
    if (bit(u) == skip_edge_to) nbrs &= ~skip_edge_from;
    for_each_bit(nbrs, [&](int v) {
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

int girth_length(int n, const uint64_t* adj) {
  int best = INT_MAX;
  uint64_t all = detail::full_mask(n);
  for (int u = 0; u < n; ++u) {
    uint64_t higher = adj[u] >> (u + 1) << (u + 1);
    for_each_bit(higher, [&](int v) {
      // shortest cycle through edge {u, v} = 1 + dist in G - {u, v}
      std::vector<int> dist = bfs_distances(n, adj, u, all, bit(u), bit(v));
      if (dist[static_cast<size_t>(v)] >= 0) {
        best = std::min(best, dist[static_cast<size_t>(v)] + 1);
      }
    });
  }
  return best;  // INT_MAX when acyclic
}

// Collect cycles of exactly `len` whose smallest vertex is `s`, as vertex
// sequences starting at s. Neighbors are explored ascending so sequences
// appear in lexicographic order; each cycle is kept in the orientation with
// path[1] < path[len-1].
struct CycleSearch {
  int n = 0;
  const uint64_t* adj = nullptr;
  int len = 0;
  int s = 0;
  uint64_t allowed = 0;
  std::vector<int> dist_to_s;
  std::vector<int> path;
  uint64_t on_path = 0;
  bool first_only = false;
  bool done = false;
  std::vector<std::vector<int>>* out = nullptr;

  void dfs(int u, int depth) {
    if (done) return;
    if (depth == len - 1) {
      if ((adj[u] & bit(s)) && path[1] < u) {
        out->push_back(path);
        if (first_only) done = true;
      }
      return;
    }
    uint64_t candidates = adj[u] & allowed & ~on_path;
    for_each_bit(candidates, [&](int w) {
      if (done) return;
      if (dist_to_s[static_cast<size_t>(w)] < 0 ||
          dist_to_s[static_cast<size_t>(w)] > len - depth - 1) {
        return;
      }
      path.push_back(w);
      on_path |= bit(w);
      dfs(w, depth + 1);
      on_path &= ~bit(w);
      path.pop_back();
    });
  }
};

std::vector<std::vector<int>> collect_girth_cycles(const SignedGraph& g, bool first_only) {
  std::vector<std::vector<int>> cycles;
  const int n = g.order();
  std::vector<uint64_t> adj = adjacency_rows(g);
  int len = girth_length(n, adj.data());
  if (len == INT_MAX) return cycles;
  for (int s = 0; s < n; ++s) {
    CycleSearch search;
    search.n = n;
    search.adj = adj.data();
    search.len = len;
    search.s = s;
    search.allowed = detail::full_mask(n) & ~(bit(s) - 1) & ~bit(s);
    search.dist_to_s =
        bfs_distances(n, adj.data(), s, search.allowed | bit(s));
    search.path = {s};
    search.on_path = bit(s);
    search.first_only = first_only;
    search.out = &cycles;
    search.dfs(s, 0);
    if (first_only && !cycles.empty()) break;
  }
  return cycles;
}

}  // namespace

bool is_connected(const SignedGraph& g) {
  std::vector<uint64_t> adj = adjacency_rows(g);
  return detail::connected_masks(g.order(), adj.data());
}

std::optional<ShortestCycle> girth(const SignedGraph& g) {
  std::vector<std::vector<int>> cycles = collect_girth_cycles(g, /*first_only=*/true);
  if (cycles.empty()) return std::nullopt;
  return ShortestCycle{static_cast<int>(cycles.front().size()), std::move(cycles.front())};
}

std::vector<std::vector<int>> girth_cycles(const SignedGraph& g) {
  return collect_girth_cycles(g, /*first_only=*/false);
}

int cycle_sign(const SignedGraph& g, std::span<const int> cycle) {
  const size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("cycle_sign: a cycle needs at least 3 vertices");
  uint64_t seen = 0;
  for (int v : cycle) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle_sign: vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("cycle_sign: repeated vertex");
    seen |= bit(v);
  }
  int product = +1;
  for (size_t i = 0; i < k; ++i) {
    int u = cycle[i];
    int v = cycle[(i + 1) % k];
    int s = g.sign(u, v);
    if (s == 0) throw std::invalid_argument("cycle_sign: vertex list does not trace a cycle");
    product *= s;
  }
  return product;
}

BalanceResult check_balance(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj = adjacency_rows(g);
  std::vector<uint64_t> neg = negative_rows(g);
  std::vector<int> parent = detail::bfs_forest(n, adj.data());
  uint64_t negated = detail::forest_normalizing_switch(n, adj.data(), neg.data(), parent);

  BalanceResult result;
  for (int u = 0; u < n; ++u) {
    uint64_t higher = adj[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    uint64_t bad = 0;
    for_each_bit(higher, [&](int v) {
      if (parent[static_cast<size_t>(v)] == u || parent[static_cast<size_t>(u)] == v) return;
      int s = (neg[static_cast<size_t>(u)] & bit(v)) ? -1 : +1;
      if (negated & bit(u)) s = -s;
      if (negated & bit(v)) s = -s;
      if (s < 0) bad |= bit(v);
    });
    if (bad) {
      int v = std::countr_zero(bad);
      // negative cycle witness: tree path u .. v plus the edge {v, u}
      std::vector<int> up, vp;
      for (int x = u; x >= 0; x = parent[static_cast<size_t>(x)]) up.push_back(x);
      for (int x = v; x >= 0; x = parent[static_cast<size_t>(x)]) vp.push_back(x);
      // strip the common tail above the meeting point
      while (up.size() > 1 && vp.size() > 1 && up[up.size() - 1] == vp[vp.size() - 1] &&
             up[up.size() - 2] == vp[vp.size() - 2]) {
        up.pop_back();
        vp.pop_back();
      }
      result.balanced = false;
      result.negative_cycle = up;  // u .. lca
      for (size_t i = vp.size() - 1; i-- > 0;) result.negative_cycle.push_back(vp[i]);
      return result;
    }
  }
  result.balanced = true;
  result.to_all_positive = SwitchingFunction::from_negated_set(n, negated);
  return result;
}

bool is_balanced(const SignedGraph& g) { return check_balance(g).balanced; }

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order()) return false;
  for (int v = 0; v < a.order(); ++v) {
    if (a.neighbors(v) != b.neighbors(v)) return false;
  }
  const int n = a.order();
  std::vector<uint64_t> adj = adjacency_rows(a);
  std::vector<int> parent = detail::bfs_forest(n, adj.data());
  std::vector<uint64_t> na = negative_rows(a), nb = negative_rows(b);
  uint64_t ta = detail::forest_normalizing_switch(n, adj.data(), na.data(), parent);
  uint64_t tb = detail::forest_normalizing_switch(n, adj.data(), nb.data(), parent);
  return detail::cotree_sign_string(n, adj.data(), na.data(), parent, ta) ==
         detail::cotree_sign_string(n, adj.data(), nb.data(), parent, tb);
}

SwitchingClassCertificate certificate(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj = adjacency_rows(g);
  std::vector<uint64_t> neg = negative_rows(g);
  std::vector<int> parent = detail::bfs_forest(n, adj.data());
  uint64_t negated = detail::forest_normalizing_switch(n, adj.data(), neg.data(), parent);

  SwitchingClassCertificate cert;
  cert.underlying = canonical_graph6(g);
  for (int v = 0; v < n; ++v) {
    int p = parent[static_cast<size_t>(v)];
    if (p >= 0) cert.tree_edges.emplace_back(std::min(p, v), std::max(p, v));
  }
  std::sort(cert.tree_edges.begin(), cert.tree_edges.end());
  cert.cotree_signs = detail::cotree_sign_string(n, adj.data(), neg.data(), parent, negated);
  return cert;
}

std::vector<std::vector<int>> distance_layers(const SignedGraph& g,
                                              std::span<const int> cycle) {
  cycle_sign(g, cycle);  // validates the cycle
  const int n = g.order();
  std::vector<uint64_t> adj = adjacency_rows(g);
  std::vector<int> dist(static_cast<size_t>(n), -1);
  std::vector<int> queue;
  for (int v : cycle) {
    dist[static_cast<size_t>(v)] = 0;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for_each_bit(adj[static_cast<size_t>(u)], [&](int v) {
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    });
  }
  int max_dist = 0;
  for (int v = 0; v < n; ++v) max_dist = std::max(max_dist, dist[static_cast<size_t>(v)]);
  std::vector<std::vector<int>> layers(static_cast<size_t>(max_dist));
  for (int v = 0; v < n; ++v) {
    if (dist[static_cast<size_t>(v)] >= 1) {
      layers[static_cast<size_t>(dist[static_cast<size_t>(v)] - 1)].push_back(v);
    }
  }
  return layers;
}

bool is_canonical_unicyclic(const SignedGraph& g) {
  if (!is_connected(g) || g.size() != g.order()) return false;  // exactly one cycle
  std::optional<ShortestCycle> cycle = girth(g);
  if (!cycle) return false;
  uint64_t on_cycle = 0;
  for (int v : cycle->vertices) on_cycle |= bit(v);
  for (int v = 0; v < g.order(); ++v) {
    if (on_cycle & bit(v)) continue;
    // off-cycle vertices must be leaves hanging on exactly one cycle vertex
    uint64_t nbrs = g.neighbors(v);
    if (std::popcount(nbrs) != 1) return false;
    if (!(nbrs & on_cycle)) return false;
  }
  return true;
}

PendantStarDecomposition pendant_star_decomposition(const SignedGraph& g) {
  if (!is_canonical_unicyclic(g)) {
    throw std::invalid_argument(
        "pendant_star_decomposition: requires a canonical signed unicyclic graph");
  }
  std::optional<ShortestCycle> cycle = girth(g);
  const int glen = cycle->length;
  if (g.order() == glen) {
    throw std::invalid_argument("pendant_star_decomposition: bare cycle has no pendant star");
  }
  PendantStarDecomposition dec;
  std::vector<int> major_positions;
  for (int pos = 0; pos < glen; ++pos) {
    int v = cycle->vertices[static_cast<size_t>(pos)];
    if (g.degree(v) > 2) {
      dec.majors.push_back(v);
      major_positions.push_back(pos);
    }
  }
  dec.star_count = static_cast<int>(dec.majors.size());
  for (int i = 0; i < dec.star_count; ++i) {
    int here = major_positions[static_cast<size_t>(i)];
    int next = major_positions[static_cast<size_t>((i + 1) % dec.star_count)];
    int gap = (next - here + glen) % glen;
    if (dec.star_count == 1) gap = glen;  // whole cycle minus the single major
    dec.arc_orders.push_back(gap - 1);
  }
  return dec;
}

StructureReport analyze_structure(const SignedGraph& g) {
  StructureReport report;
  report.connected = is_connected(g);
  report.balanced = is_balanced(g);
  std::optional<ShortestCycle> cycle = girth(g);
  if (cycle) {
    report.girth = cycle->length;
    report.shortest_cycle = cycle->vertices;
    report.layers = distance_layers(g, cycle->vertices);
  }
  report.canonical_unicyclic = is_canonical_unicyclic(g);
  return report;
}

}  // namespace sg
