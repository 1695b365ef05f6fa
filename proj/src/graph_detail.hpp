#pragma once

// Internal helpers shared by the library sources.

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sg::detail {

inline uint64_t bit(int v) { return uint64_t{1} << v; }

inline uint64_t full_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// Iterate set bits ascending.
template <class F>
void for_each_bit(uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// Vertices reachable from start within `allowed`.
inline uint64_t reachable(const uint64_t* adj, int start, uint64_t allowed) {
  uint64_t seen = bit(start) & allowed;
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj[v]; });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool connected_masks(int n, const uint64_t* adj) {
  if (n <= 1) return true;
  return reachable(adj, 0, full_mask(n)) == full_mask(n);
}

// Deterministic BFS spanning forest: roots are the smallest unexplored
// vertices, neighbors visited ascending. parent[root] = -1.
inline std::vector<int> bfs_forest(int n, const uint64_t* adj) {
  std::vector<int> parent(static_cast<size_t>(n), -2);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<size_t>(root)] != -2) continue;
    parent[static_cast<size_t>(root)] = -1;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for_each_bit(adj[u], [&](int v) {
        if (parent[static_cast<size_t>(v)] == -2) {
          parent[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        }
      });
    }
  }
  return parent;
}

// Switching that makes every forest edge positive: theta(root) = +1 and
// theta(child) = theta(parent) * sign(parent, child). Returns the negated
// vertex set of that switching.
inline uint64_t forest_normalizing_switch(int n, const uint64_t* adj, const uint64_t* neg,
                                          const std::vector<int>& parent) {
  uint64_t negated = 0;
  // parents appear before children when scanning a BFS order; recompute the
  // order from the parent array.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<char> placed(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (parent[static_cast<size_t>(v)] == -1 && !placed[static_cast<size_t>(v)]) {
      size_t head = order.size();
      order.push_back(v);
      placed[static_cast<size_t>(v)] = 1;
      while (head < order.size()) {
        int u = order[head++];
        for_each_bit(adj[u], [&](int w) {
          if (!placed[static_cast<size_t>(w)] && parent[static_cast<size_t>(w)] == u) {
            order.push_back(w);
            placed[static_cast<size_t>(w)] = 1;
          }
        });
      }
    }
  }
  for (int v : order) {
    int p = parent[static_cast<size_t>(v)];
    if (p < 0) continue;
    int edge_sign = (neg[p] & bit(v)) ? -1 : +1;
    int theta_p = (negated & bit(p)) ? -1 : +1;
    if (theta_p * edge_sign < 0) negated |= bit(v);
  }
  return negated;
}

// '+'/'-' per non-forest edge in ascending (u, v) order after normalizing
// the forest signs to positive.
inline std::string cotree_sign_string(int n, const uint64_t* adj, const uint64_t* neg,
                                      const std::vector<int>& parent, uint64_t negated) {
  std::string out;
  for (int u = 0; u < n; ++u) {
    uint64_t higher = adj[u] >> (u + 1) << (u + 1);
    for_each_bit(higher, [&](int v) {
      if (parent[static_cast<size_t>(v)] == u || parent[static_cast<size_t>(u)] == v) return;
      int s = (neg[u] & bit(v)) ? -1 : +1;
      if (negated & bit(u)) s = -s;
      if (negated & bit(v)) s = -s;
      out.push_back(s > 0 ? '+' : '-');
    });
  }
  return out;
}

}  // namespace sg::detail
