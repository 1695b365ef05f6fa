#pragma once

// Internal enumeration cores shared by the verify module and the family
// oracle derivations.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph_detail.hpp"
#include "sg/canonical.hpp"
#include "sg/signed_graph.hpp"

namespace sg::detail {

struct EdgeIndexer {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // all {u, v}, u < v, lex order

  explicit EdgeIndexer(int n_) : n(n_) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
  }
  int count() const { return static_cast<int>(pairs.size()); }
};

inline void adj_from_edge_mask(const EdgeIndexer& idx, uint64_t mask, uint64_t* adj) {
  for (int v = 0; v < idx.n; ++v) adj[v] = 0;
  for_each_bit(mask, [&](int e) {
    auto [u, v] = idx.pairs[static_cast<size_t>(e)];
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  });
}

// All connected labeled graphs on n vertices with edge mask in [lo, hi).
template <class F>
void for_each_connected_labeled(const EdgeIndexer& idx, uint64_t lo, uint64_t hi, F&& f) {
  std::vector<uint64_t> adj(static_cast<size_t>(idx.n));
  for (uint64_t mask = lo; mask < hi; ++mask) {
    adj_from_edge_mask(idx, mask, adj.data());
    if (!connected_masks(idx.n, adj.data())) continue;
    f(adj.data(), mask);
  }
}

// One all-positive representative per isomorphism class of connected graphs
// on n vertices (dense enumeration).
template <class F>
void for_each_connected_iso_class(int n, F&& f) {
  EdgeIndexer idx(n);
  std::unordered_set<std::string> seen;
  std::vector<uint64_t> zero(static_cast<size_t>(n), 0);
  for_each_connected_labeled(idx, 0, uint64_t{1} << idx.count(),
                             [&](const uint64_t* adj, uint64_t) {
                               std::vector<uint64_t> rows(adj, adj + n);
                               SignedGraph g = SignedGraph::from_masks(n, rows, zero);
                               if (seen.insert(canonical_graph6(g)).second) f(g);
                             });
}

struct SwitchingEnumInfo {
  std::vector<int> parent;
  std::vector<std::pair<int, int>> cotree;  // u < v
};

inline SwitchingEnumInfo switching_enum_info(int n, const uint64_t* adj) {
  SwitchingEnumInfo info;
  info.parent = bfs_forest(n, adj);
  for (int u = 0; u < n; ++u) {
    uint64_t higher = adj[u] >> (u + 1) << (u + 1);
    for_each_bit(higher, [&](int v) {
      if (info.parent[static_cast<size_t>(v)] != u && info.parent[static_cast<size_t>(u)] != v) {
        info.cotree.emplace_back(u, v);
      }
    });
  }
  return info;
}

// Tree-normalized sign assignments: forest edges positive, every cotree sign
// vector visited once. f(neg_rows, cotree_sign_bits).
template <class F>
void for_each_switching_class(int n, const SwitchingEnumInfo& info, uint64_t* neg, F&& f) {
  const int k = static_cast<int>(info.cotree.size());
  for (uint64_t signs = 0; signs < (uint64_t{1} << k); ++signs) {
    for (int v = 0; v < n; ++v) neg[v] = 0;
    for_each_bit(signs, [&](int e) {
      auto [u, v] = info.cotree[static_cast<size_t>(e)];
      neg[u] |= bit(v);
      neg[v] |= bit(u);
    });
    f(neg, signs);
  }
}

}  // namespace sg::detail
