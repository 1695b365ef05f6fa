#include "sg/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "graph_detail.hpp"

namespace sg {

using detail::bit;
using detail::for_each_bit;

std::string graph6_encode(int n, std::span<const uint64_t> adj) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph6_encode: order out of range");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((adj[static_cast<size_t>(i)] >> j) & 1);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    acc <<= (6 - nbits);
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

std::string graph6_encode(const SignedGraph& g) {
  std::vector<uint64_t> adj(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  return graph6_encode(g.order(), adj);
}

DecodedGraph graph6_decode(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]) - 63;
    if (c < 0 || c > 63) throw std::invalid_argument("graph6: invalid character");
    return c;
  };
  int n;
  if (!text.empty() && text[0] == '~') {
    ++pos;
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph6: order out of range");
  DecodedGraph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), 0);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) {
        g.adj[static_cast<size_t>(i)] |= bit(j);
        g.adj[static_cast<size_t>(j)] |= bit(i);
      }
      --nbits;
    }
  }
  return g;
}

namespace {

// Depth-first search over vertex placements minimizing the graph6 bit
// string. Column j of the key holds the adjacency bits between the vertex
// placed at position j and positions 0..j-1, most significant bit first, so
// integer comparison of columns matches bit-string comparison. The leaf
// callback fires for every placement achieving the current minimum;
// new_best marks leaves that strictly improved it.
void canonical_search(int n, const uint64_t* adj,
                      const std::function<void(const int* perm, bool new_best)>& on_leaf) {
  if (n == 0) {
    on_leaf(nullptr, true);
    return;
  }
  std::vector<uint64_t> best(static_cast<size_t>(n), ~uint64_t{0});
  std::vector<int> perm(static_cast<size_t>(n), -1);
  uint64_t used = 0;
  bool improved = true;  // first leaf always reports new_best

  std::function<void(int)> dfs = [&](int j) {
    if (j == n) {
      on_leaf(perm.data(), improved);
      improved = false;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used & bit(v)) continue;
      uint64_t col = 0;
      for (int i = 0; i < j; ++i) {
        col = (col << 1) | ((adj[static_cast<size_t>(perm[static_cast<size_t>(i)])] >> v) & 1);
      }
      if (col > best[static_cast<size_t>(j)]) continue;
      if (col < best[static_cast<size_t>(j)]) {
        best[static_cast<size_t>(j)] = col;
        for (int k = j + 1; k < n; ++k) best[static_cast<size_t>(k)] = ~uint64_t{0};
        improved = true;
      }
      perm[static_cast<size_t>(j)] = v;
      used |= bit(v);
      dfs(j + 1);
      used &= ~bit(v);
    }
  };
  dfs(0);
}

struct Relabeled {
  std::vector<uint64_t> adj;
  std::vector<uint64_t> neg;
};

Relabeled relabel(const SignedGraph& g, const int* perm) {
  const int n = g.order();
  Relabeled r;
  r.adj.assign(static_cast<size_t>(n), 0);
  r.neg.assign(static_cast<size_t>(n), 0);
  std::vector<int> where(static_cast<size_t>(n));  // old vertex -> new position
  for (int j = 0; j < n; ++j) where[static_cast<size_t>(perm[j])] = j;
  for (int j = 0; j < n; ++j) {
    int old_u = perm[j];
    for_each_bit(g.neighbors(old_u), [&](int old_v) {
      int i = where[static_cast<size_t>(old_v)];
      r.adj[static_cast<size_t>(j)] |= bit(i);
      if (g.negative_neighbors(old_u) & bit(old_v)) r.neg[static_cast<size_t>(j)] |= bit(i);
    });
  }
  return r;
}

}  // namespace

std::vector<int> canonical_labeling(int n, std::span<const uint64_t> adj) {
  std::vector<int> result(static_cast<size_t>(n));
  canonical_search(n, adj.data(), [&](const int* perm, bool new_best) {
    if (new_best) std::copy(perm, perm + n, result.begin());
  });
  return result;
}

std::string canonical_graph6(const SignedGraph& g) {
  std::vector<uint64_t> adj(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  std::vector<int> perm = canonical_labeling(g.order(), adj);
  Relabeled r = relabel(g, perm.data());
  return graph6_encode(g.order(), r.adj);
}

CanonicalSignedClass canonical_signed_class(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);

  CanonicalSignedClass cls;
  bool have_signs = false;
  std::vector<uint64_t> canon_adj;
  canonical_search(n, adj.data(), [&](const int* perm, bool new_best) {
    if (new_best) {
      have_signs = false;
      if (n > 0) {
        Relabeled r = relabel(g, perm);
        canon_adj = r.adj;
      } else {
        canon_adj.clear();
      }
    }
    if (n == 0) {
      cls.cotree_signs.clear();
      have_signs = true;
      return;
    }
    Relabeled r = relabel(g, perm);
    std::vector<int> parent = detail::bfs_forest(n, r.adj.data());
    uint64_t negated = detail::forest_normalizing_switch(n, r.adj.data(), r.neg.data(), parent);
    std::string signs = detail::cotree_sign_string(n, r.adj.data(), r.neg.data(), parent, negated);
    if (!have_signs || signs < cls.cotree_signs) {
      cls.cotree_signs = std::move(signs);
      have_signs = true;
    }
  });
  cls.underlying = graph6_encode(n, canon_adj);
  return cls;
}

}  // namespace sg
