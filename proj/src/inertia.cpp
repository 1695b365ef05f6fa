#include "sg/inertia.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph_detail.hpp"

namespace sg {

using detail::bit;
using detail::for_each_bit;

RationalSymMatrix::RationalSymMatrix(int n) {
  if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
  n_ = n;
  a_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), mpq_class(0));
}

RationalSymMatrix RationalSymMatrix::adjacency(const SignedGraph& g) {
  RationalSymMatrix m(g.order());
  for (const SignedEdge& e : g.edges()) {
    m.set(e.u, e.v, mpq_class(e.sign));
  }
  return m;
}

void RationalSymMatrix::set(int i, int j, const mpq_class& value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw std::invalid_argument("matrix index out of range");
  }
  a_[idx(i, j)] = value;
  a_[idx(j, i)] = value;
}

namespace {

struct Rat64Overflow {};

// Exact rational on 64-bit integers; throws Rat64Overflow instead of
// wrapping, at which point the caller retries with GMP rationals.
struct Rat64 {
  int64_t num = 0;
  int64_t den = 1;
};

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Rat64Overflow{};
  return r;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Rat64Overflow{};
  return r;
}

Rat64 make_rat(int64_t num, int64_t den) {
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw Rat64Overflow{};
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -static_cast<uint64_t>(num) : static_cast<uint64_t>(num),
                       static_cast<uint64_t>(den));
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

int qsign(const Rat64& x) { return (x.num > 0) - (x.num < 0); }
int qsign(const mpq_class& x) { return sgn(x); }

Rat64 operator+(const Rat64& a, const Rat64& b) {
  int64_t g = std::gcd(a.den, b.den);
  int64_t bd = b.den / g;
  int64_t num = checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g));
  int64_t den = checked_mul(a.den, bd);
  return make_rat(num, den);
}

Rat64 operator-(const Rat64& a, const Rat64& b) {
  if (b.num == INT64_MIN) throw Rat64Overflow{};
  return a + Rat64{-b.num, b.den};
}

Rat64 operator*(const Rat64& a, const Rat64& b) {
  Rat64 x = make_rat(a.num, b.den);
  Rat64 y = make_rat(b.num, a.den);
  return Rat64{checked_mul(x.num, y.num), checked_mul(x.den, y.den)};
}

Rat64 operator/(const Rat64& a, const Rat64& b) {
  if (b.num == 0) throw std::logic_error("rational division by zero");
  if (b.num == INT64_MIN || b.den == INT64_MIN) throw Rat64Overflow{};
  return a * Rat64{b.num < 0 ? -b.den : b.den, b.num < 0 ? -b.num : b.num};
}

// Symmetric congruence diagonalization. Repeatedly: pivot on an active
// nonzero diagonal entry and record its sign; when every active diagonal is
// zero, spend the first active off-diagonal entry either as a credited
// hyperbolic pair (one positive, one negative) or, in materialize mode, by
// adding its row/column across to create a nonzero diagonal. The all-zero
// remainder is the nullity. Exact by Sylvester's law of inertia.
template <class Q>
Inertia eliminate_symmetric(int n, Q* a, bool materialize) {
  auto at = [&](int i, int j) -> Q& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  };
  Inertia result;
  std::vector<char> active(static_cast<size_t>(n), 1);
  int remaining = n;
  while (remaining > 0) {
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (active[static_cast<size_t>(i)] && qsign(at(i, i)) != 0) {
        p = i;
        break;
      }
    }
    if (p >= 0) {
      (qsign(at(p, p)) > 0 ? result.pos : result.neg) += 1;
      active[static_cast<size_t>(p)] = 0;
      --remaining;
      const Q d = at(p, p);
      for (int i = 0; i < n; ++i) {
        if (!active[static_cast<size_t>(i)] || qsign(at(i, p)) == 0) continue;
        const Q f = at(i, p) / d;
        for (int j = 0; j < n; ++j) {
          if (!active[static_cast<size_t>(j)] || qsign(at(p, j)) == 0) continue;
          at(i, j) = at(i, j) - f * at(p, j);
        }
      }
      continue;
    }
    int i0 = -1, j0 = -1;
    for (int i = 0; i < n && i0 < 0; ++i) {
      if (!active[static_cast<size_t>(i)]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (active[static_cast<size_t>(j)] && qsign(at(i, j)) != 0) {
          i0 = i;
          j0 = j;
          break;
        }
      }
    }
    if (i0 < 0) {
      result.nul += remaining;
      break;
    }
    if (materialize) {
      for (int k = 0; k < n; ++k) {
        if (active[static_cast<size_t>(k)]) at(i0, k) = at(i0, k) + at(j0, k);
      }
      for (int k = 0; k < n; ++k) {
        if (active[static_cast<size_t>(k)]) at(k, i0) = at(k, i0) + at(k, j0);
      }
      continue;
    }
    result.pos += 1;
    result.neg += 1;
    active[static_cast<size_t>(i0)] = 0;
    active[static_cast<size_t>(j0)] = 0;
    remaining -= 2;
    const Q d = at(i0, j0);
    for (int k = 0; k < n; ++k) {
      if (!active[static_cast<size_t>(k)]) continue;
      const Q fi = at(k, i0) / d;
      const Q fj = at(k, j0) / d;
      if (qsign(fi) == 0 && qsign(fj) == 0) continue;
      for (int l = 0; l < n; ++l) {
        if (!active[static_cast<size_t>(l)]) continue;
        at(k, l) = at(k, l) - fi * at(j0, l) - fj * at(i0, l);
      }
    }
  }
  return result;
}

Inertia inertia_masks_mpq(int n, const uint64_t* adj, const uint64_t* neg) {
  std::vector<mpq_class> a(static_cast<size_t>(n) * static_cast<size_t>(n), mpq_class(0));
  for (int u = 0; u < n; ++u) {
    for_each_bit(adj[u], [&](int v) {
      a[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] =
          (neg[u] & bit(v)) ? -1 : 1;
    });
  }
  return eliminate_symmetric(n, a.data(), /*materialize=*/false);
}

}  // namespace

namespace detail {

Inertia inertia_masks(int n, const uint64_t* adj, const uint64_t* neg) {
  if (n == 0) return {0, 0, 0};
  thread_local std::vector<Rat64> buf;
  buf.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Rat64{});
  for (int u = 0; u < n; ++u) {
    for_each_bit(adj[u], [&](int v) {
      buf[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] =
          Rat64{(neg[u] & bit(v)) ? -1 : 1, 1};
    });
  }
  try {
    return eliminate_symmetric(n, buf.data(), /*materialize=*/false);
  } catch (const Rat64Overflow&) {
    return inertia_masks_mpq(n, adj, neg);
  }
}

}  // namespace detail

Inertia inertia_of(const RationalSymMatrix& m, ZeroDiagonalPolicy policy) {
  const int n = m.order();
  std::vector<mpq_class> a(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = m.at(i, j);
    }
  }
  return eliminate_symmetric(n, a.data(), policy == ZeroDiagonalPolicy::kMaterialize);
}

Inertia inertia_exact(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj(static_cast<size_t>(n)), neg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<size_t>(v)] = g.neighbors(v);
    neg[static_cast<size_t>(v)] = g.negative_neighbors(v);
  }
  return detail::inertia_masks(n, adj.data(), neg.data());
}

Inertia inertia_cycle_closed_form(int n, bool balanced) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  const int ceil_half = (n + 1) / 2;
  const int mod = n % 4;
  int ineg, ipos;
  if (balanced) {
    ineg = (mod == 0 || mod == 1) ? ceil_half - 1 : ceil_half;
    ipos = (mod == 0 || mod == 3) ? ceil_half - 1 : ceil_half;
  } else {
    ineg = (mod == 2 || mod == 3) ? ceil_half - 1 : ceil_half;
    ipos = (mod == 1 || mod == 2) ? ceil_half - 1 : ceil_half;
  }
  return {ipos, ineg, n - ipos - ineg};
}

Inertia inertia_path_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("paths need a non-negative order");
  return {n / 2, n / 2, n % 2};
}

Inertia inertia_by_pendant_reduction(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  uint64_t active = g.vertex_mask();
  Inertia acc;
  for (;;) {
    int pendant = -1;
    uint64_t rest = active;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (std::popcount(adj[static_cast<size_t>(v)] & active) == 1) {
        pendant = v;
        break;
      }
    }
    if (pendant < 0) break;
    int nbr = std::countr_zero(adj[static_cast<size_t>(pendant)] & active);
    active &= ~(bit(pendant) | bit(nbr));
    acc.pos += 1;
    acc.neg += 1;
  }
  uint64_t rest = active;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if ((adj[static_cast<size_t>(v)] & active) == 0) {
      acc.nul += 1;
      active &= ~bit(v);
    }
  }
  if (active) {
    Inertia residue = inertia_exact(induced_subgraph(g, active).graph);
    acc.pos += residue.pos;
    acc.neg += residue.neg;
    acc.nul += residue.nul;
  }
  return acc;
}

mpz_class determinant_exact(const SignedGraph& g) {
  const int n = g.order();
  if (n == 0) return 1;
  std::vector<mpz_class> a(static_cast<size_t>(n) * static_cast<size_t>(n), mpz_class(0));
  auto at = [&](int i, int j) -> mpz_class& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  };
  for (const SignedEdge& e : g.edges()) {
    at(e.u, e.v) = e.sign;
    at(e.v, e.u) = e.sign;
  }
  // Bareiss fraction-free elimination; every division below is exact.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (at(r, k) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace sg
