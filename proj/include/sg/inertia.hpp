#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

// Symmetric matrix with exact rational entries. All arithmetic on it is
// exact; nothing is ever rounded.
class RationalSymMatrix {
 public:
  explicit RationalSymMatrix(int n);
  static RationalSymMatrix adjacency(const SignedGraph& g);

  int order() const { return n_; }
  const mpq_class& at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const mpq_class& value);

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }
  int n_ = 0;
  std::vector<mpq_class> a_;
};

// Handling of the all-zero-diagonal pivot case during congruence
// diagonalization: credit the hyperbolic 2x2 block as one positive plus one
// negative directly, or materialize the row/column addition that creates a
// nonzero diagonal and keep pivoting (used to cross-check the credit path).
enum class ZeroDiagonalPolicy { kCreditPair, kMaterialize };

// Inertia by symmetric congruence pivoting; exact by Sylvester's law.
Inertia inertia_of(const RationalSymMatrix& m,
                   ZeroDiagonalPolicy policy = ZeroDiagonalPolicy::kCreditPair);

Inertia inertia_exact(const SignedGraph& g);

// Closed form for signed cycles (n >= 3, else throws) and signed paths.
Inertia inertia_cycle_closed_form(int n, bool balanced);
Inertia inertia_path_closed_form(int n);

// Repeatedly deletes a pendant vertex together with its neighbor, crediting
// (1,1,0) per step and (0,0,1) per isolated vertex; the pendant-free residue
// is finished by inertia_exact. Always equals inertia_exact.
Inertia inertia_by_pendant_reduction(const SignedGraph& g);

// Exact determinant of the adjacency matrix. det = 0 iff the nullity is
// positive, and for nonsingular graphs sgn(det) = (-1)^{i_-}.
mpz_class determinant_exact(const SignedGraph& g);

namespace detail {
// Engine entry point on raw adjacency rows; used by the enumeration loops to
// avoid building SignedGraph values per instance.
Inertia inertia_masks(int n, const uint64_t* adj, const uint64_t* neg);
}  // namespace detail

}  // namespace sg
