#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sg/canonical.hpp"
#include "sg/inertia.hpp"
#include "sg/structure.hpp"

namespace sg {

enum class Balance { kBalanced, kUnbalanced };

// Balanced cycles are all-positive; unbalanced ones carry exactly one
// negative edge, at the fixed position {n-1, 0}.
SignedGraph make_cycle(int n, Balance balance);

// All-positive path unless explicit edge signs (n-1 of them) are given.
SignedGraph make_path(int n, std::span<const int> signs = {});

enum class MultipartiteVariant { kAllPositive, kAllTrianglesUnbalanced };

// kAllTrianglesUnbalanced uses the all-negative signature, which makes every
// triangle negative; it requires at least three parts.
SignedGraph make_complete_multipartite(std::span<const int> parts,
                                       MultipartiteVariant variant);

// Theta graph B(a, b, c): two branch vertices joined by three internally
// disjoint paths of a, b and c vertices counting both endpoints. The two
// cotree signs sit on the branch-1 end of the first and third path; the
// second path and everything else is positive. At most one of a, b, c may
// equal 2.
SignedGraph make_theta(int a, int b, int c, int sign_first = +1, int sign_third = +1);

// Cycle plus an edge from cycle vertex 0 to the center of a star with r
// leaves; all added edges positive.
SignedGraph make_cycle_star_join(int cycle_len, Balance balance, int r);

// Cycle with leaf_counts[i] pendant leaves at cycle vertex i, pendant edges
// positive. leaf_counts may be shorter than the cycle.
SignedGraph make_canonical_unicyclic(int cycle_len, Balance balance,
                                     std::span<const int> leaf_counts);

struct FamilyTag {
  std::string theorem;  // "3.1", "3.2", "3.3", "3.4", "4.1", ..., "5.3"
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string to_string(const FamilyTag& tag);

enum class InertiaGirthRelation {
  kViolatesLowerBound,  // index < ceil(g/2) - 1; impossible if the bound holds
  kAtLowerBound,        // index = ceil(g/2) - 1
  kAtCeilHalfGirth,     // index = ceil(g/2)
  kAboveCeilHalfGirth,
};

std::string to_string(InertiaGirthRelation relation);

struct InertiaClassification {
  Inertia inertia;
  int girth = 0;
  InertiaGirthRelation relation = InertiaGirthRelation::kAboveCeilHalfGirth;
  std::optional<FamilyTag> tag;
  // False when the computed index and the structural family verdict
  // disagree on a characterized range; such graphs are theorem violations.
  bool consistent = true;
};

// Requires a connected graph with a cycle; throws std::invalid_argument
// otherwise. The structural membership tests never consult the computed
// index of the input graph.
InertiaClassification classify_negative_inertia(const SignedGraph& g);

// classify_negative_inertia of the negation, with tags transposed to the
// positive-index family names.
InertiaClassification classify_positive_inertia(const SignedGraph& g);

enum class NullityRelation {
  kViolatesUpperBound,  // eta > n - g + 2
  kAtUpperBound,        // eta = n - g + 2
  kImpossibleGap,       // eta = n - g + 1; no signed graph attains this
  kAtOrderMinusGirth,   // eta = n - g
  kBelowOrderMinusGirth,
};

std::string to_string(NullityRelation relation);

struct NullityClassification {
  Inertia inertia;
  int girth = 0;
  NullityRelation relation = NullityRelation::kBelowOrderMinusGirth;
  std::optional<FamilyTag> tag;
  bool consistent = true;
};

NullityClassification classify_nullity(const SignedGraph& g);

// Structural membership predicates for the theorem equality sets, given the
// graph's shortest-cycle witness. They never consult the inertia of the
// argument graph; classify_* and the verification sweeps both build on them.
std::optional<FamilyTag> negative_lower_bound_family(const SignedGraph& g,
                                                     const ShortestCycle& cyc);
std::optional<FamilyTag> negative_ceil_family(const SignedGraph& g, const ShortestCycle& cyc);
std::optional<FamilyTag> nullity_upper_bound_family(const SignedGraph& g,
                                                    const ShortestCycle& cyc);
std::optional<FamilyTag> nullity_order_minus_girth_family(const SignedGraph& g,
                                                          const ShortestCycle& cyc);

struct TwinPeelResult {
  SignedGraph reduced;
  int peels = 0;
};

// Repeatedly deletes the larger vertex of the first twin pair until the
// graph is reduced. Each peel preserves both inertia indices and lowers the
// nullity by one.
TwinPeelResult twin_peel(const SignedGraph& g);

struct CatalogEntry {
  CanonicalSignedClass cls;
  int girth = 0;
  Inertia inertia;
  int order = 0;
  std::string branch;      // "3.3" or "3.4" hypothesis branch
  std::string provenance;  // e.g. "derived at order 7 by exhaustive search"
  std::string anchor;      // human-readable family anchor, possibly empty
};

class ExtremalCatalog {
 public:
  void insert(CatalogEntry entry);
  bool contains(const CanonicalSignedClass& cls) const;
  const CatalogEntry* find(const CanonicalSignedClass& cls) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // One record per line: graph6, cotree signs, girth, i+, i-, eta, order,
  // branch, provenance, anchor.
  std::string serialize() const;
  static ExtremalCatalog parse(const std::string& text);

 private:
  std::vector<CatalogEntry> entries_;  // kept sorted by cls
};

// Base graphs recovered once per process by targeted oracle sweeps: the
// reduced triangle-free graphs with negative index 2 (twin-peel bases for
// girth 4), the girth >= 5 equality families on the named theta and
// star-like underlying graphs, and the girth-3 twin bases.
struct DerivedBase {
  std::string name;
  SignedGraph representative;
  CanonicalSignedClass cls;
  Inertia inertia;
  // Whether the negation lands back in the same switching-isomorphism class.
  bool negation_self_dual = false;
};

struct FigureFamilies {
  // Reduced triangle-free connected signed graphs with i_- = 2, derived
  // exhaustively; split by the presence of an unbalanced 4-cycle.
  std::vector<DerivedBase> reduced_i2_with_unbalanced_c4;     // unbalanced C4, g1, g2
  std::vector<DerivedBase> reduced_i2_without_unbalanced_c4;  // P4, P5, balanced C5, unbalanced C6
  // Girth >= 5 equality families keyed by canonical class.
  std::vector<DerivedBase> girth5_with_unbalanced_girth_cycle;  // gamma1, gamma2(t), gamma3
  std::vector<DerivedBase> girth5plus_without;  // (B(4,3,4),+), gamma4, h-star, B(a,b,c) entries
  // Twin bases for girth-3 nullity classification.
  std::vector<DerivedBase> girth3_twin_bases;  // balanced / unbalanced C3
  // Derivation findings worth surfacing (count mismatches and the like).
  std::vector<std::string> notes;
};

const FigureFamilies& figure_families();

// Reference constructions for the figure anchors (fixed labelings).
SignedGraph make_gamma1_anchor();
SignedGraph make_gamma2_anchor(int leaves);
SignedGraph make_gamma3_anchor();
SignedGraph make_gamma4_anchor();

}  // namespace sg
