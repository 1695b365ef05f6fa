#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

// graph6 encoding of an unsigned graph given as adjacency rows (labeled,
// no canonicalization). Supports n <= 64 via the long form for n > 62.
std::string graph6_encode(int n, std::span<const uint64_t> adj);
std::string graph6_encode(const SignedGraph& g);

struct DecodedGraph {
  int n = 0;
  std::vector<uint64_t> adj;
};
DecodedGraph graph6_decode(const std::string& text);

// Relabeling that minimizes the graph6 bit string; perm[new index] = old
// vertex. Deterministic.
std::vector<int> canonical_labeling(int n, std::span<const uint64_t> adj);

// graph6 string of the canonically relabeled underlying graph.
std::string canonical_graph6(const SignedGraph& g);

// Complete invariant of a signed graph up to switching and isomorphism:
// canonical underlying graph plus the lexicographically least cotree sign
// string over all canonical relabelings, after normalizing the deterministic
// spanning forest of the canonical graph to all-positive.
struct CanonicalSignedClass {
  std::string underlying;    // canonical graph6
  std::string cotree_signs;  // '+'/'-' per non-forest edge in sorted order

  friend bool operator==(const CanonicalSignedClass&, const CanonicalSignedClass&) = default;
  friend std::strong_ordering operator<=>(const CanonicalSignedClass&,
                                          const CanonicalSignedClass&) = default;
};

CanonicalSignedClass canonical_signed_class(const SignedGraph& g);

}  // namespace sg
