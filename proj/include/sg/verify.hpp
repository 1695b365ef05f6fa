#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sg/families.hpp"
#include "sg/signed_graph.hpp"

namespace sg {

struct EnumerationSpec {
  int max_n = 6;
  std::optional<std::pair<int, int>> girth_range;
  std::optional<int> cyclomatic_cap;
  bool require_connected = true;
  int jobs = 1;
  // Constructive sweep bound for the canonical unicyclic theorems.
  std::optional<int> max_girth;
  // Reverses the generation order; catalog derivation must not depend on it.
  bool reverse_order = false;
};

// Hard ceilings: dense unsigned enumeration needs n <= 8; the sparse
// cyclomatic-capped generator extends to n <= 10.
inline constexpr int kDenseEnumerationLimit = 8;
inline constexpr int kSparseEnumerationLimit = 10;

// Connected unsigned graphs of order n, one per isomorphism class, as
// all-positive signed graphs. Uses dense edge-set enumeration for n <= 8 or
// the structured generator when spec.cyclomatic_cap <= 2. Throws
// std::invalid_argument when the limits are exceeded.
void enumerate_underlying(int n, const EnumerationSpec& spec,
                          const std::function<void(const SignedGraph&)>& sink);

// Exactly one representative per labeled switching class of the underlying
// graph of g: a deterministic spanning tree is fixed all-positive and every
// cotree sign vector is emitted. Requires a connected graph.
void enumerate_switching_classes(const SignedGraph& underlying,
                                 const std::function<void(const SignedGraph&)>& sink);

struct Counterexample {
  std::string graph;   // sg file format, single record
  std::string detail;  // what failed
};

struct VerificationReport {
  std::string theorem;
  uint64_t instances_checked = 0;
  uint64_t equality_matches = 0;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
  // girth -> index value -> count of enumerated instances, for the summary
  // matrix view.
  std::map<int, std::map<int, uint64_t>> girth_index_counts;

  bool passed() const { return counterexamples.empty(); }
  std::string summary_line() const;
  std::string table() const;
};

// Exhaustive theorem check over all connected signed graphs with a cycle,
// one representative per labeled switching class, up to spec.max_n. Ids:
// 3.1, 3.2, 3.3, 3.4, 4.1, 4.2, 4.3, 5.1, 5.2, 5.3. For 3.2/4.2/5.2 a
// constructive sweep over pendant-star configurations runs instead when
// spec.max_girth is set. Every counterexample re-verifies through the public
// API before being reported.
VerificationReport verify_theorem(const std::string& theorem_id,
                                  const EnumerationSpec& spec);

// Lemma checks: vertices outside a shortest cycle have at most one neighbor
// on it when g >= 5, and distance layers beyond the first are empty whenever
// the graph's negative index equals that of some shortest cycle.
VerificationReport verify_structure_lemmas(const EnumerationSpec& spec);

// Enumerates connected signed graphs with girth in [girth_lo, girth_hi],
// cyclomatic number <= cap (default 2), n <= spec.max_n (<= 9), keeps the
// non-canonical-unicyclic ones with i_- = ceil(g/2), and partitions them by
// whether some girth cycle attains i_- = ceil(g/2). Entries are deduplicated
// up to switching isomorphism.
ExtremalCatalog derive_catalog(int girth_lo, int girth_hi, const EnumerationSpec& spec);

}  // namespace sg
