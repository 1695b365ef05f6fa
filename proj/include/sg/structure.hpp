#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sg/canonical.hpp"
#include "sg/signed_graph.hpp"

namespace sg {

bool is_connected(const SignedGraph& g);

struct ShortestCycle {
  int length = 0;
  std::vector<int> vertices;  // lexicographically smallest vertex sequence
};

// Shortest cycle with a deterministic witness; nullopt for acyclic graphs.
std::optional<ShortestCycle> girth(const SignedGraph& g);

// All cycles of girth length, each as a vertex sequence starting at its
// smallest vertex. Empty for acyclic graphs.
std::vector<std::vector<int>> girth_cycles(const SignedGraph& g);

// Product of the edge signs along the cycle. Throws std::invalid_argument
// when the vertex list does not trace a cycle of g.
int cycle_sign(const SignedGraph& g, std::span<const int> cycle);

struct BalanceResult {
  bool balanced = false;
  // Switching to the all-positive graph; meaningful iff balanced.
  SwitchingFunction to_all_positive;
  // A negative cycle; meaningful iff unbalanced.
  std::vector<int> negative_cycle;
};

BalanceResult check_balance(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

// True iff both graphs live on the same labeled underlying graph and one is
// a switching of the other.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Normal form of a labeled switching class: spanning-forest signs are
// normalized to all-positive and the remaining cotree signs recorded. Two
// signed graphs on the same labeled underlying graph are switching
// equivalent iff their cotree sign strings agree.
struct SwitchingClassCertificate {
  std::string underlying;  // canonical graph6 of the underlying graph
  std::vector<std::pair<int, int>> tree_edges;
  std::string cotree_signs;  // '+'/'-' per non-tree edge in sorted edge order

  friend bool operator==(const SwitchingClassCertificate&,
                         const SwitchingClassCertificate&) = default;
};

SwitchingClassCertificate certificate(const SignedGraph& g);

// layers[r-1] = vertices at BFS distance r from the cycle, r = 1, 2, ...
std::vector<std::vector<int>> distance_layers(const SignedGraph& g,
                                              std::span<const int> cycle);

// Connected unicyclic graph whose off-cycle vertices are independent leaves,
// each attached to exactly one cycle vertex.
bool is_canonical_unicyclic(const SignedGraph& g);

struct PendantStarDecomposition {
  int star_count = 0;            // k
  std::vector<int> majors;       // cycle vertices carrying >= 1 leaf, in cycle order
  std::vector<int> arc_orders;   // l_i: cycle vertices strictly between consecutive majors
};

// Requires a canonical unicyclic graph with at least one leaf; throws
// std::invalid_argument otherwise. Satisfies star_count + sum(arc_orders) = girth.
PendantStarDecomposition pendant_star_decomposition(const SignedGraph& g);

struct StructureReport {
  bool connected = false;
  std::optional<int> girth;        // nullopt: acyclic
  std::vector<int> shortest_cycle;
  bool balanced = false;
  std::vector<std::vector<int>> layers;  // around shortest_cycle when cyclic
  bool canonical_unicyclic = false;
};

StructureReport analyze_structure(const SignedGraph& g);

}  // namespace sg
