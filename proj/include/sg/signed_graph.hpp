#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sg {

// Vertex count limit imposed by the bit-set adjacency rows.
inline constexpr int kMaxVertices = 64;

// One undirected edge {u, v} carrying a sign in {+1, -1}.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = +1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Counts of positive, negative and zero eigenvalues of an adjacency matrix.
struct Inertia {
  int pos = 0;
  int neg = 0;
  int nul = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::string to_string(const Inertia& inertia);

// Vertex-wise sign assignment; switching by it negates every edge with
// exactly one endpoint in the negated set.
class SwitchingFunction {
 public:
  SwitchingFunction() = default;
  explicit SwitchingFunction(std::span<const int> values);
  SwitchingFunction(std::initializer_list<int> values)
      : SwitchingFunction(std::span<const int>(values.begin(), values.size())) {}

  static SwitchingFunction all_plus(int n);
  static SwitchingFunction from_negated_set(int n, uint64_t negated);

  int size() const { return n_; }
  int operator()(int v) const;
  uint64_t negated_mask() const { return negated_; }

 private:
  int n_ = 0;
  uint64_t negated_ = 0;
};

// Simple signed graph on dense vertex indices 0..n-1: no loops, no parallel
// edges, at most one sign per pair. Values are immutable after construction
// and safe to share across threads.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws std::invalid_argument naming the offending edge on loops,
  // duplicate pairs or out-of-range endpoints.
  static SignedGraph build(int n, std::span<const SignedEdge> edges);
  static SignedGraph build(int n, std::initializer_list<SignedEdge> edges);

  // Trusted constructor from adjacency/negative-edge rows. neg[v] must be a
  // subset of adj[v]; both must be symmetric with empty diagonal.
  static SignedGraph from_masks(int n, std::span<const uint64_t> adj,
                                std::span<const uint64_t> neg);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const;
  // +1 / -1 for edges, 0 for non-adjacent pairs.
  int sign(int u, int v) const;

  uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  uint64_t negative_neighbors(int v) const { return neg_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  uint64_t vertex_mask() const;

  // Edges sorted by (u, v) with u < v.
  std::vector<SignedEdge> edges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<uint64_t> adj_;
  std::vector<uint64_t> neg_;
};

std::string to_string(const SignedGraph& g);

// Same underlying graph, each edge sign multiplied by theta(u) * theta(v).
SignedGraph switched(const SignedGraph& g, const SwitchingFunction& theta);

// Same underlying graph with every sign flipped.
SignedGraph negated(const SignedGraph& g);

struct InducedSubgraph {
  SignedGraph graph;
  // vertex_map[new index] = old index
  std::vector<int> vertex_map;
};

// Vertices are reindexed 0..|S|-1 in the order given; edges and signs are
// inherited. The empty subset yields the empty graph.
InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const int> vertices);
InducedSubgraph induced_subgraph(const SignedGraph& g, uint64_t vertex_set);

// New vertex u with N(u) = N(v), u not adjacent to v, and identical signs.
SignedGraph add_twin(const SignedGraph& g, int v);

// Pairs (u, v), u < v, with N(u) = N(v) whose sign patterns on the common
// neighborhood agree either exactly or after one global flip. That condition
// is equivalent to the existence of a switching making the patterns equal.
std::vector<std::pair<int, int>> find_twins(const SignedGraph& g);

bool is_reduced(const SignedGraph& g);

}  // namespace sg
