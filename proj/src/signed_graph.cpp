#include "sg/signed_graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sg {

namespace {

uint64_t bit(int v) { return uint64_t{1} << v; }

void check_vertex(int n, int v, const char* what) {
  if (v < 0 || v >= n) {
    std::ostringstream msg;
    msg << what << ": vertex " << v << " out of range for order " << n;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::string to_string(const Inertia& inertia) {
  std::ostringstream out;
  out << "(" << inertia.pos << ", " << inertia.neg << ", " << inertia.nul << ")";
  return out.str();
}

SwitchingFunction::SwitchingFunction(std::span<const int> values) {
  if (values.size() > static_cast<size_t>(kMaxVertices)) {
    throw std::invalid_argument("switching function larger than the vertex limit");
  }
  n_ = static_cast<int>(values.size());
  for (int v = 0; v < n_; ++v) {
    if (values[static_cast<size_t>(v)] == -1) {
      negated_ |= bit(v);
    } else if (values[static_cast<size_t>(v)] != +1) {
      throw std::invalid_argument("switching function values must be +1 or -1");
    }
  }
}

SwitchingFunction SwitchingFunction::all_plus(int n) {
  return from_negated_set(n, 0);
}

SwitchingFunction SwitchingFunction::from_negated_set(int n, uint64_t negated) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("switching function larger than the vertex limit");
  }
  SwitchingFunction theta;
  theta.n_ = n;
  theta.negated_ = n == kMaxVertices ? negated : negated & (bit(n) - 1);
  return theta;
}

int SwitchingFunction::operator()(int v) const {
  check_vertex(n_, v, "switching function");
  return (negated_ & bit(v)) ? -1 : +1;
}

SignedGraph SignedGraph::build(int n, std::span<const SignedEdge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be between 0 and 64");
  }
  SignedGraph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), 0);
  g.neg_.assign(static_cast<size_t>(n), 0);
  for (const SignedEdge& e : edges) {
    std::ostringstream name;
    name << "edge {" << e.u << ", " << e.v << "}";
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument(name.str() + ": endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument(name.str() + ": loops are not allowed");
    }
    if (e.sign != +1 && e.sign != -1) {
      throw std::invalid_argument(name.str() + ": sign must be +1 or -1");
    }
    if (g.adj_[static_cast<size_t>(e.u)] & bit(e.v)) {
      throw std::invalid_argument(name.str() + ": duplicate edge");
    }
    g.adj_[static_cast<size_t>(e.u)] |= bit(e.v);
    g.adj_[static_cast<size_t>(e.v)] |= bit(e.u);
    if (e.sign == -1) {
      g.neg_[static_cast<size_t>(e.u)] |= bit(e.v);
      g.neg_[static_cast<size_t>(e.v)] |= bit(e.u);
    }
    ++g.m_;
  }
  return g;
}

SignedGraph SignedGraph::build(int n, std::initializer_list<SignedEdge> edges) {
  return build(n, std::span<const SignedEdge>(edges.begin(), edges.size()));
}

SignedGraph SignedGraph::from_masks(int n, std::span<const uint64_t> adj,
                                    std::span<const uint64_t> neg) {
  SignedGraph g;
  g.n_ = n;
  g.adj_.assign(adj.begin(), adj.end());
  g.neg_.assign(neg.begin(), neg.end());
  int twice_m = 0;
  for (int v = 0; v < n; ++v) {
    twice_m += std::popcount(g.adj_[static_cast<size_t>(v)]);
  }
  g.m_ = twice_m / 2;
  return g;
}

bool SignedGraph::has_edge(int u, int v) const {
  check_vertex(n_, u, "has_edge");
  check_vertex(n_, v, "has_edge");
  return (adj_[static_cast<size_t>(u)] & bit(v)) != 0;
}

int SignedGraph::sign(int u, int v) const {
  if (!has_edge(u, v)) return 0;
  return (neg_[static_cast<size_t>(u)] & bit(v)) ? -1 : +1;
}

int SignedGraph::degree(int v) const {
  check_vertex(n_, v, "degree");
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

uint64_t SignedGraph::vertex_mask() const {
  return n_ == kMaxVertices ? ~uint64_t{0} : bit(n_) - 1;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> result;
  result.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      result.push_back({u, v, (neg_[static_cast<size_t>(u)] & bit(v)) ? -1 : +1});
    }
  }
  return result;
}

std::string to_string(const SignedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " [";
  bool first = true;
  for (const SignedEdge& e : g.edges()) {
    if (!first) out << " ";
    first = false;
    out << e.u << (e.sign > 0 ? "+" : "-") << e.v;
  }
  out << "]";
  return out.str();
}

SignedGraph switched(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.order()) {
    throw std::invalid_argument("switching function must be total on the vertex set");
  }
  const int n = g.order();
  const uint64_t negated = theta.negated_mask();
  std::vector<uint64_t> adj(static_cast<size_t>(n)), neg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<size_t>(v)] = g.neighbors(v);
    // Edges with exactly one endpoint in the negated set flip sign.
    uint64_t flip = (negated & bit(v)) ? ~negated : negated;
    neg[static_cast<size_t>(v)] = g.negative_neighbors(v) ^ (g.neighbors(v) & flip);
  }
  return SignedGraph::from_masks(n, adj, neg);
}

SignedGraph negated(const SignedGraph& g) {
  const int n = g.order();
  std::vector<uint64_t> adj(static_cast<size_t>(n)), neg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<size_t>(v)] = g.neighbors(v);
    neg[static_cast<size_t>(v)] = g.neighbors(v) ^ g.negative_neighbors(v);
  }
  return SignedGraph::from_masks(n, adj, neg);
}

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const int> vertices) {
  uint64_t seen = 0;
  for (int v : vertices) {
    check_vertex(g.order(), v, "induced_subgraph");
    if (seen & (uint64_t{1} << v)) {
      throw std::invalid_argument("induced_subgraph: repeated vertex in subset");
    }
    seen |= uint64_t{1} << v;
  }
  InducedSubgraph result;
  result.vertex_map.assign(vertices.begin(), vertices.end());
  const int k = static_cast<int>(vertices.size());
  std::vector<SignedEdge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int s = g.sign(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]);
      if (s != 0) edges.push_back({i, j, s});
    }
  }
  result.graph = SignedGraph::build(k, edges);
  return result;
}

InducedSubgraph induced_subgraph(const SignedGraph& g, uint64_t vertex_set) {
  std::vector<int> vertices;
  uint64_t rest = vertex_set;
  while (rest) {
    vertices.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  return induced_subgraph(g, vertices);
}

SignedGraph add_twin(const SignedGraph& g, int v) {
  check_vertex(g.order(), v, "add_twin");
  const int n = g.order();
  if (n + 1 > kMaxVertices) {
    throw std::invalid_argument("add_twin: vertex limit reached");
  }
  std::vector<uint64_t> adj(static_cast<size_t>(n) + 1), neg(static_cast<size_t>(n) + 1);
  for (int w = 0; w < n; ++w) {
    adj[static_cast<size_t>(w)] = g.neighbors(w);
    neg[static_cast<size_t>(w)] = g.negative_neighbors(w);
    if (g.neighbors(v) & bit(w)) {
      adj[static_cast<size_t>(w)] |= bit(n);
      if (g.negative_neighbors(v) & bit(w)) neg[static_cast<size_t>(w)] |= bit(n);
    }
  }
  adj[static_cast<size_t>(n)] = g.neighbors(v);
  neg[static_cast<size_t>(n)] = g.negative_neighbors(v);
  return SignedGraph::from_masks(n + 1, adj, neg);
}

std::vector<std::pair<int, int>> find_twins(const SignedGraph& g) {
  std::vector<std::pair<int, int>> twins;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.neighbors(u) != g.neighbors(v)) continue;
      // Equal neighborhoods force u,v non-adjacent. Twin iff the sign
      // patterns agree exactly or after one global flip.
      uint64_t nu = g.negative_neighbors(u);
      uint64_t nv = g.negative_neighbors(v);
      if (nu == nv || nu == (nv ^ g.neighbors(v))) {
        twins.emplace_back(u, v);
      }
    }
  }
  return twins;
}

bool is_reduced(const SignedGraph& g) { return find_twins(g).empty(); }

}  // namespace sg
