#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sg/canonical.hpp"
#include "sg/families.hpp"
#include "sg/structure.hpp"
#include "sg/verify.hpp"
#include "test_helpers.hpp"

using namespace sg;

TEST_CASE("connectivity") {
  CHECK(is_connected(make_cycle(5, Balance::kBalanced)));
  CHECK(is_connected(SignedGraph::build(1, {})));
  CHECK_FALSE(is_connected(SignedGraph::build(4, {{0, 1, +1}, {2, 3, +1}})));
}

TEST_CASE("girth of cycles, forests and thetas") {
  CHECK(girth(make_cycle(7, Balance::kUnbalanced))->length == 7);
  CHECK_FALSE(girth(make_path(6)).has_value());
  CHECK(girth(make_theta(4, 3, 4))->length == 5);
}

TEST_CASE("girth witness is the lexicographically smallest vertex sequence") {
  SignedGraph c4 = make_cycle(4, Balance::kBalanced);
  CHECK(girth(c4)->vertices == std::vector<int>{0, 1, 2, 3});
  // complete graph on 4 vertices: many triangles, the witness starts 0,1,2
  SignedGraph k4 = make_complete_multipartite(std::vector<int>{1, 1, 1, 1},
                                              MultipartiteVariant::kAllPositive);
  CHECK(girth(k4)->vertices == std::vector<int>{0, 1, 2});
  // a 4-cycle on scattered labels: the witness starts at its smallest vertex
  SignedGraph scattered = SignedGraph::build(6, {{5, 2, +1}, {2, 4, +1}, {4, 1, +1}, {1, 5, +1}});
  CHECK(girth(scattered)->vertices == std::vector<int>{1, 4, 2, 5});
}

TEST_CASE("girth_cycles finds every shortest cycle once") {
  SignedGraph k4 = make_complete_multipartite(std::vector<int>{1, 1, 1, 1},
                                              MultipartiteVariant::kAllPositive);
  CHECK(girth_cycles(k4).size() == 4);  // the four triangles
  SignedGraph theta = make_theta(4, 3, 4);
  CHECK(girth_cycles(theta).size() == 2);  // two 5-cycles, one 6-cycle
}

TEST_CASE("cycle_sign") {
  SignedGraph c4 = make_cycle(4, Balance::kBalanced);
  std::vector<int> cycle{0, 1, 2, 3};
  CHECK(cycle_sign(c4, cycle) == +1);
  SignedGraph unb = make_cycle(4, Balance::kUnbalanced);
  CHECK(cycle_sign(unb, cycle) == -1);
  SignedGraph two_neg =
      SignedGraph::build(5, {{0, 1, -1}, {1, 2, -1}, {2, 3, +1}, {3, 4, +1}, {4, 0, +1}});
  std::vector<int> c5{0, 1, 2, 3, 4};
  CHECK(cycle_sign(two_neg, c5) == +1);

  std::vector<int> not_cycle{0, 1, 3, 2};
  CHECK_THROWS_AS(cycle_sign(c4, not_cycle), std::invalid_argument);
  std::vector<int> repeated{0, 1, 0, 1};
  CHECK_THROWS_AS(cycle_sign(c4, repeated), std::invalid_argument);
  std::vector<int> too_short{0, 1};
  CHECK_THROWS_AS(cycle_sign(c4, too_short), std::invalid_argument);
}

TEST_CASE("balance detection with witnesses") {
  SUBCASE("all-positive cycles are balanced with the trivial switching") {
    BalanceResult result = check_balance(make_cycle(6, Balance::kBalanced));
    REQUIRE(result.balanced);
    for (int v = 0; v < 6; ++v) CHECK(result.to_all_positive(v) == +1);
  }
  SUBCASE("one negative edge yields the 6-cycle as witness") {
    BalanceResult result = check_balance(make_cycle(6, Balance::kUnbalanced));
    REQUIRE_FALSE(result.balanced);
    CHECK(result.negative_cycle.size() == 6);
    CHECK(cycle_sign(make_cycle(6, Balance::kUnbalanced), result.negative_cycle) == -1);
  }
  SUBCASE("trees with arbitrary signs are balanced and switch to all-positive") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 9);
      std::vector<SignedEdge> edges;
      for (int v = 1; v < n; ++v) {
        edges.push_back({static_cast<int>(rng() % v), v, rng() % 2 ? +1 : -1});
      }
      SignedGraph tree = SignedGraph::build(n, edges);
      BalanceResult result = check_balance(tree);
      REQUIRE(result.balanced);
      SignedGraph switched_tree = switched(tree, result.to_all_positive);
      for (const SignedEdge& e : switched_tree.edges()) CHECK(e.sign == +1);
    }
  }
  SUBCASE("the unbalanced witness always traces a negative cycle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      SignedGraph g = random_signed_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
      BalanceResult result = check_balance(g);
      if (!result.balanced) CHECK(cycle_sign(g, result.negative_cycle) == -1);
    }
  }
}

TEST_CASE("switching equivalence") {
  std::mt19937_64 rng(17);
  SUBCASE("a graph is equivalent to any of its switchings") {
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 9);
      SignedGraph g = random_signed_graph(rng, n);
      CHECK(switching_equivalent(g, switched(g, random_switching(rng, n))));
    }
  }
  SUBCASE("balanced and unbalanced 4-cycles are inequivalent") {
    CHECK_FALSE(
        switching_equivalent(make_cycle(4, Balance::kBalanced), make_cycle(4, Balance::kUnbalanced)));
  }
  SUBCASE("one-negative-edge 5-cycles are equivalent wherever the edge sits") {
    for (int pos = 0; pos < 5; ++pos) {
      std::vector<SignedEdge> edges;
      for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, i == pos ? -1 : +1});
      CHECK(switching_equivalent(make_cycle(5, Balance::kUnbalanced),
                                 SignedGraph::build(5, edges)));
    }
  }
  SUBCASE("different underlying graphs are never equivalent") {
    CHECK_FALSE(switching_equivalent(make_path(3), make_path(4)));
    CHECK_FALSE(switching_equivalent(make_path(4), make_cycle(4, Balance::kBalanced)));
  }
}

TEST_CASE("certificates normalize the switching class") {
  SUBCASE("all one-negative-edge 5-cycles get cotree sign '-'") {
    for (int pos = 0; pos < 5; ++pos) {
      std::vector<SignedEdge> edges;
      for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, i == pos ? -1 : +1});
      CHECK(certificate(SignedGraph::build(5, edges)).cotree_signs == "-");
    }
  }
  SUBCASE("balanced graphs get all-positive cotree signs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 3 + static_cast<int>(rng() % 7);
      SignedGraph g = random_signed_graph(rng, n, 0.6);
      SignedGraph balanced = switched(SignedGraph::build(n, [&] {
                                        std::vector<SignedEdge> plus;
                                        for (SignedEdge e : g.edges()) {
                                          e.sign = +1;
                                          plus.push_back(e);
                                        }
                                        return plus;
                                      }()),
                                      random_switching(rng, n));
      std::string signs = certificate(balanced).cotree_signs;
      CHECK(signs.find('-') == std::string::npos);
    }
  }
  SUBCASE("theta graphs carry two cotree signs") {
    CHECK(certificate(make_theta(4, 3, 4)).cotree_signs.size() == 2);
  }
}

TEST_CASE("switching class count is 2^(m-n+c)") {
  // via certificates over every sign assignment, on each connected
  // isomorphism class through order 5
  for (int n = 2; n <= 5; ++n) {
    EnumerationSpec spec;
    enumerate_underlying(n, spec, [&](const SignedGraph& u) {
      std::vector<SignedEdge> edges = u.edges();
      const int m = static_cast<int>(edges.size());
      std::set<std::string> classes;
      for (uint64_t signs = 0; signs < (uint64_t{1} << m); ++signs) {
        for (int e = 0; e < m; ++e) edges[static_cast<size_t>(e)].sign = (signs >> e & 1) ? -1 : +1;
        classes.insert(certificate(SignedGraph::build(n, edges)).cotree_signs);
      }
      CHECK(classes.size() == uint64_t{1} << (m - n + 1));
    });
  }
  // a disconnected example: two components, c = 2
  SignedGraph two_triangles = SignedGraph::build(
      6, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1}, {3, 4, +1}, {4, 5, +1}, {3, 5, +1}});
  std::set<std::string> classes;
  std::vector<SignedEdge> edges = two_triangles.edges();
  for (uint64_t signs = 0; signs < 64; ++signs) {
    for (int e = 0; e < 6; ++e) edges[static_cast<size_t>(e)].sign = (signs >> e & 1) ? -1 : +1;
    classes.insert(certificate(SignedGraph::build(6, edges)).cotree_signs);
  }
  CHECK(classes.size() == 4);  // 2^(6-6+2)
}

TEST_CASE("distance layers around a cycle") {
  SUBCASE("one pendant leaf sits in the first layer") {
    SignedGraph g = make_canonical_unicyclic(5, Balance::kBalanced, std::vector<int>{1});
    std::vector<int> cycle = girth(g)->vertices;
    std::vector<std::vector<int>> layers = distance_layers(g, cycle);
    REQUIRE(layers.size() == 1);
    CHECK(layers[0] == std::vector<int>{5});
  }
  SUBCASE("a hanging path of length 2 fills two singleton layers") {
    std::vector<SignedEdge> edges = make_cycle(5, Balance::kBalanced).edges();
    edges.push_back({0, 5, +1});
    edges.push_back({5, 6, +1});
    SignedGraph g = SignedGraph::build(7, edges);
    std::vector<std::vector<int>> layers = distance_layers(g, girth(g)->vertices);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0] == std::vector<int>{5});
    CHECK(layers[1] == std::vector<int>{6});
  }
  SUBCASE("canonical unicyclic graphs have nothing beyond the first layer") {
    SignedGraph g = make_canonical_unicyclic(6, Balance::kUnbalanced, std::vector<int>{2, 0, 1});
    std::vector<std::vector<int>> layers = distance_layers(g, girth(g)->vertices);
    CHECK(layers.size() == 1);
  }
}

TEST_CASE("canonical unicyclic recognition") {
  CHECK(is_canonical_unicyclic(make_cycle(5, Balance::kUnbalanced)));
  CHECK(is_canonical_unicyclic(make_canonical_unicyclic(4, Balance::kBalanced, std::vector<int>{2})));
  std::vector<SignedEdge> edges = make_cycle(5, Balance::kBalanced).edges();
  edges.push_back({0, 5, +1});
  edges.push_back({5, 6, +1});
  CHECK_FALSE(is_canonical_unicyclic(SignedGraph::build(7, edges)));  // depth-2 attachment
  CHECK_FALSE(is_canonical_unicyclic(make_theta(4, 3, 4)));           // two cycles
  CHECK_FALSE(is_canonical_unicyclic(make_path(4)));                  // no cycle
}

TEST_CASE("pendant star decomposition") {
  SUBCASE("one star on a 5-cycle") {
    PendantStarDecomposition dec =
        pendant_star_decomposition(make_canonical_unicyclic(5, Balance::kBalanced, std::vector<int>{1}));
    CHECK(dec.star_count == 1);
    CHECK(dec.majors == std::vector<int>{0});
    CHECK(dec.arc_orders == std::vector<int>{4});
  }
  SUBCASE("two antipodal stars on a 6-cycle") {
    PendantStarDecomposition dec = pendant_star_decomposition(
        make_canonical_unicyclic(6, Balance::kBalanced, std::vector<int>{1, 0, 0, 1}));
    CHECK(dec.star_count == 2);
    CHECK(dec.arc_orders == std::vector<int>{2, 2});
  }
  SUBCASE("adjacent stars on a 7-cycle yield an empty arc") {
    PendantStarDecomposition dec = pendant_star_decomposition(
        make_canonical_unicyclic(7, Balance::kBalanced, std::vector<int>{1, 1}));
    CHECK(dec.star_count == 2);
    CHECK(dec.arc_orders == std::vector<int>{0, 5});
  }
  SUBCASE("the identity k + sum(l) = g holds across configurations") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      int glen = 3 + static_cast<int>(rng() % 7);
      std::vector<int> leaves(static_cast<size_t>(glen), 0);
      int total = 0;
      for (int& count : leaves) {
        count = static_cast<int>(rng() % 3);
        total += count;
      }
      if (total == 0) leaves[0] = 1;
      PendantStarDecomposition dec =
          pendant_star_decomposition(make_canonical_unicyclic(glen, Balance::kBalanced, leaves));
      int sum = dec.star_count;
      for (int arc : dec.arc_orders) sum += arc;
      CHECK(sum == glen);
    }
  }
  SUBCASE("bare cycles and non-canonical graphs are rejected") {
    CHECK_THROWS_AS(pendant_star_decomposition(make_cycle(5, Balance::kBalanced)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pendant_star_decomposition(make_theta(4, 3, 4)), std::invalid_argument);
  }
}

TEST_CASE("structure report aggregates the pieces") {
  StructureReport report =
      analyze_structure(make_canonical_unicyclic(5, Balance::kUnbalanced, std::vector<int>{1}));
  CHECK(report.connected);
  CHECK(report.girth == 5);
  CHECK_FALSE(report.balanced);
  CHECK(report.canonical_unicyclic);
  CHECK(report.layers.size() == 1);

  StructureReport path_report = analyze_structure(make_path(4));
  CHECK_FALSE(path_report.girth.has_value());
  CHECK(path_report.balanced);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng() % 11);
    SignedGraph g = random_signed_graph(rng, n);
    DecodedGraph decoded = graph6_decode(graph6_encode(g));
    CHECK(decoded.n == n);
    for (int v = 0; v < n; ++v) CHECK(decoded.adj[static_cast<size_t>(v)] == g.neighbors(v));
  }
  // the long form kicks in above 62 vertices
  SignedGraph big = SignedGraph::build(64, {{0, 63, +1}, {5, 40, -1}});
  DecodedGraph decoded = graph6_decode(graph6_encode(big));
  CHECK(decoded.n == 64);
  CHECK((decoded.adj[0] >> 63 & 1) == 1);
  CHECK((decoded.adj[5] >> 40 & 1) == 1);
}

TEST_CASE("canonical forms are invariant under relabeling and switching") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    SignedGraph g = random_signed_graph(rng, n, 0.5);
    // random relabeling
    std::vector<int> perm(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<SignedEdge> relabeled;
    for (const SignedEdge& e : g.edges()) {
      relabeled.push_back({perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)], e.sign});
    }
    SignedGraph h = switched(SignedGraph::build(n, relabeled), random_switching(rng, n));
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(canonical_signed_class(g) == canonical_signed_class(h));
  }
  // balanced and unbalanced cycles stay distinguishable
  CHECK(canonical_signed_class(make_cycle(5, Balance::kBalanced)) !=
        canonical_signed_class(make_cycle(5, Balance::kUnbalanced)));
}
