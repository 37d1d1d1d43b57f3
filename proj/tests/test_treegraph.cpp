#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mcd/oracle.hpp"
#include "mcd/treegraph.hpp"

using namespace mcd;
using test::path_graph;
using test::star_graph;

TEST_CASE("split_at_edge") {
  Graph p3 = path_graph(3);
  auto [l, r] = split_at_edge(p3, {0, 1});
  CHECK(l == std::vector<int>{0});
  CHECK(r == std::vector<int>{1, 2});

  Graph p4 = path_graph(4);
  auto [l2, r2] = split_at_edge(p4, {1, 2});
  CHECK(l2 == std::vector<int>{0, 1});
  CHECK(r2 == std::vector<int>{2, 3});

  Graph k13 = star_graph(3);
  auto [l3, r3] = split_at_edge(k13, {0, 2});
  CHECK(l3 == std::vector<int>{0, 1, 3});
  CHECK(r3 == std::vector<int>{2});

  CHECK_THROWS_AS(split_at_edge(test::cycle_graph(4), Edge{0, 1}), UnsupportedClassError);
  CHECK_THROWS_AS(split_at_edge(p3, Edge{0, 2}), Error);
}

TEST_CASE("build_cut_bipartite selects exactly the crossing requests") {
  Graph p4 = path_graph(4);
  RequestSet r({{0, 3}, {1, 2}});

  CutBipartite mid = build_cut_bipartite(p4, r, {1, 2});
  CHECK(mid.crossing.size() == 2);

  CutBipartite first = build_cut_bipartite(p4, r, {0, 1});
  REQUIRE(first.crossing.size() == 1);
  CHECK(first.crossing[0] == std::pair<int, int>{0, 3});

  CutBipartite none = build_cut_bipartite(p4, RequestSet({{2, 3}}), Edge{0, 1});
  CHECK(none.crossing.empty());
  CHECK(max_matching(none).size() == 0);
  CHECK(min_vertex_cover_from_matching(none, Matching{}).size() == 0);
}

TEST_CASE("max_matching examples") {
  CutBipartite b;
  b.tree_edge = {1, 2};
  b.left = {0, 1};
  b.right = {2, 3};

  SUBCASE("disjoint edges") {
    b.crossing = {{0, 3}, {1, 2}};
    CHECK(max_matching(b).size() == 2);
  }
  SUBCASE("triangle-ish: brute force confirms 2") {
    b.crossing = {{0, 2}, {0, 3}, {1, 2}};
    Matching m = max_matching(b);
    CHECK(m.size() == 2);
    CHECK(m.size() == brute_force_vertex_cover(b).cost);  // König duality
    VertexCover c = min_vertex_cover_from_matching(b, m);
    CHECK(c.size() == 2);
  }
}

TEST_CASE("single edge cover prefers the left endpoint") {
  CutBipartite b;
  b.left = {4};
  b.right = {7};
  b.crossing = {{4, 7}};
  Matching m = max_matching(b);
  REQUIRE(m.size() == 1);
  VertexCover c = min_vertex_cover_from_matching(b, m);
  CHECK(c.vertices == std::vector<int>{4});
}

TEST_CASE("matching/König duality on random bipartite graphs") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 100; ++it) {
    int nl = 1 + static_cast<int>(rng() % 5), nr = 1 + static_cast<int>(rng() % 5);
    CutBipartite b;
    for (int i = 0; i < nl; ++i) b.left.push_back(i);
    for (int j = 0; j < nr; ++j) b.right.push_back(100 + j);
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nr; ++j)
        if (rng() % 3 == 0) b.crossing.push_back({i, 100 + j});

    Matching m = max_matching(b);
    VertexCover c = min_vertex_cover_from_matching(b, m);
    CHECK(c.size() == m.size());
    CHECK(c.size() == brute_force_vertex_cover(b).cost);
    std::set<int> cover(c.vertices.begin(), c.vertices.end());
    for (const auto& [a, d] : b.crossing) CHECK((cover.count(a) || cover.count(d)));
  }
}

TEST_CASE("solve_treegraph hand-checked instances") {
  Graph p3 = path_graph(3);
  RequestSet across({{0, 2}});
  Dispersal d = solve_treegraph(p3, across);
  CHECK(satisfies(p3, d, across).ok);
  CHECK(d.cost() == 2);

  Graph p4 = path_graph(4);
  RequestSet nested({{0, 3}, {1, 2}});
  Dispersal d2 = solve_treegraph(p4, nested);
  CHECK(satisfies(p4, d2, nested).ok);
  CHECK(d2.cost() == 4);
  CHECK(d2.cost() == brute_force_mcd(p4, nested).cost);

  CHECK(solve_treegraph(p4, RequestSet{}).cost() == 0);
  CHECK_THROWS_AS(solve_treegraph(test::cycle_graph(4), across), UnsupportedClassError);
}

TEST_CASE("solve_treegraph equals oracle on random trees") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 60; ++it) {
    GenParams gp;
    gp.n = 7;
    gp.requests = 1 + static_cast<int>(rng() % 4);
    Instance inst = generate_instance(GenKind::TreeGraph, gp, rng());
    Dispersal d = solve_treegraph(inst.graph, inst.requests);
    CHECK(satisfies(inst.graph, d, inst.requests).ok);
    CHECK(d.cost() == brute_force_mcd(inst.graph, inst.requests).cost);
    CHECK(d == solve_treegraph_serial(inst.graph, inst.requests));
  }
}

TEST_CASE("per-edge matching lower bound against oracle witnesses") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 25; ++it) {
    GenParams gp;
    gp.n = 6;
    gp.requests = 1 + static_cast<int>(rng() % 3);
    Instance inst = generate_instance(GenKind::TreeGraph, gp, rng());
    Dispersal opt = brute_force_mcd(inst.graph, inst.requests).witness;
    for (const Edge& e : inst.graph.edges()) {
      CutBipartite b = build_cut_bipartite(inst.graph, inst.requests, e);
      int copies = 0;
      for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (opt.at(v).count(e)) ++copies;
      CHECK(copies >= max_matching(b).size());
    }
  }
}
