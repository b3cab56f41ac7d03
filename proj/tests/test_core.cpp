#include <doctest.h>

#include "oracles.hpp"
#include "recon/core.hpp"
#include "recon/random.hpp"

using namespace recon;

TEST_CASE("vertex set basics") {
  VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.elements() == std::vector<std::size_t>{0, 2, 5});
  CHECK(s.without(2).with(1) == VertexSet{0, 1, 5});
  CHECK(VertexSet::range(4).mask() == 0xF);
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet{1, 2}.subset_of(VertexSet::range(3)));
  CHECK_THROWS_AS(VertexSet{64}, std::out_of_range);
}

TEST_CASE("permutation validation and algebra") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  const Permutation p({1, 2, 0});
  const Permutation q({0, 2, 1});
  CHECK(compose(p, p.inverse()).is_identity());
  // compose(outer, inner)(x) = outer(inner(x))
  const Permutation pq = compose(p, q);
  for (std::size_t x = 0; x < 3; ++x) CHECK(pq(x) == p(q(x)));
  CHECK(p.image(VertexSet{0, 1}) == VertexSet{1, 2});
}

TEST_CASE("simple graph edges and errors") {
  SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(degree(g, 1) == 2);
  CHECK_THROWS_AS(g.set_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.adjacent(0, 4), std::out_of_range);
  CHECK(SimpleGraph::complete(5).edge_count() == 10);
}

TEST_CASE("induced subgraph relabels in ascending order") {
  SimpleGraph g(5, {{0, 4}, {1, 3}, {3, 4}});
  const SimpleGraph h = induced_subgraph(g, VertexSet{1, 3, 4});
  CHECK(h == SimpleGraph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(induced_subgraph(g, VertexSet{5}), std::out_of_range);
}

TEST_CASE("induced subgraph agrees with vertex deletion oracle") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(9);
    SimpleGraph g(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (rng.below(2)) g.set_edge(x, y);
    const std::size_t v = rng.below(n);
    CHECK(induced_subgraph(g, VertexSet::range(n).without(v)) == oracle::delete_vertex(g, v));
  }
}

TEST_CASE("apply_permutation maps edge {x,y} to {p x, p y}") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(8);
    SimpleGraph g(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (rng.below(2)) g.set_edge(x, y);
    const Permutation p = random_permutation(n, rng);
    CHECK(oracle::maps_onto(g, apply_permutation(p, g), p.images()));
  }
  CHECK_THROWS_AS(apply_permutation(Permutation::identity(2), SimpleGraph(3)), std::invalid_argument);
}

TEST_CASE("colored graph ranges") {
  EdgeColoredGraph g(3, 3, 2);
  g.set_color(0, 2, 2);
  g.set_vertex_color(1, 1);
  CHECK(g.color(2, 0) == 2);
  CHECK(g.vertex_color(1) == 1);
  CHECK_THROWS_AS(g.set_color(0, 1, 3), std::out_of_range);
  CHECK_THROWS_AS(g.set_vertex_color(0, 2), std::out_of_range);
  CHECK_THROWS_AS(EdgeColoredGraph(2, 0), std::invalid_argument);
}

TEST_CASE("fuse and split are inverse") {
  SimpleGraph a(3, {{0, 1}});
  SimpleGraph b(3, {{0, 1}, {1, 2}});
  const MultiGraphTuple t({a, b});
  const EdgeColoredGraph f = fuse_multigraph(t);
  CHECK(f.edge_colors() == 4);
  CHECK(f.color(0, 1) == 3);
  CHECK(f.color(1, 2) == 2);
  CHECK(f.color(0, 2) == 0);
  CHECK(split_multigraph(f, 2) == t);
  CHECK_THROWS_AS(MultiGraphTuple({a, SimpleGraph(2)}), std::invalid_argument);
  CHECK_THROWS_AS(MultiGraphTuple(std::vector<SimpleGraph>{}), std::invalid_argument);
}

TEST_CASE("hypergraph edges are validated and sorted") {
  UniformHypergraph h(4, 3, {{1, 2, 3}, {0, 1, 2}, {0, 1, 2}});
  CHECK(h.edge_count() == 2);
  CHECK(h.edges().front() == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(h.add_edge(VertexSet{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(VertexSet{0, 1, 4}), std::out_of_range);
  const UniformHypergraph card = induced_subgraph(h, VertexSet{0, 1, 2});
  CHECK(card.edge_count() == 1);
  CHECK(card == oracle::delete_vertex(h, 3));
}

TEST_CASE("rng is reproducible and split streams differ") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  Rng c = a.split();
  CHECK(c() != a());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(5) < 5);
    const double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
