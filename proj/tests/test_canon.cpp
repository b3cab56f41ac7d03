#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "recon/canon.hpp"
#include "recon/random.hpp"

using namespace recon;

namespace {

SimpleGraph random_simple(std::size_t n, Rng& rng) {
  SimpleGraph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (rng.below(2)) g.set_edge(x, y);
  return g;
}

}  // namespace

TEST_CASE("C4 and P4 are distinguished, C4 relabelings are not") {
  const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_form(c4) != canonical_form(p4));
  const SimpleGraph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_form(c4) == canonical_form(c4b));
  CHECK_FALSE(are_isomorphic(c4, p4).has_value());
}

TEST_CASE("11 distinct certificates among all labeled graphs on 4 vertices") {
  std::set<Certificate> certs;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    SimpleGraph g(4);
    std::size_t bit = 0;
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = x + 1; y < 4; ++y, ++bit)
        if (mask >> bit & 1) g.set_edge(x, y);
    certs.insert(canonical_form(g));
  }
  CHECK(certs.size() == 11);
}

TEST_CASE("certificate equality matches brute-force isomorphism on random pairs") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const SimpleGraph a = random_simple(n, rng);
    const SimpleGraph b = random_simple(n, rng);
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("relabeling invariance and witness soundness, simple graphs") {
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(12);
    const SimpleGraph g = random_simple(n, rng);
    const Permutation p = random_permutation(n, rng);
    const SimpleGraph h = apply_permutation(p, g);
    CHECK(canonical_form(g) == canonical_form(h));
    const auto w = are_isomorphic(g, h);
    REQUIRE(w.has_value());
    CHECK(oracle::maps_onto(g, h, w->images()));
  }
}

TEST_CASE("canonical labeling produces the certificate's structure") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const SimpleGraph g = random_simple(1 + rng.below(9), rng);
    const SimpleGraph canon = apply_permutation(canonical_labeling(g), g);
    CHECK(decode_simple(canonical_form(g)) == canon);
  }
}

TEST_CASE("regular graphs with equal degree sequences") {
  // two disjoint triangles vs the 6-cycle: both 2-regular
  const SimpleGraph tt(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const SimpleGraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(canonical_form(tt) != canonical_form(c6));
  // K3,3 vs prism: both 3-regular on 6 vertices
  const SimpleGraph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const SimpleGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_form(k33) != canonical_form(prism));
  Rng rng(1);
  const Permutation p = random_permutation(6, rng);
  CHECK(canonical_form(apply_permutation(p, k33)) == canonical_form(k33));
}

TEST_CASE("colored graphs: colors and diagonal matter") {
  EdgeColoredGraph a(3, 3), b(3, 3);
  a.set_color(0, 1, 1);
  a.set_color(1, 2, 2);
  b.set_color(0, 1, 2);
  b.set_color(1, 2, 1);
  CHECK(canonical_form(a) == canonical_form(b));  // swap endpoints 0 and 2
  b.set_color(0, 2, 1);
  CHECK(canonical_form(a) != canonical_form(b));

  EdgeColoredGraph c(2, 1, 2), d(2, 1, 2);
  c.set_vertex_color(0, 1);
  d.set_vertex_color(1, 1);
  CHECK(canonical_form(c) == canonical_form(d));
  CHECK_THROWS_AS(are_isomorphic(EdgeColoredGraph(2, 2), EdgeColoredGraph(2, 3)), std::invalid_argument);
}

TEST_CASE("colored relabeling invariance with brute-force cross-check") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(6);
    EdgeColoredGraph a(n, 3, 2), b(n, 3, 2);
    for (std::size_t x = 0; x < n; ++x) {
      a.set_vertex_color(x, rng.below(2));
      b.set_vertex_color(x, rng.below(2));
      for (std::size_t y = x + 1; y < n; ++y) {
        a.set_color(x, y, rng.below(3));
        b.set_color(x, y, rng.below(3));
      }
    }
    const Permutation p = random_permutation(n, rng);
    CHECK(canonical_form(apply_permutation(p, a)) == canonical_form(a));
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("multigraph tuples: layer order matters, fusion agrees with brute force") {
  const SimpleGraph e(3), k(3, {{0, 1}});
  CHECK(canonical_form(MultiGraphTuple({e, k})) != canonical_form(MultiGraphTuple({k, e})));
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const MultiGraphTuple a({random_simple(n, rng), random_simple(n, rng)});
    const MultiGraphTuple b({random_simple(n, rng), random_simple(n, rng)});
    const bool same = canonical_form(a) == canonical_form(b);
    CHECK(same == oracle::isomorphic(a, b));
    CHECK(same == (canonical_form(fuse_multigraph(a)) == canonical_form(fuse_multigraph(b))));
  }
}

TEST_CASE("hypergraphs: certificate equality matches brute force") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + rng.below(4);
    UniformHypergraph a(n, 3), b(n, 3);
    for (const auto& e : oracle::subsets(n, 3)) {
      VertexSet s;
      for (std::size_t x : e) s = s.with(x);
      if (rng.below(2)) a.add_edge(s);
      if (rng.below(2)) b.add_edge(s);
    }
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    const Permutation p = random_permutation(n, rng);
    const UniformHypergraph moved = apply_permutation(p, a);
    CHECK(canonical_form(moved) == canonical_form(a));
    const auto w = are_isomorphic(a, moved);
    REQUIRE(w.has_value());
    CHECK(oracle::maps_onto(a, moved, w->images()));
    CHECK(decode_hypergraph(canonical_form(a)) == apply_permutation(canonical_labeling(a), a));
  }
}

TEST_CASE("certificates of different kinds never compare equal") {
  const SimpleGraph g(3, {{0, 1}});
  const EdgeColoredGraph c = EdgeColoredGraph::from_simple(g);
  CHECK(canonical_form(g) != canonical_form(c));
  CHECK(canonical_form(g).kind() == StructureKind::simple);
  CHECK(canonical_form(c).kind() == StructureKind::colored);
}

TEST_CASE("digest is stable and sensitive") {
  const std::vector<std::uint8_t> x{1, 2, 3}, y{1, 2, 4};
  CHECK(digest(x) == digest(x));
  CHECK(digest(x) != digest(y));
  CHECK(digest(x).hex().size() == 32);
}

TEST_CASE("vertex-transitive graph on 20 vertices") {
  // the Petersen graph, doubled with a disjoint copy relabeled
  SimpleGraph g(20);
  const std::pair<std::size_t, std::size_t> pet[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5},
                                                     {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 7}, {7, 9},
                                                     {9, 6}, {6, 8}, {8, 5}};
  for (auto [x, y] : pet) {
    g.set_edge(x, y);
    g.set_edge(x + 10, y + 10);
  }
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    const Permutation p = random_permutation(20, rng);
    CHECK(canonical_form(apply_permutation(p, g)) == canonical_form(g));
  }
}
