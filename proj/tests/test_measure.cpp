#include <doctest.h>

#include "oracles.hpp"
#include "recon/enumerate.hpp"
#include "recon/measure.hpp"
#include "recon/random.hpp"

using namespace recon;

TEST_CASE("measure of a subset is its induced type") {
  const SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const TypeId a = measure(g, VertexSet{0, 1, 2});
  const TypeId b = measure(g, VertexSet{1, 2, 3});
  const TypeId c = measure(g, VertexSet{0, 1, 3});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size == 3);
}

TEST_CASE("measure vector of the star K1,3") {
  const SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const MeasureVector v = measure_vector(star);
  CHECK(v.total() == 4);
  REQUIRE(v.counts.size() == 2);  // three P3 cards, one empty card
  std::vector<std::size_t> counts;
  for (const auto& [type, c] : v.counts) counts.push_back(c);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<std::size_t>{1, 3});
  CHECK(measure_vector(deck(star)) == v);
}

TEST_CASE("vector equality is deck equality on all pairs at n=5") {
  const auto g5 = all_graphs(5);
  for (const auto& a : g5)
    for (const auto& b : g5) CHECK(vectors_equal(a, b) == oracle::hypomorphic(a, b));
}

TEST_CASE("measure is invariant under relabeling") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(10);
    const SimpleGraph g = random_graph(n, 0.5, rng());
    const Permutation p = random_permutation(n, rng);
    const VertexSet chi(rng() & VertexSet::range(n).mask());
    CHECK(measure(g, chi) == measure(apply_permutation(p, g), p.image(chi)));
  }
}

TEST_CASE("profile sizes are binomial coefficients") {
  const SimpleGraph g = random_graph(7, 0.4, 5);
  for (std::size_t i = 1; i <= 7; ++i) {
    std::size_t total = 0;
    for (const auto& [type, c] : profile(g, i)) total += c;
    CHECK(total == oracle::binomial(7, i));
  }
  CHECK_THROWS_AS(profile(g, 0), std::out_of_range);
  CHECK_THROWS_AS(profile(g, 8), std::out_of_range);
}

TEST_CASE("edge profile counts edges") {
  const SimpleGraph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto p2 = profile(g, 2);
  REQUIRE(p2.size() == 2);
  CHECK(p2.at(measure(g, VertexSet{0, 1})) == 3);
  CHECK(p2.at(measure(g, VertexSet{0, 2})) == 7);
}
