#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"
#include "recon/verify.hpp"

using namespace recon;
using nlohmann::json;

namespace {

/// Hypomorphic non-isomorphic pairs among `classes`, by brute force.
template <class T>
std::size_t brute_pairs(const std::vector<T>& classes) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (oracle::hypomorphic(classes[i], classes[j]) && !oracle::isomorphic(classes[i], classes[j])) ++count;
  return count;
}

}  // namespace

TEST_CASE("finalize derives the verdict") {
  Report r;
  finalize(r);
  CHECK(r.verdict == Verdict::partial);
  r.instances_checked = 3;
  finalize(r);
  CHECK(r.verdict == Verdict::verified);
  r.counterexamples.push_back({});
  finalize(r);
  CHECK(r.verdict == Verdict::refuted);
}

TEST_CASE("subset permutation suite counts n! instances") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Report r = verify_theorem1(n);
    CHECK(r.instances_checked == oracle::factorial(n));
    CHECK(r.verdict == Verdict::verified);
  }
  CHECK_THROWS_AS(verify_theorem1(7), CapExceeded);
}

TEST_CASE("simple graph sweep: the n=2 control and small n") {
  const Report r2 = verify_ulam(2, {});
  REQUIRE(r2.counterexamples.size() == 1);
  CHECK(r2.verdict == Verdict::refuted);
  const auto& c = r2.counterexamples.front();
  const SimpleGraph a = parse_graph6(c.a.get<std::string>());
  const SimpleGraph b = parse_graph6(c.b.get<std::string>());
  CHECK(a.edge_count() + b.edge_count() == 1);
  for (std::size_t n = 3; n <= 6; ++n) {
    const Report r = verify_ulam(n, {});
    CHECK(r.verdict == Verdict::verified);
    CHECK(r.instances_checked == oracle::labeled_dedup_count(n));
  }
}

TEST_CASE("hypergraph sweep matches brute force at n=4 and n=5") {
  UlamParams p;
  p.kind = StructureKind::hypergraph;
  p.arity = 3;
  for (std::size_t n : {4, 5}) {
    const Report r = verify_ulam(n, p);
    CHECK(r.counterexamples.size() == brute_pairs(all_hypergraphs(n, 3)));
    for (const auto& c : r.counterexamples) {
      const auto a = std::get<UniformHypergraph>(structure_from_json(c.a));
      const auto b = std::get<UniformHypergraph>(structure_from_json(c.b));
      CHECK(oracle::hypomorphic(a, b));
      CHECK_FALSE(oracle::isomorphic(a, b));
      CHECK(c.witness_absent);
      CHECK(c.deck_hash == deck_hash(deck(a)).hex());
    }
  }
}

TEST_CASE("colored and multigraph sweeps agree with brute force") {
  UlamParams p;
  p.kind = StructureKind::colored;
  p.colors = 3;
  CHECK(verify_ulam(4, p).counterexamples.size() == brute_pairs(all_colored(4, 3)));
  p.kind = StructureKind::multigraph;
  p.layers = 2;
  CHECK(verify_ulam(3, p).counterexamples.size() == brute_pairs(all_multigraph_tuples(3, 2)));
}

TEST_CASE("matrix corollary, both diagonal modes, against principal-submatrix decks") {
  for (std::size_t alphabet : {2, 3}) {
    for (DiagonalMode d : {DiagonalMode::constant, DiagonalMode::free}) {
      const Report r = verify_matrix_corollary(3, alphabet, d);
      const std::size_t v = d == DiagonalMode::free ? alphabet : 1;
      const auto classes = all_colored(3, alphabet, v);
      CHECK(r.instances_checked == classes.size());
      CHECK(r.counterexamples.size() == brute_pairs(classes));
      CHECK(r.parameters["diagonal"] == to_string(d));
    }
  }
  // constant diagonal over {0,1} is the simple graph sweep
  for (std::size_t n = 2; n <= 5; ++n) {
    const Report m = verify_matrix_corollary(n, 2, DiagonalMode::constant);
    const Report u = verify_ulam(n, {});
    CHECK(m.instances_checked == u.instances_checked);
    CHECK(m.counterexamples.size() == u.counterexamples.size());
  }
}

TEST_CASE("measure and lemma suites at small n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Report r = verify_measure_theorem(n);
    CHECK(r.verdict == (n == 2 ? Verdict::refuted : Verdict::verified));
  }
  const Report l = verify_lemma_l2(4);
  CHECK(l.verdict == Verdict::verified);
  CHECK(l.instances_checked == 11 * 11 * 24);
  CHECK_THROWS_AS(verify_lemma_l2(6), CapExceeded);
}

TEST_CASE("property suite is seeded and deterministic") {
  PropertyOptions p;
  p.random_trials = 50;
  p.exhaustive_max_n = 4;
  p.kelly_max_n = 5;
  const Report a = verify_properties(p);
  const Report b = verify_properties(p, {4});
  CHECK(a.verdict == Verdict::verified);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("report serialization") {
  const Report r = verify_ulam(2, {});
  const json j = to_json(r);
  CHECK(j["claim_id"] == "ulam");
  CHECK(j["verdict"] == "refuted");
  CHECK(j["instances_checked"] == 2);
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(to_json(r, true).contains("elapsed_ms"));
  CHECK(j["counterexamples"][0]["witness_absent"] == true);
  CHECK(to_csv(r).find("ulam") != std::string::npos);
  CHECK(to_text(r).find("refuted") != std::string::npos);
}

TEST_CASE("thread count never changes report bytes") {
  UlamParams h;
  h.kind = StructureKind::hypergraph;
  CHECK(to_json(verify_ulam(5, h, {1})).dump() == to_json(verify_ulam(5, h, {4})).dump());
  CHECK(to_json(verify_measure_theorem(6, {1})).dump() == to_json(verify_measure_theorem(6, {3})).dump());
  CHECK(to_csv(verify_lemma_l2(4, {1})) == to_csv(verify_lemma_l2(4, {4})));
}

TEST_CASE("index-paired principal submatrices give the same pairs as deck equality") {
  // all labeled symmetric n x n matrices over {0,1} with free diagonal; M
  // and N are paired when deleting row/column i from both gives isomorphic
  // matrices for every i
  for (std::size_t n : {2, 3}) {
    const auto pairs = oracle::subsets(n, 2);
    std::vector<EdgeColoredGraph> labeled;
    for (unsigned m = 0; m < (1u << (pairs.size() + n)); ++m) {
      EdgeColoredGraph g(n, 2, 2);
      for (std::size_t i = 0; i < pairs.size(); ++i) g.set_color(pairs[i][0], pairs[i][1], m >> i & 1);
      for (std::size_t x = 0; x < n; ++x) g.set_vertex_color(x, m >> (pairs.size() + x) & 1);
      labeled.push_back(g);
    }
    std::set<std::pair<Certificate, Certificate>> paired;
    for (const auto& a : labeled) {
      for (const auto& b : labeled) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) {
          all = oracle::isomorphic(oracle::delete_vertex(a, i), oracle::delete_vertex(b, i));
        }
        if (all && !oracle::isomorphic(a, b)) paired.insert(std::minmax(canonical_form(a), canonical_form(b)));
      }
    }
    std::set<std::pair<Certificate, Certificate>> reported;
    for (const auto& c : verify_matrix_corollary(n, 2, DiagonalMode::free).counterexamples) {
      const auto a = std::get<EdgeColoredGraph>(structure_from_json(c.a));
      const auto b = std::get<EdgeColoredGraph>(structure_from_json(c.b));
      reported.insert(std::minmax(canonical_form(a), canonical_form(b)));
    }
    CHECK(paired == reported);
    CHECK(paired.empty() == (n == 3));
  }
}
