#ifndef RECON_VERIFY_HPP
#define RECON_VERIFY_HPP

// Experiment harness. Each claim becomes an exhaustive sweep that counts the
// instances it examined and records every counterexample in full, so that a
// finding can be re-checked from the report alone. No claim is assumed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "recon/canon.hpp"
#include "recon/deck.hpp"
#include "recon/parallel.hpp"
#include "recon/structure_json.hpp"

namespace recon {

enum class Verdict { verified, refuted, partial };

std::string to_string(Verdict v);

struct Counterexample {
  nlohmann::json a;
  nlohmann::json b;            // null when the counterexample is a single object
  std::string deck_hash;       // hex; empty when no deck is involved
  bool witness_absent = true;  // no isomorphism exists between a and b
  std::string note;            // which check failed, when more than one is run
};

struct Report {
  std::string claim_id;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
  Verdict verdict = Verdict::partial;
};

/// verdict = refuted iff counterexamples exist, verified iff instances were
/// checked, partial otherwise.
void finalize(Report& r);

// Serialization. Timing is left out unless asked for, so that the default
// output is byte-identical across runs and thread counts.
nlohmann::json to_json(const Report& r, bool include_timing = false);
std::string to_csv(const Report& r, bool include_timing = false);
std::string to_text(const Report& r, bool include_timing = false);

struct SweepOptions {
  unsigned threads = 1;
};

/// Decks of all given classes, bucketed by deck_hash and confirmed by exact
/// multiset comparison; every hypomorphic pair is checked for isomorphism
/// and recorded when none exists. `classes` must be pairwise non-isomorphic.
template <Structure T>
Report sweep_hypomorphic_pairs(std::string claim_id, nlohmann::json parameters,
                               const std::vector<T>& classes, SweepOptions opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.claim_id = std::move(claim_id);
  r.parameters = std::move(parameters);
  r.instances_checked = classes.size();

  const auto decks = parallel_map<Deck>(classes.size(), opts.threads,
                                        [&](std::size_t i) { return deck(classes[i]); });
  std::vector<std::pair<Digest128, std::size_t>> keyed;
  keyed.reserve(decks.size());
  for (std::size_t i = 0; i < decks.size(); ++i) keyed.emplace_back(deck_hash(decks[i]), i);
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t lo = 0, hi = 0; lo < keyed.size(); lo = hi) {
    hi = lo + 1;
    while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) ++hi;
    for (std::size_t x = lo; x < hi; ++x) {
      for (std::size_t y = x + 1; y < hi; ++y) {
        const std::size_t i = keyed[x].second;
        const std::size_t j = keyed[y].second;
        if (decks[i] == decks[j]) hits.emplace_back(std::min(i, j), std::max(i, j));
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  for (auto [i, j] : hits) {
    if (are_isomorphic(classes[i], classes[j])) {
      throw std::logic_error("sweep input contains two isomorphic structures");
    }
    r.counterexamples.push_back({to_report_json(classes[i]), to_report_json(classes[j]),
                                 deck_hash(decks[i]).hex(), true, "hypomorphic, not isomorphic"});
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  finalize(r);
  return r;
}

/// Every subset permutation at n lifts to a vertex permutation that induces
/// it, the intersection formula returns that same vertex, and permutations
/// correspond to subset permutations one to one. 1 <= n <= 6.
Report verify_theorem1(std::size_t n);

struct UlamParams {
  StructureKind kind = StructureKind::simple;
  std::size_t colors = 3;  // colored: pair colors k
  std::size_t layers = 2;  // multigraph: tuple length
  std::size_t arity = 3;   // hypergraph: m
};

/// Hypomorphic non-isomorphic pairs among all classes of the given kind.
Report verify_ulam(std::size_t n, const UlamParams& params, SweepOptions opts = {});

inline constexpr std::size_t kMeasureTheoremCap = 8;

/// Over all pairs of simple-graph classes: measure-vector equality agrees
/// with deck equality, and equal vectors never occur without isomorphism.
Report verify_measure_theorem(std::size_t n, SweepOptions opts = {});

enum class DiagonalMode { constant, free };

std::string to_string(DiagonalMode d);

/// Symmetric n x n matrices over {0, ..., alphabet-1} up to simultaneous
/// row/column permutation, as colored graphs whose vertex colors are the
/// diagonal (all 0 in constant mode).
Report verify_matrix_corollary(std::size_t n, std::size_t alphabet, DiagonalMode diagonal,
                               SweepOptions opts = {});

inline constexpr std::size_t kLemmaL2Cap = 5;

/// For every ordered pair of simple-graph classes and every subset
/// permutation: a measure-preserving one implies an isomorphism.
Report verify_lemma_l2(std::size_t n, SweepOptions opts = {});

struct PropertyOptions {
  std::uint64_t seed = 1;
  std::size_t random_trials = 1000;
  std::size_t exhaustive_max_n = 5;
  std::size_t random_max_n = 10;
  std::size_t kelly_max_n = 6;
};

/// Invariant suites that do not need a full sweep: certificate relabeling
/// invariance (exhaustive and random), witness soundness, the deck edge
/// count identity, and equal profiles for hypomorphic pairs.
Report verify_properties(const PropertyOptions& popts, SweepOptions opts = {});

}  // namespace recon

#endif  // RECON_VERIFY_HPP
