#include "recon/verify.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "recon/enumerate.hpp"
#include "recon/kperm.hpp"
#include "recon/measure.hpp"
#include "recon/random.hpp"

namespace recon {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

json permutation_json(const std::vector<std::size_t>& images) { return images; }

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::simple: return "simple";
    case StructureKind::colored: return "colored";
    case StructureKind::multigraph: return "multigraph";
    case StructureKind::hypergraph: return "hypergraph";
  }
  return "unknown";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::partial: return "partial";
  }
  return "partial";
}

std::string to_string(DiagonalMode d) { return d == DiagonalMode::constant ? "constant" : "free"; }

void finalize(Report& r) {
  if (!r.counterexamples.empty()) {
    r.verdict = Verdict::refuted;
  } else if (r.instances_checked > 0) {
    r.verdict = Verdict::verified;
  } else {
    r.verdict = Verdict::partial;
  }
}

// --- serialization -----------------------------------------------------------

json to_json(const Report& r, bool include_timing) {
  json ces = json::array();
  for (const Counterexample& c : r.counterexamples) {
    json entry = {{"a", c.a}, {"b", c.b}, {"witness_absent", c.witness_absent}};
    if (!c.deck_hash.empty()) entry["deck_hash"] = c.deck_hash;
    if (!c.note.empty()) entry["note"] = c.note;
    ces.push_back(std::move(entry));
  }
  json j = {{"claim_id", r.claim_id},
            {"parameters", r.parameters},
            {"instances_checked", r.instances_checked},
            {"counterexamples", ces},
            {"verdict", to_string(r.verdict)}};
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string to_csv(const Report& r, bool include_timing) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "claim_id,parameters,instances_checked,counterexamples,verdict";
  if (include_timing) out << ",elapsed_ms";
  out << "\n"
      << quote(r.claim_id) << "," << quote(r.parameters.dump()) << "," << r.instances_checked << ","
      << r.counterexamples.size() << "," << to_string(r.verdict);
  if (include_timing) out << "," << r.elapsed.count();
  out << "\n";
  return out.str();
}

std::string to_text(const Report& r, bool include_timing) {
  std::ostringstream out;
  out << r.claim_id << " " << r.parameters.dump() << ": " << to_string(r.verdict) << ", "
      << r.instances_checked << " instances, " << r.counterexamples.size() << " counterexamples";
  if (include_timing) out << ", " << r.elapsed.count() << " ms";
  out << "\n";
  for (const Counterexample& c : r.counterexamples) {
    out << "  " << c.a.dump();
    if (!c.b.is_null()) out << " vs " << c.b.dump();
    if (!c.deck_hash.empty()) out << " deck " << c.deck_hash;
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
  }
  return out.str();
}

// --- theorem 1 ---------------------------------------------------------------

Report verify_theorem1(std::size_t n) {
  const auto start = Clock::now();
  if (n < 1) throw std::invalid_argument("theorem 1 sweep needs n >= 1");
  Report r;
  r.claim_id = "theorem1";
  r.parameters = {{"n", n}};

  const auto subset_perms = enumerate_subset_permutations(n);
  for (const SubsetPermutation& s : subset_perms) {
    ++r.instances_checked;
    const Permutation lifted = lift(s);
    if (!induces(lifted, s)) {
      r.counterexamples.push_back({permutation_json(s.excluded_images()), nullptr, "", true,
                                   "lift does not induce the subset permutation"});
      continue;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (lift_intersection(s, x) != VertexSet{lifted(x)}) {
        r.counterexamples.push_back({permutation_json(s.excluded_images()), x, "", true,
                                     "intersection formula disagrees with lift"});
        break;
      }
    }
  }

  // p -> (chi -> p(chi)) must hit every subset permutation exactly once
  std::vector<std::vector<std::size_t>> images;
  for (const Permutation& p : all_permutations(n)) {
    images.push_back(induced_subset_permutation(p).excluded_images());
  }
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  if (!injective || images.size() != subset_perms.size()) {
    r.counterexamples.push_back({nullptr, nullptr, "", true,
                                 "permutation to subset-permutation map is not a bijection"});
  }

  r.elapsed = since(start);
  finalize(r);
  return r;
}

// --- ulam --------------------------------------------------------------------

Report verify_ulam(std::size_t n, const UlamParams& params, SweepOptions opts) {
  if (n < 1) throw std::invalid_argument("deck sweeps need n >= 1");
  json p = {{"n", n}, {"kind", kind_name(params.kind)}};
  switch (params.kind) {
    case StructureKind::simple:
      return sweep_hypomorphic_pairs("ulam", p, all_graphs(n, opts.threads), opts);
    case StructureKind::colored:
      p["colors"] = params.colors;
      return sweep_hypomorphic_pairs("ulam", p, all_colored(n, params.colors, 1, opts.threads), opts);
    case StructureKind::multigraph:
      p["layers"] = params.layers;
      return sweep_hypomorphic_pairs("ulam", p, all_multigraph_tuples(n, params.layers, opts.threads), opts);
    case StructureKind::hypergraph:
      p["arity"] = params.arity;
      return sweep_hypomorphic_pairs("ulam", p, all_hypergraphs(n, params.arity, opts.threads), opts);
  }
  throw std::invalid_argument("unknown structure kind");
}

// --- measure theorem ---------------------------------------------------------

Report verify_measure_theorem(std::size_t n, SweepOptions opts) {
  const auto start = Clock::now();
  if (n < 1) throw std::invalid_argument("measure sweep needs n >= 1");
  if (n > kMeasureTheoremCap) throw CapExceeded("measure-theorem sweep is capped at n = 8");
  Report r;
  r.claim_id = "measure_theorem";
  r.parameters = {{"n", n}};

  const auto classes = all_graphs(n, opts.threads);
  r.instances_checked = classes.size();
  const auto decks = parallel_map<Deck>(classes.size(), opts.threads,
                                        [&](std::size_t i) { return deck(classes[i]); });
  const auto vectors = parallel_map<MeasureVector>(classes.size(), opts.threads,
                                                   [&](std::size_t i) { return measure_vector(classes[i]); });

  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (vectors[i].total() != n) {
      r.counterexamples.push_back({to_report_json(classes[i]), nullptr, "", true,
                                   "measure vector does not sum to n"});
    }
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const bool hypomorphic = decks[i] == decks[j];
      const bool same_vector = vectors[i] == vectors[j];
      if (hypomorphic != same_vector) {
        r.counterexamples.push_back({to_report_json(classes[i]), to_report_json(classes[j]),
                                     deck_hash(decks[i]).hex(), true,
                                     "measure-vector equality disagrees with deck equality"});
      } else if (same_vector && !are_isomorphic(classes[i], classes[j])) {
        r.counterexamples.push_back({to_report_json(classes[i]), to_report_json(classes[j]),
                                     deck_hash(decks[i]).hex(), true,
                                     "equal measure vectors, not isomorphic"});
      }
    }
  }
  r.elapsed = since(start);
  finalize(r);
  return r;
}

// --- matrix corollary --------------------------------------------------------

Report verify_matrix_corollary(std::size_t n, std::size_t alphabet, DiagonalMode diagonal,
                               SweepOptions opts) {
  if (n < 1) throw std::invalid_argument("matrix sweep needs n >= 1");
  if (alphabet < 1) throw std::invalid_argument("alphabet must be nonempty");
  const std::size_t vertex_colors = diagonal == DiagonalMode::free ? alphabet : 1;
  return sweep_hypomorphic_pairs(
      "matrix_corollary", {{"n", n}, {"alphabet", alphabet}, {"diagonal", to_string(diagonal)}},
      all_colored(n, alphabet, vertex_colors, opts.threads), opts);
}

// --- lemma l2 ----------------------------------------------------------------

Report verify_lemma_l2(std::size_t n, SweepOptions opts) {
  const auto start = Clock::now();
  if (n < 1) throw std::invalid_argument("lemma sweep needs n >= 1");
  if (n > kLemmaL2Cap) throw CapExceeded("lemma sweep is capped at n = 5");
  Report r;
  r.claim_id = "lemma_l2";
  r.parameters = {{"n", n}};

  const auto classes = all_graphs(n, opts.threads);
  const auto cards = parallel_map<std::vector<Certificate>>(
      classes.size(), opts.threads, [&](std::size_t i) { return card_certificates(classes[i]); });
  const auto subset_perms = enumerate_subset_permutations(n);

  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      const SubsetPermutation* preserving = nullptr;
      for (const SubsetPermutation& s : subset_perms) {
        ++r.instances_checked;
        if (!preserving && is_measure_preserving(s, cards[a], cards[b])) preserving = &s;
      }
      if (preserving && !are_isomorphic(classes[a], classes[b])) {
        r.counterexamples.push_back({to_report_json(classes[a]), to_report_json(classes[b]), "", true,
                                     "measure-preserving subset permutation " +
                                         json(preserving->excluded_images()).dump() +
                                         " without isomorphism"});
      }
    }
  }
  r.elapsed = since(start);
  finalize(r);
  return r;
}

// --- properties --------------------------------------------------------------

namespace {

template <Structure T>
void check_relabel_exhaustive(const std::vector<T>& classes, const std::string& label, Report& r) {
  if (classes.empty()) return;
  const auto perms = all_permutations(classes.front().size());
  for (const T& g : classes) {
    const Certificate base = canonical_form(g);
    for (const Permutation& p : perms) {
      ++r.instances_checked;
      const T moved = apply_permutation(p, g);
      if (canonical_form(moved) != base) {
        r.counterexamples.push_back({to_report_json(g), to_report_json(moved), "", false,
                                     label + ": certificate changed under relabeling"});
        continue;
      }
      const auto w = are_isomorphic(g, moved);
      if (!w || !(apply_permutation(*w, g) == moved)) {
        r.counterexamples.push_back({to_report_json(g), to_report_json(moved), "", false,
                                     label + ": missing or unsound isomorphism witness"});
      }
    }
  }
}

template <Structure T>
void check_kelly(const T& a, const T& b, const std::string& label, Report& r) {
  ++r.instances_checked;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (profile(a, i) != profile(b, i)) {
      r.counterexamples.push_back({to_report_json(a), to_report_json(b), deck_hash(deck(a)).hex(),
                                   !are_isomorphic(a, b).has_value(),
                                   label + ": hypomorphic pair with different profile at size " +
                                       std::to_string(i)});
      return;
    }
  }
}

template <Structure T>
void check_kelly_sweep(const std::vector<T>& classes, Rng& rng, const std::string& label, Report& r) {
  // relabeled copies are hypomorphic by construction
  for (const T& g : classes) {
    const T moved = apply_permutation(random_permutation(g.size(), rng), g);
    if (!(deck(g) == deck(moved))) {
      r.counterexamples.push_back({to_report_json(g), to_report_json(moved), "", false,
                                   label + ": relabeling changed the deck"});
      continue;
    }
    check_kelly(g, moved, label, r);
  }
  // and every hypomorphic pair of distinct classes the sweep finds
  const Report sweep = sweep_hypomorphic_pairs("kelly", json::object(), classes);
  for (const Counterexample& c : sweep.counterexamples) {
    const auto a = std::get<T>(structure_from_json(c.a));
    const auto b = std::get<T>(structure_from_json(c.b));
    check_kelly(a, b, label + " (non-isomorphic pair)", r);
  }
}

}  // namespace

Report verify_properties(const PropertyOptions& popts, SweepOptions opts) {
  const auto start = Clock::now();
  Report r;
  r.claim_id = "properties";
  r.parameters = {{"seed", popts.seed},
                  {"random_trials", popts.random_trials},
                  {"exhaustive_max_n", popts.exhaustive_max_n},
                  {"random_max_n", popts.random_max_n},
                  {"kelly_max_n", popts.kelly_max_n}};
  Rng rng(popts.seed);

  // exhaustive relabelings
  for (std::size_t n = 1; n <= popts.exhaustive_max_n; ++n) {
    check_relabel_exhaustive(all_graphs(n, opts.threads), "simple", r);
    if (n <= 4) {
      check_relabel_exhaustive(all_colored(n, 3, 1, opts.threads), "colored", r);
      check_relabel_exhaustive(all_colored(n, 2, 2, opts.threads), "vertex-colored", r);
      check_relabel_exhaustive(all_multigraph_tuples(n, 2, opts.threads), "multigraph", r);
    }
    if (n >= 3) check_relabel_exhaustive(all_hypergraphs(n, 3, opts.threads), "hypergraph", r);
  }

  // random relabelings, measure invariance, deck edge-count identity
  Rng relabel_rng = rng.split();
  Rng deck_rng = rng.split();
  for (std::size_t t = 0; t < popts.random_trials; ++t) {
    const std::size_t n = 1 + relabel_rng.below(popts.random_max_n);
    const SimpleGraph g = random_graph(n, relabel_rng.unit(), relabel_rng());
    const Permutation p = random_permutation(n, relabel_rng);
    const SimpleGraph moved = apply_permutation(p, g);
    ++r.instances_checked;
    if (canonical_form(g) != canonical_form(moved)) {
      r.counterexamples.push_back({to_report_json(g), to_report_json(moved), "", false,
                                   "random relabeling changed the certificate"});
    }
    const auto w = are_isomorphic(g, moved);
    if (!w || !(apply_permutation(*w, g) == moved)) {
      r.counterexamples.push_back({to_report_json(g), to_report_json(moved), "", false,
                                   "missing or unsound isomorphism witness"});
    }
    const VertexSet chi(relabel_rng() & VertexSet::range(n).mask());
    if (measure(g, chi) != measure(moved, p.image(chi))) {
      r.counterexamples.push_back({to_report_json(g), json(chi.elements()), "", false,
                                   "measure not invariant under relabeling"});
    }
  }
  for (std::size_t t = 0; t < popts.random_trials; ++t) {
    const std::size_t n = 2 + deck_rng.below(std::max<std::size_t>(popts.random_max_n, 2) - 1);
    const SimpleGraph g = random_graph(n, deck_rng.unit(), deck_rng());
    ++r.instances_checked;
    std::size_t card_edges = 0;
    const Deck d = deck(g);
    for (const Certificate& c : d.cards()) card_edges += decode_simple(c).edge_count();
    if (card_edges != (n - 2) * g.edge_count()) {
      r.counterexamples.push_back({to_report_json(g), nullptr, "", false,
                                   "card edge total differs from (n-2)|E|"});
    }
  }

  // profiles of hypomorphic pairs
  Rng kelly_rng = rng.split();
  for (std::size_t n = 2; n <= popts.kelly_max_n; ++n) {
    check_kelly_sweep(all_graphs(n, opts.threads), kelly_rng, "simple", r);
    if (n >= 4) check_kelly_sweep(all_hypergraphs(n, 3, opts.threads), kelly_rng, "hypergraph", r);
  }

  r.elapsed = since(start);
  finalize(r);
  return r;
}

}  // namespace recon
