#include "recon/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "recon/canon.hpp"
#include "recon/deck.hpp"
#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"
#include "recon/kperm.hpp"
#include "recon/structure_json.hpp"
#include "recon/verify.hpp"

namespace recon::cli {

using nlohmann::json;

namespace {

struct Settings {
  std::size_t n = 3;
  std::string kind = "simple";
  std::size_t colors = 3;
  std::size_t layers = 2;
  std::size_t arity = 3;
  std::size_t alphabet = 2;
  std::string diagonal = "constant";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string out_path;
  std::string format;  // per-command default when empty
  std::string in_path;
  bool timing = false;
  std::string claim;
  std::vector<std::string> files;
  std::vector<std::size_t> images;
};

const std::map<std::string, StructureKind> kKinds = {{"simple", StructureKind::simple},
                                                      {"colored", StructureKind::colored},
                                                      {"multigraph", StructureKind::multigraph},
                                                      {"hypergraph", StructureKind::hypergraph}};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return read_all(f);
}

// JSON documents are taken whole; graph6 input contributes its first line.
AnyStructure structure_from_text(std::string text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{') {
    text = text.substr(first);
    text = text.substr(0, text.find('\n'));
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
  }
  return parse_structure(text);
}

std::string encode_text(const SimpleGraph& g) { return emit_graph6(g); }
template <class T>
std::string encode_text(const T& g) {
  return to_json(g).dump();
}

template <class T>
T decode_card(const Certificate& c) {
  if constexpr (std::is_same_v<T, SimpleGraph>) return decode_simple(c);
  if constexpr (std::is_same_v<T, EdgeColoredGraph>) return decode_colored(c);
  if constexpr (std::is_same_v<T, MultiGraphTuple>) return decode_multigraph(c);
  if constexpr (std::is_same_v<T, UniformHypergraph>) return decode_hypergraph(c);
}

void write_output(const Settings& s, const std::string& payload, std::ostream& out) {
  if (s.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(s.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + s.out_path + "'");
  f << payload;
}

int emit_report(const Settings& s, const Report& r, std::ostream& out) {
  std::string payload;
  if (s.format == "csv") {
    payload = to_csv(r, s.timing);
  } else if (s.format == "text") {
    payload = to_text(r, s.timing);
  } else {
    payload = to_json(r, s.timing).dump(2) + "\n";
  }
  write_output(s, payload, out);
  return r.verdict == Verdict::refuted ? kExitCounterexample : kExitOk;
}

// --- commands ----------------------------------------------------------------

template <class T>
std::string format_structures(const Settings& s, const std::vector<T>& items) {
  std::ostringstream o;
  if (s.format == "json") {
    json arr = json::array();
    for (const T& g : items) arr.push_back(to_json(g));
    o << arr.dump(2) << "\n";
  } else if (s.format == "csv") {
    o << "index,certificate_hash,structure\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::string enc = encode_text(items[i]);
      std::string quoted;
      for (char c : enc) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      o << i << "," << canonical_form(items[i]).hash().hex() << ",\"" << quoted << "\"\n";
    }
  } else {
    for (const T& g : items) o << encode_text(g) << "\n";
  }
  return o.str();
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  const StructureKind kind = kKinds.at(s.kind);
  std::string payload;
  switch (kind) {
    case StructureKind::simple:
      payload = format_structures(s, all_graphs(s.n, s.threads));
      break;
    case StructureKind::colored: {
      const std::size_t v = s.diagonal == "free" ? s.colors : 1;
      payload = format_structures(s, all_colored(s.n, s.colors, v, s.threads));
      break;
    }
    case StructureKind::multigraph:
      payload = format_structures(s, all_multigraph_tuples(s.n, s.layers, s.threads));
      break;
    case StructureKind::hypergraph:
      payload = format_structures(s, all_hypergraphs(s.n, s.arity, s.threads));
      break;
  }
  write_output(s, payload, out);
  return kExitOk;
}

int cmd_deck(const Settings& s, std::istream& in, std::ostream& out) {
  const AnyStructure g = structure_from_text(s.in_path.empty() ? read_all(in) : read_file(s.in_path));
  const std::string payload = std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto cards = card_certificates(x, s.threads);
        std::ostringstream o;
        if (s.format == "json") {
          json arr = json::array();
          for (std::size_t v = 0; v < cards.size(); ++v) {
            arr.push_back({{"deleted", v},
                           {"hash", cards[v].hash().hex()},
                           {"card", to_report_json(decode_card<T>(cards[v]))}});
          }
          json doc = {{"n", x.size()}, {"deck_hash", deck_hash(deck(x)).hex()}, {"cards", arr}};
          o << doc.dump(2) << "\n";
        } else {
          for (std::size_t v = 0; v < cards.size(); ++v) {
            o << v << " " << cards[v].hash().hex() << " " << encode_text(decode_card<T>(cards[v])) << "\n";
          }
        }
        return o.str();
      },
      g);
  write_output(s, payload, out);
  return kExitOk;
}

int cmd_hypomorphic(const Settings& s, std::ostream& out) {
  if (s.files.size() != 2) throw CLI::ValidationError("hypomorphic", "expects exactly two input files");
  const AnyStructure a = structure_from_text(read_file(s.files[0]));
  const AnyStructure b = structure_from_text(read_file(s.files[1]));
  if (a.index() != b.index()) throw std::invalid_argument("inputs are structures of different kinds");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if (x.size() != y.size()) {
          out << "not hypomorphic (different vertex counts)\n";
          return kExitOk;
        }
        if (!are_hypomorphic(x, y)) {
          out << "not hypomorphic\n";
          return kExitOk;
        }
        if (are_isomorphic(x, y)) {
          out << "hypomorphic, isomorphic\n";
          return kExitOk;
        }
        out << "hypomorphic, not isomorphic\n";
        return kExitCounterexample;
      },
      a);
}

int cmd_lift(const Settings& s, std::ostream& out) {
  const SubsetPermutation sp(s.images);
  const Permutation p = lift(sp);
  json intersections = json::array();
  for (std::size_t x = 0; x < sp.size(); ++x) intersections.push_back(lift_intersection(sp, x).elements());
  const bool ok = induces(p, sp);
  std::ostringstream o;
  if (s.format == "json") {
    json doc = {{"subset_permutation", sp.excluded_images()},
                {"lift", p.images()},
                {"intersections", intersections},
                {"induces", ok}};
    o << doc.dump(2) << "\n";
  } else {
    o << "lift:";
    for (std::size_t x = 0; x < p.size(); ++x) o << " " << x << "->" << p(x);
    o << "\n";
    for (std::size_t x = 0; x < sp.size(); ++x) o << "intersection " << x << ": " << intersections[x].dump() << "\n";
    o << "induces: " << (ok ? "true" : "false") << "\n";
  }
  write_output(s, o.str(), out);
  return ok ? kExitOk : kExitCounterexample;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const SweepOptions opts{s.threads};
  if (s.claim == "theorem1") return emit_report(s, verify_theorem1(s.n), out);
  if (s.claim == "ulam") {
    UlamParams p;
    p.kind = kKinds.at(s.kind);
    p.colors = s.colors;
    p.layers = s.layers;
    p.arity = s.arity;
    return emit_report(s, verify_ulam(s.n, p, opts), out);
  }
  if (s.claim == "measure-theorem") return emit_report(s, verify_measure_theorem(s.n, opts), out);
  if (s.claim == "matrix-corollary") {
    const DiagonalMode d = s.diagonal == "free" ? DiagonalMode::free : DiagonalMode::constant;
    return emit_report(s, verify_matrix_corollary(s.n, s.alphabet, d, opts), out);
  }
  if (s.claim == "lemma-l2") return emit_report(s, verify_lemma_l2(s.n, opts), out);
  if (s.claim == "properties") {
    PropertyOptions p;
    p.seed = s.seed;
    p.random_trials = s.trials;
    return emit_report(s, verify_properties(p, opts), out);
  }
  throw CLI::ValidationError("verify", "unknown claim '" + s.claim + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exhaustive verification of graph reconstruction claims", "recon"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", s.threads, "Worker threads (0 = hardware)");
    cmd->add_option("--out", s.out_path, "Write output to a file instead of stdout");
  };
  auto add_kind_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", s.n, "Number of vertices");
    cmd->add_option("--kind", s.kind, "simple | colored | multigraph | hypergraph")
        ->check(CLI::IsMember({"simple", "colored", "multigraph", "hypergraph"}));
    cmd->add_option("--colors", s.colors, "Pair colors for colored structures")->check(CLI::Range(1, 256));
    cmd->add_option("--layers", s.layers, "Layers for multigraph tuples")->check(CLI::Range(1, 8));
    cmd->add_option("--arity", s.arity, "Hyperedge size")->check(CLI::Range(2, 11));
    cmd->add_option("--diagonal", s.diagonal, "constant | free")
        ->check(CLI::IsMember({"constant", "free"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List one representative per isomorphism class");
  add_kind_flags(enumerate);
  add_common(enumerate);
  enumerate->add_option("--format", s.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* deck_cmd = app.add_subcommand("deck", "Print the card certificates of a structure");
  deck_cmd->add_option("--in", s.in_path, "Input file (graph6 or JSON); stdin if omitted");
  add_common(deck_cmd);
  deck_cmd->add_option("--format", s.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* hypo = app.add_subcommand("hypomorphic", "Compare the decks of two structures");
  hypo->add_option("files", s.files, "Two input files (graph6 or JSON)")->required()->expected(2);

  auto* lift_cmd = app.add_subcommand("lift", "Lift a subset permutation to a vertex permutation");
  lift_cmd->add_option("images", s.images,
                       "For each x, the vertex left out of the image of E \\ {x}")
      ->required();
  lift_cmd->add_option("--format", s.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a sweep and print its report");
  verify->add_option("claim", s.claim,
                     "theorem1 | ulam | measure-theorem | matrix-corollary | lemma-l2 | properties")
      ->required()
      ->check(CLI::IsMember({"theorem1", "ulam", "measure-theorem", "matrix-corollary", "lemma-l2", "properties"}));
  add_kind_flags(verify);
  add_common(verify);
  verify->add_option("--alphabet", s.alphabet, "Matrix entry alphabet size")->check(CLI::Range(1, 256));
  verify->add_option("--seed", s.seed, "Seed for randomized property checks");
  verify->add_option("--trials", s.trials, "Random trials per property");
  verify->add_option("--format", s.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--timing", s.timing, "Include elapsed_ms in the report");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  if (s.format.empty()) s.format = *verify ? "json" : "text";
  try {
    if (*enumerate) return cmd_enumerate(s, out);
    if (*deck_cmd) return cmd_deck(s, in, out);
    if (*hypo) return cmd_hypomorphic(s, out);
    if (*lift_cmd) return cmd_lift(s, out);
    if (*verify) return cmd_verify(s, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace recon::cli
