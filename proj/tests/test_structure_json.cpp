#include <doctest.h>

#include "recon/graph6.hpp"
#include "recon/structure_json.hpp"

using namespace recon;
using nlohmann::json;

TEST_CASE("round trip of every kind") {
  const SimpleGraph g(4, {{0, 1}, {2, 3}});
  EdgeColoredGraph c(3, 3, 2);
  c.set_color(0, 2, 2);
  c.set_vertex_color(1, 1);
  const MultiGraphTuple t({SimpleGraph(3, {{0, 1}}), SimpleGraph(3, {{1, 2}})});
  const UniformHypergraph h(5, 3, {{0, 1, 2}, {2, 3, 4}});

  CHECK(std::get<SimpleGraph>(structure_from_json(to_json(g))) == g);
  CHECK(std::get<EdgeColoredGraph>(structure_from_json(to_json(c))) == c);
  CHECK(std::get<MultiGraphTuple>(structure_from_json(to_json(t))) == t);
  CHECK(std::get<UniformHypergraph>(structure_from_json(to_json(h))) == h);
  CHECK(std::get<SimpleGraph>(structure_from_json(to_report_json(g))) == g);
  CHECK(to_report_json(g) == json(emit_graph6(g)));
}

TEST_CASE("documented field layout") {
  EdgeColoredGraph c(3, 3);
  c.set_color(0, 1, 2);
  const json j = to_json(c);
  CHECK(j["kind"] == "colored");
  CHECK(j["k"] == 3);
  CHECK(j["vertex_colors"] == json::array({0, 0, 0}));
  CHECK(j["edges"] == json::array({json::array({0, 1, 2})}));
  const json h = to_json(UniformHypergraph(4, 3, {{1, 2, 3}}));
  CHECK(h["m"] == 3);
  CHECK(h["edges"] == json::array({json::array({1, 2, 3})}));
}

TEST_CASE("parse_structure dispatches on the first character") {
  CHECK(std::holds_alternative<SimpleGraph>(parse_structure("  Bw\n")));
  CHECK(std::holds_alternative<UniformHypergraph>(
      parse_structure(R"({"kind":"hypergraph","n":4,"m":3,"edges":[[0,1,2]]})")));
  CHECK(std::get<SimpleGraph>(parse_structure(R"({"kind":"simple","n":3,"edges":[[0,2]]})")) ==
        SimpleGraph(3, {{0, 2}}));
}

TEST_CASE("malformed structures raise errors") {
  const char* bad[] = {R"({"kind":"weird","n":3})",
                       R"({"kind":"hypergraph","n":4,"m":3,"edges":[[0,1]]})",
                       R"({"kind":"colored","n":2,"k":2,"edges":[[0,1,5]]})",
                       R"({"kind":"simple","n":2,"edges":[[0,0]]})",
                       R"({"kind":"multigraph","n":2,"layers":[]})",
                       R"({"kind":"simple")",
                       R"({"n":2})"};
  for (const char* s : bad) {
    CAPTURE(s);
    CHECK_THROWS(parse_structure(s));
  }
}
