#include "recon/structure_json.hpp"

#include "recon/graph6.hpp"

namespace recon {

using nlohmann::json;

json to_json(const SimpleGraph& g) {
  return {{"kind", "simple"}, {"n", g.size()}, {"graph6", emit_graph6(g)}};
}

json to_json(const EdgeColoredGraph& g) {
  json colors = json::array();
  json edges = json::array();
  for (std::size_t x = 0; x < g.size(); ++x) {
    colors.push_back(g.vertex_color(x));
    for (std::size_t y = x + 1; y < g.size(); ++y) {
      if (g.color(x, y) != 0) edges.push_back({x, y, g.color(x, y)});
    }
  }
  return {{"kind", "colored"}, {"n", g.size()},        {"k", g.edge_colors()},
          {"v", g.vertex_colors()}, {"vertex_colors", colors}, {"edges", edges}};
}

json to_json(const MultiGraphTuple& t) {
  json layers = json::array();
  for (const SimpleGraph& g : t.layers()) {
    json edges = json::array();
    for (auto [x, y] : g.edges()) edges.push_back({x, y});
    layers.push_back(edges);
  }
  return {{"kind", "multigraph"}, {"n", t.size()}, {"layers", layers}};
}

json to_json(const UniformHypergraph& h) {
  json edges = json::array();
  for (VertexSet e : h.edges()) edges.push_back(e.elements());
  return {{"kind", "hypergraph"}, {"n", h.size()}, {"m", h.arity()}, {"edges", edges}};
}

json to_report_json(const SimpleGraph& g) { return emit_graph6(g); }
json to_report_json(const EdgeColoredGraph& g) { return to_json(g); }
json to_report_json(const MultiGraphTuple& t) { return to_json(t); }
json to_report_json(const UniformHypergraph& h) { return to_json(h); }

namespace {

SimpleGraph simple_from_edges(std::size_t n, const json& edges) {
  SimpleGraph g(n);
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw StructureFormatError("edges must be [u, v] pairs");
    g.set_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return g;
}

AnyStructure parse_object(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t n = j.at("n").get<std::size_t>();
  if (kind == "simple") {
    SimpleGraph g = j.contains("graph6") ? parse_graph6(j.at("graph6").get<std::string>())
                                         : simple_from_edges(n, j.at("edges"));
    if (g.size() != n) throw StructureFormatError("graph6 size disagrees with n");
    return g;
  }
  if (kind == "colored") {
    const std::size_t k = j.at("k").get<std::size_t>();
    std::vector<std::size_t> vertex_colors(n, 0);
    if (j.contains("vertex_colors")) vertex_colors = j.at("vertex_colors").get<std::vector<std::size_t>>();
    if (vertex_colors.size() != n) throw StructureFormatError("vertex_colors must have n entries");
    std::size_t v = 1;
    for (std::size_t c : vertex_colors) v = std::max(v, c + 1);
    if (j.contains("v")) v = j.at("v").get<std::size_t>();
    EdgeColoredGraph g(n, k, v);
    for (std::size_t x = 0; x < n; ++x) g.set_vertex_color(x, vertex_colors[x]);
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 3) throw StructureFormatError("colored edges must be [u, v, color]");
      g.set_color(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>());
    }
    return g;
  }
  if (kind == "multigraph") {
    std::vector<SimpleGraph> layers;
    for (const json& edges : j.at("layers")) layers.push_back(simple_from_edges(n, edges));
    return MultiGraphTuple(std::move(layers));
  }
  if (kind == "hypergraph") {
    UniformHypergraph h(n, j.at("m").get<std::size_t>());
    for (const json& e : j.value("edges", json::array())) {
      VertexSet edge;
      for (const json& v : e) {
        const auto x = v.get<std::size_t>();
        if (edge.contains(x)) throw StructureFormatError("repeated vertex in hyperedge");
        edge = edge.with(x);
      }
      h.add_edge(edge);
    }
    return h;
  }
  throw StructureFormatError("unknown structure kind '" + kind + "'");
}

}  // namespace

AnyStructure structure_from_json(const json& j) {
  if (j.is_string()) return parse_graph6(j.get<std::string>());
  if (!j.is_object()) throw StructureFormatError("structure must be a JSON object or graph6 string");
  try {
    return parse_object(j);
  } catch (const json::exception& e) {
    throw StructureFormatError(std::string("bad structure JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw StructureFormatError(std::string("bad structure JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw StructureFormatError(std::string("bad structure JSON: ") + e.what());
  }
}

AnyStructure parse_structure(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw StructureFormatError("empty input");
  const auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);
  if (text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw StructureFormatError(std::string("invalid JSON: ") + e.what());
    }
    return structure_from_json(j);
  }
  return parse_graph6(text);
}

}  // namespace recon
