#ifndef RECON_STRUCTURE_JSON_HPP
#define RECON_STRUCTURE_JSON_HPP

// JSON form of structures that graph6 cannot carry.
//
//   {"kind":"simple","n":3,"graph6":"Bg"}      (or "edges":[[u,v],...])
//   {"kind":"colored","n":3,"k":3,"v":1,"vertex_colors":[0,0,0],
//    "edges":[[u,v,color],...]}                 (color-0 pairs omitted)
//   {"kind":"multigraph","n":3,"layers":[[[u,v],...],...]}
//   {"kind":"hypergraph","n":4,"m":3,"edges":[[a,b,c],...]}
//
// Inside reports simple graphs are embedded as bare graph6 strings.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "recon/core.hpp"

namespace recon {

class StructureFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyStructure = std::variant<SimpleGraph, EdgeColoredGraph, MultiGraphTuple, UniformHypergraph>;

nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const EdgeColoredGraph& g);
nlohmann::json to_json(const MultiGraphTuple& t);
nlohmann::json to_json(const UniformHypergraph& h);

/// Compact form used in reports: graph6 string for simple graphs, the
/// object form otherwise.
nlohmann::json to_report_json(const SimpleGraph& g);
nlohmann::json to_report_json(const EdgeColoredGraph& g);
nlohmann::json to_report_json(const MultiGraphTuple& t);
nlohmann::json to_report_json(const UniformHypergraph& h);

/// Accepts the object form or a bare graph6 string. Throws
/// StructureFormatError (or Graph6Error) on malformed input.
AnyStructure structure_from_json(const nlohmann::json& j);

/// Text starting with '{' is parsed as JSON, anything else as one graph6
/// line. Surrounding whitespace is ignored.
AnyStructure parse_structure(std::string_view text);

}  // namespace recon

#endif  // RECON_STRUCTURE_JSON_HPP
