#include "recon/graph6.hpp"

#include "recon/canon.hpp"

namespace recon {

namespace {

std::size_t body_length(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace

SimpleGraph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside the printable graph6 range", i);
  }
  if (text[0] == '~') {
    if (text.size() < 4) throw Graph6Error("incomplete long-form size header", text.size());
    throw Graph6Error("long-form graph6 (n > 62) is not supported", 0);
  }
  const std::size_t n = static_cast<std::size_t>(text[0]) - 63;
  const std::size_t expected = 1 + body_length(n);
  if (text.size() < expected) throw Graph6Error("graph6 body is too short", text.size());
  if (text.size() > expected) throw Graph6Error("trailing bytes after graph6 body", expected);

  SimpleGraph g(n);
  std::size_t index = 0;
  for (std::size_t y = 1; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x, ++index) {
      const unsigned chunk = static_cast<unsigned char>(text[1 + index / 6]) - 63U;
      if ((chunk >> (5 - index % 6)) & 1U) g.set_edge(x, y);
    }
  }
  for (; index % 6 != 0; ++index) {
    const unsigned chunk = static_cast<unsigned char>(text[1 + index / 6]) - 63U;
    if ((chunk >> (5 - index % 6)) & 1U) throw Graph6Error("nonzero padding bits", 1 + index / 6);
  }
  return g;
}

std::string emit_graph6(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n > kGraph6MaxVertices) throw CapExceeded("graph6 short form holds at most 62 vertices");
  std::string out(1 + body_length(n), '\0');
  out[0] = static_cast<char>(63 + n);
  std::vector<unsigned> chunks(body_length(n), 0);
  std::size_t index = 0;
  for (std::size_t y = 1; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x, ++index) {
      if (g.adjacent(x, y)) chunks[index / 6] |= 1U << (5 - index % 6);
    }
  }
  for (std::size_t i = 0; i < chunks.size(); ++i) out[1 + i] = static_cast<char>(63 + chunks[i]);
  return out;
}

std::string emit_canonical_graph6(const SimpleGraph& g) {
  return emit_graph6(apply_permutation(canonical_labeling(g), g));
}

}  // namespace recon
