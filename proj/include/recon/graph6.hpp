#ifndef RECON_GRAPH6_HPP
#define RECON_GRAPH6_HPP

// graph6 text encoding (short header form only, n <= 62).
//
// Byte 0 is n + 63. The upper triangle follows column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, most significant
// bit first, zero padded, each byte offset by 63.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "recon/core.hpp"

namespace recon {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::size_t kGraph6MaxVertices = 62;

/// Exact decoding of one graph6 string (no trailing newline). Throws
/// Graph6Error on a malformed header, bytes outside '?'..'~', wrong length,
/// or nonzero padding bits.
SimpleGraph parse_graph6(std::string_view text);

/// Throws CapExceeded for n > 62.
std::string emit_graph6(const SimpleGraph& g);

/// graph6 of the canonical representative of g's class.
std::string emit_canonical_graph6(const SimpleGraph& g);

}  // namespace recon

#endif  // RECON_GRAPH6_HPP
