#ifndef RECON_CANON_HPP
#define RECON_CANON_HPP

// Canonical labeling and certificates.
//
// A certificate is the byte encoding of a structure after relabeling it by
// its canonical labeling, so two structures of the same kind and parameters
// share a certificate exactly when they are isomorphic. The labeling is the
// lexicographically smallest leaf of an individualization/refinement search
// tree; pairs of interchangeable vertices (a transposition that is an
// automorphism) are explored once.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recon/core.hpp"

namespace recon {

enum class StructureKind : std::uint8_t {
  simple = 1,
  colored = 2,
  multigraph = 3,
  hypergraph = 4,
};

/// 128-bit non-cryptographic digest.
struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  std::string hex() const;
  auto operator<=>(const Digest128&) const = default;
};

Digest128 digest(std::span<const std::uint8_t> bytes);

class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::vector<std::uint8_t> bytes);

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  const Digest128& hash() const { return hash_; }
  StructureKind kind() const;

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.hash_ == b.hash_ && a.bytes_ == b.bytes_;
  }
  /// Orders by bytes; this is the deterministic order of enumerated classes.
  friend std::strong_ordering operator<=>(const Certificate& a, const Certificate& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  Digest128 hash_;
};

/// Largest base accepted by the canonical labeling routines.
inline constexpr std::size_t kCanonCap = kMaxVertices;

// canonical_labeling(g) returns p such that apply_permutation(p, g) is the
// canonical representative of the class of g.
Permutation canonical_labeling(const SimpleGraph& g);
Permutation canonical_labeling(const EdgeColoredGraph& g);
Permutation canonical_labeling(const MultiGraphTuple& t);
Permutation canonical_labeling(const UniformHypergraph& h);

Certificate canonical_form(const SimpleGraph& g);
Certificate canonical_form(const EdgeColoredGraph& g);
Certificate canonical_form(const MultiGraphTuple& t);
Certificate canonical_form(const UniformHypergraph& h);

// Encoding of a labeled structure as-is. canonical_form(g) ==
// encode_labeled(apply_permutation(canonical_labeling(g), g)).
std::vector<std::uint8_t> encode_labeled(const SimpleGraph& g);
std::vector<std::uint8_t> encode_labeled(const EdgeColoredGraph& g);
std::vector<std::uint8_t> encode_labeled(const MultiGraphTuple& t);
std::vector<std::uint8_t> encode_labeled(const UniformHypergraph& h);

// Rebuild the canonical representative from a certificate of the matching
// kind. Throws std::invalid_argument on a kind mismatch or truncated bytes.
SimpleGraph decode_simple(const Certificate& c);
EdgeColoredGraph decode_colored(const Certificate& c);
MultiGraphTuple decode_multigraph(const Certificate& c);
UniformHypergraph decode_hypergraph(const Certificate& c);

/// Returns p with apply_permutation(p, a) == b, or nothing. Throws
/// std::invalid_argument when the parameters (n, colors, arity, layers) differ.
std::optional<Permutation> are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
std::optional<Permutation> are_isomorphic(const EdgeColoredGraph& a, const EdgeColoredGraph& b);
std::optional<Permutation> are_isomorphic(const MultiGraphTuple& a, const MultiGraphTuple& b);
std::optional<Permutation> are_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

}  // namespace recon

#endif  // RECON_CANON_HPP
