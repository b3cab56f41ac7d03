#ifndef RECON_MEASURE_HPP
#define RECON_MEASURE_HPP

// The measure of a vertex subset is the isomorphism type of the induced
// substructure. Types are identified by certificate, so the catalog of
// types is canonical and independent of enumeration order.

#include <bit>
#include <cstddef>
#include <map>
#include <stdexcept>

#include "recon/canon.hpp"
#include "recon/deck.hpp"

namespace recon {

struct TypeId {
  std::size_t size = 0;
  Certificate certificate;

  friend bool operator==(const TypeId&, const TypeId&) = default;
  friend std::strong_ordering operator<=>(const TypeId& a, const TypeId& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.certificate <=> b.certificate;
  }
};

using TypeCounts = std::map<TypeId, std::size_t>;

/// Counts of card types; the coefficients of a structure over the basis of
/// (n-1)-vertex types.
struct MeasureVector {
  std::size_t n = 0;
  TypeCounts counts;

  std::size_t total() const;
  friend bool operator==(const MeasureVector&, const MeasureVector&) = default;
};

template <Structure T>
TypeId measure(const T& g, VertexSet chi) {
  return TypeId{chi.size(), canonical_form(induced_subgraph(g, chi))};
}

template <Structure T>
MeasureVector measure_vector(const T& g) {
  MeasureVector v{g.size(), {}};
  const VertexSet all = VertexSet::range(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) ++v.counts[measure(g, all.without(x))];
  return v;
}

/// The same data as a deck, regrouped into counts.
MeasureVector measure_vector(const Deck& d);

/// Counts of measure(g, chi) over all i-subsets chi.
template <Structure T>
TypeCounts profile(const T& g, std::size_t i) {
  const std::size_t n = g.size();
  if (i < 1 || i > n) throw std::out_of_range("profile size must satisfy 1 <= i <= n");
  TypeCounts counts;
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  // Gosper's hack over all i-subsets of an n-set
  std::uint64_t chi = i == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
  for (;;) {
    ++counts[measure(g, VertexSet(chi))];
    const std::uint64_t low = chi & (~chi + 1);
    const std::uint64_t ripple = chi + low;
    if (ripple == 0 || (limit != 0 && ripple >= limit)) break;
    chi = (((ripple ^ chi) >> 2) / low) | ripple;
    if (limit != 0 && chi >= limit) break;
  }
  return counts;
}

template <Structure T>
bool vectors_equal(const T& a, const T& b) {
  detail::check_same_base(a.size(), b.size());
  return measure_vector(a) == measure_vector(b);
}

}  // namespace recon

#endif  // RECON_MEASURE_HPP
