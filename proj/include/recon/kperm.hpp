#ifndef RECON_KPERM_HPP
#define RECON_KPERM_HPP

// Permutations of the (n-1)-subsets of a base E = {0, ..., n-1}.
//
// An (n-1)-subset is determined by the one vertex it leaves out, so a
// SubsetPermutation is stored as the map "excluded vertex of chi" ->
// "excluded vertex of s(chi)". Lifting it to a vertex permutation is the
// complement map x -> the single element of E \ s(E \ {x}).

#include <cstddef>
#include <span>
#include <vector>

#include "recon/canon.hpp"
#include "recon/core.hpp"
#include "recon/deck.hpp"

namespace recon {

class SubsetPermutation {
 public:
  SubsetPermutation() = default;
  /// excluded_images[x] is the vertex left out of s(E \ {x}). Throws
  /// std::invalid_argument unless this is a bijection of {0, ..., n-1}.
  explicit SubsetPermutation(std::vector<std::size_t> excluded_images);

  static SubsetPermutation identity(std::size_t n);

  std::size_t size() const { return excluded_.size(); }
  const std::vector<std::size_t>& excluded_images() const { return excluded_; }

  /// s(chi) for an (n-1)-subset chi. Throws std::invalid_argument otherwise.
  VertexSet operator()(VertexSet chi) const;

  bool operator==(const SubsetPermutation&) const = default;

 private:
  std::vector<std::size_t> excluded_;
};

/// Composition in function notation: (s o t)(chi) = s(t(chi)).
SubsetPermutation compose(const SubsetPermutation& outer, const SubsetPermutation& inner);

/// The vertex permutation x -> E \ s(E \ {x}).
Permutation lift(const SubsetPermutation& s);

/// The intersection of s(E \ {j}) over all j != x.
VertexSet lift_intersection(const SubsetPermutation& s, std::size_t x);

/// True iff p(chi) == s(chi) for every (n-1)-subset chi.
bool induces(const Permutation& p, const SubsetPermutation& s);

/// The subset permutation chi -> p(chi) that a vertex permutation induces.
SubsetPermutation induced_subset_permutation(const Permutation& p);

inline constexpr std::size_t kSubsetPermutationCap = 6;

/// All n! subset permutations in lexicographic order of excluded_images.
/// Throws CapExceeded above kSubsetPermutationCap.
std::vector<SubsetPermutation> enumerate_subset_permutations(std::size_t n);

/// The shard of enumerate_subset_permutations(n) whose image of E \ {0}
/// leaves out `first_image`.
std::vector<SubsetPermutation> enumerate_subset_permutations(std::size_t n, std::size_t first_image);

/// Measure preservation on precomputed cards: cards_a[x] is the certificate
/// of A restricted to E \ {x}, likewise for B.
bool is_measure_preserving(const SubsetPermutation& s, std::span<const Certificate> cards_a,
                           std::span<const Certificate> cards_b);

/// True iff for every (n-1)-subset chi the restriction of A to chi and the
/// restriction of B to s(chi) have the same certificate.
template <Structure T>
bool is_measure_preserving(const SubsetPermutation& s, const T& a, const T& b) {
  detail::check_same_base(a.size(), b.size());
  detail::check_same_base(s.size(), a.size());
  const auto cards_a = card_certificates(a);
  const auto cards_b = card_certificates(b);
  return is_measure_preserving(s, cards_a, cards_b);
}

}  // namespace recon

#endif  // RECON_KPERM_HPP
