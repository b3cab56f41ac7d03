#ifndef RECON_DECK_HPP
#define RECON_DECK_HPP

// Vertex-deleted cards and decks.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "recon/canon.hpp"
#include "recon/core.hpp"
#include "recon/parallel.hpp"

namespace recon {

/// Anything the deck, measure, and sweep machinery can work on.
template <class T>
concept Structure = requires(const T& s, VertexSet subset, const Permutation& p) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { induced_subgraph(s, subset) } -> std::same_as<T>;
  { apply_permutation(p, s) } -> std::same_as<T>;
  { canonical_form(s) } -> std::same_as<Certificate>;
  { are_isomorphic(s, s) } -> std::same_as<std::optional<Permutation>>;
};

/// Multiset of card certificates, stored sorted by (hash, bytes).
class Deck {
 public:
  Deck() = default;
  Deck(std::size_t n, std::vector<Certificate> cards);

  std::size_t base_size() const { return n_; }
  const std::vector<Certificate>& cards() const { return cards_; }
  std::size_t size() const { return cards_.size(); }

  bool operator==(const Deck&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Certificate> cards_;
};

/// Order-independent digest: digest of the sorted list of card hashes.
Digest128 deck_hash(const Deck& d);

/// card[x] = canonical_form(induced_subgraph(g, E \ {x})), indexed by the
/// deleted vertex.
template <Structure T>
std::vector<Certificate> card_certificates(const T& g, unsigned threads = 1) {
  const std::size_t n = g.size();
  const VertexSet all = VertexSet::range(n);
  return parallel_map<Certificate>(n, threads, [&](std::size_t x) {
    return canonical_form(induced_subgraph(g, all.without(x)));
  });
}

template <Structure T>
Deck deck(const T& g, unsigned threads = 1) {
  if (g.size() == 0) throw std::invalid_argument("the deck of an empty structure is undefined");
  return Deck(g.size(), card_certificates(g, threads));
}

namespace detail {
void check_same_base(std::size_t a, std::size_t b);
}

template <Structure T>
bool are_hypomorphic(const T& a, const T& b) {
  detail::check_same_base(a.size(), b.size());
  return deck(a) == deck(b);
}

}  // namespace recon

#endif  // RECON_DECK_HPP
