#include "recon/deck.hpp"

#include <string>

namespace recon {

namespace {

bool card_less(const Certificate& a, const Certificate& b) {
  if (a.hash() != b.hash()) return a.hash() < b.hash();
  return a.bytes() < b.bytes();
}

}  // namespace

Deck::Deck(std::size_t n, std::vector<Certificate> cards) : n_(n), cards_(std::move(cards)) {
  if (cards_.size() != n_) throw std::invalid_argument("a deck holds exactly one card per vertex");
  std::sort(cards_.begin(), cards_.end(), card_less);
}

Digest128 deck_hash(const Deck& d) {
  std::vector<std::uint8_t> buf;
  buf.reserve(8 + 16 * d.size());
  for (int i = 7; i >= 0; --i) buf.push_back(static_cast<std::uint8_t>(d.base_size() >> (8 * i)));
  for (const Certificate& c : d.cards()) {
    for (std::uint64_t word : {c.hash().hi, c.hash().lo}) {
      for (int i = 7; i >= 0; --i) buf.push_back(static_cast<std::uint8_t>(word >> (8 * i)));
    }
  }
  return digest(buf);
}

namespace detail {

void check_same_base(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("structures on bases of size " + std::to_string(a) + " and " +
                                std::to_string(b));
  }
}

}  // namespace detail

}  // namespace recon
