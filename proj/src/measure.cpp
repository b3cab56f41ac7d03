#include "recon/measure.hpp"

namespace recon {

std::size_t MeasureVector::total() const {
  std::size_t sum = 0;
  for (const auto& [type, count] : counts) sum += count;
  return sum;
}

MeasureVector measure_vector(const Deck& d) {
  MeasureVector v{d.base_size(), {}};
  const std::size_t card_size = d.base_size() == 0 ? 0 : d.base_size() - 1;
  for (const Certificate& c : d.cards()) ++v.counts[TypeId{card_size, c}];
  return v;
}

}  // namespace recon
