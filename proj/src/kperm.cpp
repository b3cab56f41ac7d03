#include "recon/kperm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace recon {

SubsetPermutation::SubsetPermutation(std::vector<std::size_t> excluded_images)
    : excluded_(std::move(excluded_images)) {
  // reuse the bijection check
  (void)Permutation(excluded_);
}

SubsetPermutation SubsetPermutation::identity(std::size_t n) {
  return SubsetPermutation(Permutation::identity(n).images());
}

VertexSet SubsetPermutation::operator()(VertexSet chi) const {
  const std::size_t n = size();
  const VertexSet all = VertexSet::range(n);
  if (n == 0 || chi.size() != n - 1 || !chi.subset_of(all)) {
    throw std::invalid_argument("argument is not an (n-1)-subset of the base");
  }
  const std::size_t left_out = *(all & VertexSet(~chi.mask())).begin();
  return all.without(excluded_[left_out]);
}

SubsetPermutation compose(const SubsetPermutation& outer, const SubsetPermutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("composing subset permutations of different size");
  std::vector<std::size_t> images(inner.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = outer.excluded_images()[inner.excluded_images()[x]];
  }
  return SubsetPermutation(std::move(images));
}

Permutation lift(const SubsetPermutation& s) {
  const std::size_t n = s.size();
  const VertexSet all = VertexSet::range(n);
  std::vector<std::size_t> images(n);
  for (std::size_t x = 0; x < n; ++x) {
    const VertexSet rest = all & VertexSet(~s(all.without(x)).mask());
    images[x] = *rest.begin();
  }
  return Permutation(std::move(images));
}

VertexSet lift_intersection(const SubsetPermutation& s, std::size_t x) {
  const std::size_t n = s.size();
  if (x >= n) throw std::out_of_range("vertex outside the base");
  const VertexSet all = VertexSet::range(n);
  VertexSet meet = all;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != x) meet = meet & s(all.without(j));
  }
  return meet;
}

bool induces(const Permutation& p, const SubsetPermutation& s) {
  detail::check_same_base(p.size(), s.size());
  const VertexSet all = VertexSet::range(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (p.image(all.without(x)) != s(all.without(x))) return false;
  }
  return true;
}

SubsetPermutation induced_subset_permutation(const Permutation& p) {
  const std::size_t n = p.size();
  const VertexSet all = VertexSet::range(n);
  std::vector<std::size_t> images(n);
  for (std::size_t x = 0; x < n; ++x) {
    const VertexSet image = p.image(all.without(x));
    images[x] = *(all & VertexSet(~image.mask())).begin();
  }
  return SubsetPermutation(std::move(images));
}

namespace {

void check_cap(std::size_t n) {
  if (n > kSubsetPermutationCap) {
    throw CapExceeded("exhaustive subset-permutation enumeration is limited to n <= " +
                      std::to_string(kSubsetPermutationCap));
  }
}

}  // namespace

std::vector<SubsetPermutation> enumerate_subset_permutations(std::size_t n) {
  check_cap(n);
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<SubsetPermutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<SubsetPermutation> enumerate_subset_permutations(std::size_t n, std::size_t first_image) {
  check_cap(n);
  if (first_image >= n) throw std::out_of_range("first image outside the base");
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != first_image) rest.push_back(v);
  }
  std::vector<SubsetPermutation> out;
  do {
    std::vector<std::size_t> images{first_image};
    images.insert(images.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(images));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

bool is_measure_preserving(const SubsetPermutation& s, std::span<const Certificate> cards_a,
                           std::span<const Certificate> cards_b) {
  if (cards_a.size() != s.size() || cards_b.size() != s.size()) {
    throw std::invalid_argument("card lists do not match the subset permutation size");
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (cards_a[x] != cards_b[s.excluded_images()[x]]) return false;
  }
  return true;
}

}  // namespace recon
