#include "recon/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recon/canon.hpp"
#include "recon/parallel.hpp"
#include "recon/random.hpp"

namespace recon {

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation(std::move(images));
}

namespace {

using Key = std::vector<std::uint8_t>;

// One augmentation level. make_child(parent, index) builds the index-th
// one-vertex extension of parent; the return value is the sorted list of
// distinct child certificates.
template <class T, class MakeChild>
std::vector<Certificate> extend(const std::vector<T>& parents, std::uint64_t children_per_parent,
                                unsigned threads, MakeChild make_child) {
  auto per_parent = parallel_map<std::vector<Key>>(parents.size(), threads, [&](std::size_t i) {
    std::vector<Key> keys;
    keys.reserve(children_per_parent);
    for (std::uint64_t c = 0; c < children_per_parent; ++c) {
      keys.push_back(canonical_form(make_child(parents[i], c)).bytes());
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
  });
  std::vector<Key> all;
  for (auto& keys : per_parent) {
    all.insert(all.end(), std::make_move_iterator(keys.begin()), std::make_move_iterator(keys.end()));
    keys = {};
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Certificate> out;
  out.reserve(all.size());
  for (auto& key : all) out.emplace_back(std::move(key));
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<SimpleGraph> all_graphs(std::size_t n, unsigned threads, std::size_t cap) {
  if (cap > 10) throw CapExceeded("the simple-graph enumeration cap may not exceed 10");
  if (n > cap) throw CapExceeded("simple-graph enumeration is capped at n = " + std::to_string(cap));
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t old = size - 1;
    auto certs = extend(level, std::uint64_t{1} << old, threads, [&](const SimpleGraph& p, std::uint64_t mask) {
      SimpleGraph child(size);
      for (auto [x, y] : p.edges()) child.set_edge(x, y);
      for (std::size_t v : VertexSet(mask)) child.set_edge(v, old);
      return child;
    });
    level.clear();
    for (const Certificate& c : certs) level.push_back(decode_simple(c));
  }
  return level;
}

std::vector<EdgeColoredGraph> all_colored(std::size_t n, std::size_t k, std::size_t vertex_colors,
                                          unsigned threads) {
  if (k < 1 || k > 256 || vertex_colors < 1 || vertex_colors > 256) {
    throw std::invalid_argument("color counts must be in [1, 256]");
  }
  const std::uint64_t labeled = checked_pow(k, n * (n - (n > 0 ? 1 : 0)) / 2, kColoredLabelCap);
  if (labeled > kColoredLabelCap ||
      checked_pow(vertex_colors, n, kColoredLabelCap) > kColoredLabelCap / labeled) {
    throw CapExceeded("colored enumeration exceeds the labeled search-space cap");
  }
  std::vector<EdgeColoredGraph> level{EdgeColoredGraph(0, k, vertex_colors)};
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t old = size - 1;
    const std::uint64_t children = checked_pow(k, old, kColoredLabelCap) * vertex_colors;
    auto certs = extend(level, children, threads, [&](const EdgeColoredGraph& p, std::uint64_t index) {
      EdgeColoredGraph child(size, k, vertex_colors);
      for (std::size_t x = 0; x < old; ++x) {
        child.set_vertex_color(x, p.vertex_color(x));
        for (std::size_t y = x + 1; y < old; ++y) child.set_color(x, y, p.color(x, y));
      }
      child.set_vertex_color(old, index % vertex_colors);
      index /= vertex_colors;
      for (std::size_t x = 0; x < old; ++x, index /= k) child.set_color(x, old, index % k);
      return child;
    });
    level.clear();
    for (const Certificate& c : certs) level.push_back(decode_colored(c));
  }
  return level;
}

std::vector<MultiGraphTuple> all_multigraph_tuples(std::size_t n, std::size_t layers, unsigned threads) {
  if (layers < 1 || layers > 8) throw std::invalid_argument("layer count must be in [1, 8]");
  std::vector<MultiGraphTuple> out;
  for (const EdgeColoredGraph& g : all_colored(n, std::size_t{1} << layers, 1, threads)) {
    out.push_back(split_multigraph(g, layers));
  }
  std::sort(out.begin(), out.end(), [](const MultiGraphTuple& a, const MultiGraphTuple& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

std::vector<UniformHypergraph> all_hypergraphs(std::size_t n, std::size_t m, unsigned threads) {
  if (m < 2) throw std::invalid_argument("hyperedge arity must be at least 2");
  if (binomial(n, m) > kHyperedgeSlotCap) {
    throw CapExceeded("hypergraph enumeration is limited to C(n, m) <= " + std::to_string(kHyperedgeSlotCap));
  }
  std::vector<UniformHypergraph> level{UniformHypergraph(0, m)};
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t old = size - 1;
    // (m-1)-subsets of the old vertices: the possible links of the new one
    std::vector<VertexSet> links;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == m - 1) links.emplace_back(mask);
    }
    auto certs = extend(level, std::uint64_t{1} << links.size(), threads,
                        [&](const UniformHypergraph& p, std::uint64_t pick) {
                          UniformHypergraph child(size, m);
                          for (VertexSet e : p.edges()) child.add_edge(e);
                          for (std::size_t i : VertexSet(pick)) child.add_edge(links[i].with(old));
                          return child;
                        });
    level.clear();
    for (const Certificate& c : certs) level.push_back(decode_hypergraph(c));
  }
  return level;
}

SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  SimpleGraph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (rng.unit() < p) g.set_edge(x, y);
    }
  }
  return g;
}

}  // namespace recon
