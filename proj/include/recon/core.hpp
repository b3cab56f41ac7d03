#ifndef RECON_CORE_HPP
#define RECON_CORE_HPP

// Value types for finite structures on a labeled base {0, ..., n-1}.
//
// Vertices are dense indices; vertex subsets are 64-bit masks, so every
// structure is capped at 64 vertices. Exhaustive sweeps stay far below that.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace recon {

inline constexpr std::size_t kMaxVertices = 64;

/// Thrown when an exhaustive or canonical routine is asked for more than
/// it is configured to handle.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A subset of {0, ..., 63} stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<std::size_t> vertices);

  /// {0, ..., n-1}
  static VertexSet range(std::size_t n);

  constexpr std::uint64_t mask() const { return mask_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const { return mask_ == 0; }
  bool contains(std::size_t v) const { return v < kMaxVertices && ((mask_ >> v) & 1U) != 0; }
  bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }

  VertexSet with(std::size_t v) const { return VertexSet(mask_ | bit(v)); }
  VertexSet without(std::size_t v) const { return VertexSet(mask_ & ~bit(v)); }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }
  std::vector<std::size_t> elements() const;

  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  auto operator<=>(const VertexSet&) const = default;

 private:
  static std::uint64_t bit(std::size_t v);
  std::uint64_t mask_ = 0;
};

/// Bijection on {0, ..., n-1}. Composition follows function notation:
/// compose(p, q)(x) == p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  VertexSet image(VertexSet s) const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

Permutation compose(const Permutation& outer, const Permutation& inner);

/// Loop-free undirected graph; adjacency rows are bit masks.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);
  SimpleGraph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges);

  static SimpleGraph complete(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool adjacent(std::size_t x, std::size_t y) const;
  VertexSet neighbors(std::size_t x) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void set_edge(std::size_t x, std::size_t y, bool present = true);

  bool operator==(const SimpleGraph&) const = default;

 private:
  void check_pair(std::size_t x, std::size_t y) const;
  std::vector<std::uint64_t> rows_;
};

/// Complete graph whose pairs carry colors in [0, k); color 0 means "no edge".
/// Vertices carry colors in [0, v). A SimpleGraph embeds as k = 2, v = 1.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(std::size_t n, std::size_t edge_colors, std::size_t vertex_colors = 1);

  static EdgeColoredGraph from_simple(const SimpleGraph& g);

  std::size_t size() const { return n_; }
  std::size_t edge_colors() const { return k_; }
  std::size_t vertex_colors() const { return v_; }

  std::uint8_t color(std::size_t x, std::size_t y) const;
  std::uint8_t vertex_color(std::size_t x) const;

  void set_color(std::size_t x, std::size_t y, std::size_t c);
  void set_vertex_color(std::size_t x, std::size_t c);

  bool operator==(const EdgeColoredGraph&) const = default;

 private:
  void check_pair(std::size_t x, std::size_t y) const;
  std::size_t n_ = 0;
  std::size_t k_ = 2;
  std::size_t v_ = 1;
  std::vector<std::uint8_t> pair_colors_;  // n*n, symmetric, zero diagonal
  std::vector<std::uint8_t> vertex_colors_;
};

/// Ordered tuple of graphs sharing one vertex set.
class MultiGraphTuple {
 public:
  MultiGraphTuple() = default;
  /// Throws std::invalid_argument on an empty tuple or unequal layer sizes.
  explicit MultiGraphTuple(std::vector<SimpleGraph> layers);

  std::size_t size() const { return layers_.empty() ? 0 : layers_.front().size(); }
  std::size_t layer_count() const { return layers_.size(); }
  const SimpleGraph& layer(std::size_t i) const { return layers_.at(i); }
  const std::vector<SimpleGraph>& layers() const { return layers_; }

  bool operator==(const MultiGraphTuple&) const = default;

 private:
  std::vector<SimpleGraph> layers_;
};

/// m-uniform hypergraph. Edges are kept sorted by mask and unique.
class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  UniformHypergraph(std::size_t n, std::size_t arity);
  UniformHypergraph(std::size_t n, std::size_t arity,
                    std::initializer_list<std::initializer_list<std::size_t>> edges);

  std::size_t size() const { return n_; }
  std::size_t arity() const { return m_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(VertexSet edge) const;

  /// Inserts an edge; duplicates are ignored. Throws std::invalid_argument if
  /// the edge does not have exactly `arity` vertices inside the base.
  void add_edge(VertexSet edge);

  bool operator==(const UniformHypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 2;
  std::vector<VertexSet> edges_;
};

// Restriction to S, relabeled 0..|S|-1 in ascending original order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s);
EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, VertexSet s);
MultiGraphTuple induced_subgraph(const MultiGraphTuple& t, VertexSet s);
UniformHypergraph induced_subgraph(const UniformHypergraph& h, VertexSet s);

// Transport along p: result(p(x), p(y)) == g(x, y).
SimpleGraph apply_permutation(const Permutation& p, const SimpleGraph& g);
EdgeColoredGraph apply_permutation(const Permutation& p, const EdgeColoredGraph& g);
MultiGraphTuple apply_permutation(const Permutation& p, const MultiGraphTuple& t);
UniformHypergraph apply_permutation(const Permutation& p, const UniformHypergraph& h);

std::size_t degree(const SimpleGraph& g, std::size_t x);

/// Merges the layers into one colored graph: the color of {x, y} is the bit
/// vector of layer memberships, sum_i layer_i(x, y) * 2^i.
EdgeColoredGraph fuse_multigraph(const MultiGraphTuple& t);

/// Inverse of fuse_multigraph for a given layer count.
MultiGraphTuple split_multigraph(const EdgeColoredGraph& fused, std::size_t layers);

}  // namespace recon

#endif  // RECON_CORE_HPP
