#include "recon/core.hpp"

#include <algorithm>
#include <string>

namespace recon {

namespace {

void check_vertex(std::size_t x, std::size_t n) {
  if (x >= n) {
    throw std::out_of_range("vertex " + std::to_string(x) + " outside base of size " +
                            std::to_string(n));
  }
}

void check_base(std::size_t n) {
  if (n > kMaxVertices) {
    throw CapExceeded("structures are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}

void check_subset(VertexSet s, std::size_t n) {
  if (!s.subset_of(VertexSet::range(n))) {
    throw std::out_of_range("vertex subset leaves the base of size " + std::to_string(n));
  }
}

void check_perm(const Permutation& p, std::size_t n) {
  if (p.size() != n) {
    throw std::invalid_argument("permutation on " + std::to_string(p.size()) +
                                " points applied to a structure on " + std::to_string(n));
  }
}

}  // namespace

// --- VertexSet ---------------------------------------------------------------

std::uint64_t VertexSet::bit(std::size_t v) {
  if (v >= kMaxVertices) {
    throw std::out_of_range("vertex " + std::to_string(v) + " exceeds the 64-vertex cap");
  }
  return std::uint64_t{1} << v;
}

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
  for (std::size_t v : vertices) mask_ |= bit(v);
}

VertexSet VertexSet::range(std::size_t n) {
  check_base(n);
  return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<std::size_t> VertexSet::elements() const { return {begin(), end()}; }

// --- Permutation -------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("images do not form a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

VertexSet Permutation::image(VertexSet s) const {
  VertexSet out;
  for (std::size_t x : s) out = out.with((*this)(x));
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("composing permutations of different size");
  std::vector<std::size_t> images(inner.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = outer(inner(x));
  return Permutation(std::move(images));
}

// --- SimpleGraph -------------------------------------------------------------

SimpleGraph::SimpleGraph(std::size_t n) : rows_((check_base(n), n), 0) {}

SimpleGraph::SimpleGraph(std::size_t n,
                         std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
    : SimpleGraph(n) {
  for (auto [x, y] : edges) set_edge(x, y);
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t x = 0; x < n; ++x) g.rows_[x] = VertexSet::range(n).without(x).mask();
  return g;
}

void SimpleGraph::check_pair(std::size_t x, std::size_t y) const {
  check_vertex(x, size());
  check_vertex(y, size());
}

bool SimpleGraph::adjacent(std::size_t x, std::size_t y) const {
  check_pair(x, y);
  return ((rows_[x] >> y) & 1U) != 0;
}

VertexSet SimpleGraph::neighbors(std::size_t x) const {
  check_vertex(x, size());
  return VertexSet(rows_[x]);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t row : rows_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y : VertexSet(rows_[x])) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

void SimpleGraph::set_edge(std::size_t x, std::size_t y, bool present) {
  check_pair(x, y);
  if (x == y) throw std::invalid_argument("loops are not allowed");
  if (present) {
    rows_[x] |= std::uint64_t{1} << y;
    rows_[y] |= std::uint64_t{1} << x;
  } else {
    rows_[x] &= ~(std::uint64_t{1} << y);
    rows_[y] &= ~(std::uint64_t{1} << x);
  }
}

// --- EdgeColoredGraph --------------------------------------------------------

EdgeColoredGraph::EdgeColoredGraph(std::size_t n, std::size_t edge_colors, std::size_t vertex_colors)
    : n_(n), k_(edge_colors), v_(vertex_colors) {
  check_base(n);
  if (k_ < 1 || k_ > 256) throw std::invalid_argument("edge color count must be in [1, 256]");
  if (v_ < 1 || v_ > 256) throw std::invalid_argument("vertex color count must be in [1, 256]");
  pair_colors_.assign(n * n, 0);
  vertex_colors_.assign(n, 0);
}

EdgeColoredGraph EdgeColoredGraph::from_simple(const SimpleGraph& g) {
  EdgeColoredGraph out(g.size(), 2, 1);
  for (auto [x, y] : g.edges()) out.set_color(x, y, 1);
  return out;
}

void EdgeColoredGraph::check_pair(std::size_t x, std::size_t y) const {
  check_vertex(x, n_);
  check_vertex(y, n_);
}

std::uint8_t EdgeColoredGraph::color(std::size_t x, std::size_t y) const {
  check_pair(x, y);
  return pair_colors_[x * n_ + y];
}

std::uint8_t EdgeColoredGraph::vertex_color(std::size_t x) const {
  check_vertex(x, n_);
  return vertex_colors_[x];
}

void EdgeColoredGraph::set_color(std::size_t x, std::size_t y, std::size_t c) {
  check_pair(x, y);
  if (x == y) throw std::invalid_argument("pairs must have distinct vertices");
  if (c >= k_) throw std::out_of_range("edge color " + std::to_string(c) + " outside [0, k)");
  pair_colors_[x * n_ + y] = static_cast<std::uint8_t>(c);
  pair_colors_[y * n_ + x] = static_cast<std::uint8_t>(c);
}

void EdgeColoredGraph::set_vertex_color(std::size_t x, std::size_t c) {
  check_vertex(x, n_);
  if (c >= v_) throw std::out_of_range("vertex color " + std::to_string(c) + " outside [0, v)");
  vertex_colors_[x] = static_cast<std::uint8_t>(c);
}

// --- MultiGraphTuple ---------------------------------------------------------

MultiGraphTuple::MultiGraphTuple(std::vector<SimpleGraph> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("a multigraph tuple needs at least one layer");
  for (const SimpleGraph& g : layers_) {
    if (g.size() != layers_.front().size()) throw std::invalid_argument("layers must share one base");
  }
}

// --- UniformHypergraph -------------------------------------------------------

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t arity) : n_(n), m_(arity) {
  check_base(n);
  if (m_ < 2) throw std::invalid_argument("hyperedge arity must be at least 2");
}

UniformHypergraph::UniformHypergraph(std::size_t n, std::size_t arity,
                                     std::initializer_list<std::initializer_list<std::size_t>> edges)
    : UniformHypergraph(n, arity) {
  for (auto e : edges) add_edge(VertexSet(e));
}

bool UniformHypergraph::contains(VertexSet edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

void UniformHypergraph::add_edge(VertexSet edge) {
  if (edge.size() != m_) throw std::invalid_argument("hyperedge has the wrong number of vertices");
  check_subset(edge, n_);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) edges_.insert(it, edge);
}

// --- induced_subgraph --------------------------------------------------------

namespace {

// new index of each kept vertex, ascending original order
std::vector<std::size_t> compact_labels(VertexSet s, std::size_t n) {
  check_subset(s, n);
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t v : s) label[v] = next++;
  return label;
}

}  // namespace

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s) {
  std::vector<std::size_t> kept = (check_subset(s, g.size()), s.elements());
  SimpleGraph out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.adjacent(kept[i], kept[j])) out.set_edge(i, j);
    }
  }
  return out;
}

EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, VertexSet s) {
  std::vector<std::size_t> kept = (check_subset(s, g.size()), s.elements());
  EdgeColoredGraph out(kept.size(), g.edge_colors(), g.vertex_colors());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.set_vertex_color(i, g.vertex_color(kept[i]));
    for (std::size_t j = i + 1; j < kept.size(); ++j) out.set_color(i, j, g.color(kept[i], kept[j]));
  }
  return out;
}

MultiGraphTuple induced_subgraph(const MultiGraphTuple& t, VertexSet s) {
  std::vector<SimpleGraph> layers;
  layers.reserve(t.layer_count());
  for (const SimpleGraph& g : t.layers()) layers.push_back(induced_subgraph(g, s));
  return MultiGraphTuple(std::move(layers));
}

UniformHypergraph induced_subgraph(const UniformHypergraph& h, VertexSet s) {
  std::vector<std::size_t> label = compact_labels(s, h.size());
  UniformHypergraph out(s.size(), h.arity());
  for (VertexSet e : h.edges()) {
    if (!e.subset_of(s)) continue;
    VertexSet relabeled;
    for (std::size_t v : e) relabeled = relabeled.with(label[v]);
    out.add_edge(relabeled);
  }
  return out;
}

// --- apply_permutation -------------------------------------------------------

SimpleGraph apply_permutation(const Permutation& p, const SimpleGraph& g) {
  check_perm(p, g.size());
  SimpleGraph out(g.size());
  for (auto [x, y] : g.edges()) out.set_edge(p(x), p(y));
  return out;
}

EdgeColoredGraph apply_permutation(const Permutation& p, const EdgeColoredGraph& g) {
  check_perm(p, g.size());
  EdgeColoredGraph out(g.size(), g.edge_colors(), g.vertex_colors());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out.set_vertex_color(p(x), g.vertex_color(x));
    for (std::size_t y = x + 1; y < g.size(); ++y) out.set_color(p(x), p(y), g.color(x, y));
  }
  return out;
}

MultiGraphTuple apply_permutation(const Permutation& p, const MultiGraphTuple& t) {
  std::vector<SimpleGraph> layers;
  layers.reserve(t.layer_count());
  for (const SimpleGraph& g : t.layers()) layers.push_back(apply_permutation(p, g));
  return MultiGraphTuple(std::move(layers));
}

UniformHypergraph apply_permutation(const Permutation& p, const UniformHypergraph& h) {
  check_perm(p, h.size());
  UniformHypergraph out(h.size(), h.arity());
  for (VertexSet e : h.edges()) out.add_edge(p.image(e));
  return out;
}

// --- degree / fusion ---------------------------------------------------------

std::size_t degree(const SimpleGraph& g, std::size_t x) { return g.neighbors(x).size(); }

EdgeColoredGraph fuse_multigraph(const MultiGraphTuple& t) {
  if (t.layer_count() == 0) throw std::invalid_argument("cannot fuse an empty tuple");
  if (t.layer_count() > 8) throw CapExceeded("at most 8 layers fit into 256 fused colors");
  const std::size_t n = t.size();
  EdgeColoredGraph out(n, std::size_t{1} << t.layer_count(), 1);
  for (std::size_t i = 0; i < t.layer_count(); ++i) {
    for (auto [x, y] : t.layer(i).edges()) out.set_color(x, y, out.color(x, y) | (1U << i));
  }
  return out;
}

MultiGraphTuple split_multigraph(const EdgeColoredGraph& fused, std::size_t layers) {
  if (layers == 0 || layers > 8) throw std::invalid_argument("layer count must be in [1, 8]");
  if (fused.edge_colors() > (std::size_t{1} << layers)) {
    throw std::invalid_argument("colored graph has more colors than the layers can encode");
  }
  std::vector<SimpleGraph> out(layers, SimpleGraph(fused.size()));
  for (std::size_t x = 0; x < fused.size(); ++x) {
    for (std::size_t y = x + 1; y < fused.size(); ++y) {
      const unsigned c = fused.color(x, y);
      for (std::size_t i = 0; i < layers; ++i) {
        if ((c >> i) & 1U) out[i].set_edge(x, y);
      }
    }
  }
  return MultiGraphTuple(std::move(out));
}

}  // namespace recon
