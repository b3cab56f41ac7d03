#include "recon/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace recon {

// --- digest ------------------------------------------------------------------

namespace {

std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

}  // namespace

Digest128 digest(std::span<const std::uint8_t> bytes) {
  std::uint64_t h1 = 0x9e3779b97f4a7c15ULL ^ bytes.size();
  std::uint64_t h2 = 0xc2b2ae3d27d4eb4fULL + bytes.size();
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < 8 && i + j < bytes.size(); ++j) {
      w |= std::uint64_t{bytes[i + j]} << (8 * j);
    }
    h1 = std::rotl(h1 ^ fmix64(w), 27) * 0x87c37b91114253d5ULL + 0x52dce729ULL;
    h2 = std::rotl(h2 ^ fmix64(w ^ 0x4cf5ad432745937fULL), 31) * 0x4cf5ad432745937fULL + 0x38495ab5ULL;
  }
  h1 += h2;
  h2 += h1;
  h1 = fmix64(h1);
  h2 = fmix64(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

std::string Digest128::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Certificate::Certificate(std::vector<std::uint8_t> bytes)
    : bytes_(std::move(bytes)), hash_(digest(bytes_)) {}

StructureKind Certificate::kind() const {
  if (bytes_.empty()) throw std::invalid_argument("empty certificate");
  return static_cast<StructureKind>(bytes_.front());
}

// --- search engine -----------------------------------------------------------

namespace {

using Order = std::vector<std::uint32_t>;

// A Model exposes:
//   size(), vertex_class(v), signature(v, cell_of, out),
//   payload(order) -> bytes, swappable(u, v) -> bool
// signature() must depend only on the structure and the cell ids; payload()
// is the encoding of the structure relabeled by position in `order`.
template <class Model>
class CanonSearch {
 public:
  explicit CanonSearch(const Model& model) : model_(model), n_(model.size()), sig_(n_) {
    if (n_ > kCanonCap) throw CapExceeded("canonical labeling is limited to 64 vertices");
    twin_class_.resize(n_);
    std::iota(twin_class_.begin(), twin_class_.end(), 0U);
    for (std::uint32_t v = 0; v < n_; ++v) {
      for (std::uint32_t u = 0; u < v; ++u) {
        if (twin_class_[u] == u && model_.vertex_class(u) == model_.vertex_class(v) &&
            model_.swappable(u, v)) {
          twin_class_[v] = u;
          break;
        }
      }
    }
  }

  Permutation run() {
    Node root;
    root.order.resize(n_);
    std::iota(root.order.begin(), root.order.end(), 0U);
    std::stable_sort(root.order.begin(), root.order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return model_.vertex_class(a) < model_.vertex_class(b);
    });
    root.cell_of.resize(n_);
    for (std::uint32_t p = 0; p < n_; ++p) {
      const bool fresh =
          p == 0 || model_.vertex_class(root.order[p]) != model_.vertex_class(root.order[p - 1]);
      root.cell_of[root.order[p]] = fresh ? p : root.cell_of[root.order[p - 1]];
    }
    search(root);

    std::vector<std::size_t> images(n_);
    for (std::uint32_t p = 0; p < n_; ++p) images[best_order_[p]] = p;
    return Permutation(std::move(images));
  }

 private:
  struct Node {
    Order order;                        // vertices by position
    std::vector<std::uint32_t> cell_of; // vertex -> first position of its cell
  };

  void refine(Node& node) {
    std::vector<std::uint32_t> next(n_);
    for (;;) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        sig_[v].clear();
        model_.signature(v, node.cell_of, sig_[v]);
        std::sort(sig_[v].begin(), sig_[v].end());
      }
      bool split = false;
      std::uint32_t s = 0;
      while (s < n_) {
        std::uint32_t e = s + 1;
        while (e < n_ && node.cell_of[node.order[e]] == s) ++e;
        if (e - s > 1) {
          std::sort(node.order.begin() + s, node.order.begin() + e,
                    [&](std::uint32_t a, std::uint32_t b) {
                      if (sig_[a] != sig_[b]) return sig_[a] < sig_[b];
                      return a < b;
                    });
        }
        std::uint32_t start = s;
        for (std::uint32_t p = s; p < e; ++p) {
          if (p > s && sig_[node.order[p]] != sig_[node.order[p - 1]]) {
            start = p;
            split = true;
          }
          next[node.order[p]] = start;
        }
        s = e;
      }
      node.cell_of.swap(next);
      if (!split) return;
    }
  }

  void search(Node& node) {
    refine(node);

    std::uint32_t s = 0;
    std::uint32_t e = 0;
    bool discrete = true;
    for (std::uint32_t p = 0; p < n_; p = e) {
      e = p + 1;
      while (e < n_ && node.cell_of[node.order[e]] == p) ++e;
      if (e - p > 1) {
        s = p;
        discrete = false;
        break;
      }
    }
    if (discrete) {
      std::vector<std::uint8_t> leaf = model_.payload(node.order);
      if (!have_best_ || leaf < best_payload_) {
        have_best_ = true;
        best_payload_ = std::move(leaf);
        best_order_ = node.order;
      }
      return;
    }

    std::vector<std::uint32_t> tried;
    for (std::uint32_t p = s; p < e; ++p) {
      const std::uint32_t v = node.order[p];
      if (std::find(tried.begin(), tried.end(), twin_class_[v]) != tried.end()) continue;
      tried.push_back(twin_class_[v]);

      Node child = node;
      auto q = std::find(child.order.begin() + s, child.order.begin() + e, v);
      std::iter_swap(child.order.begin() + s, q);
      child.cell_of[v] = s;
      for (std::uint32_t r = s + 1; r < e; ++r) child.cell_of[child.order[r]] = s + 1;
      search(child);
    }
  }

  const Model& model_;
  std::uint32_t n_;
  std::vector<std::vector<std::uint64_t>> sig_;
  std::vector<std::uint32_t> twin_class_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_payload_;
  Order best_order_;
};

// --- models ------------------------------------------------------------------

void put_bit(std::vector<std::uint8_t>& out, std::size_t index, bool bit) {
  if (bit) out[index / 8] |= static_cast<std::uint8_t>(0x80U >> (index % 8));
}

class SimpleModel {
 public:
  explicit SimpleModel(const SimpleGraph& g) {
    rows_.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) rows_.push_back(g.neighbors(v).mask());
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint32_t vertex_class(std::uint32_t) const { return 0; }

  void signature(std::uint32_t v, const std::vector<std::uint32_t>& cell_of,
                 std::vector<std::uint64_t>& out) const {
    for (std::size_t w : VertexSet(rows_[v])) out.push_back(cell_of[w]);
  }

  std::vector<std::uint8_t> payload(const Order& order) const {
    const std::size_t n = rows_.size();
    std::vector<std::uint8_t> out((n * (n - (n > 0 ? 1 : 0)) / 2 + 7) / 8, 0);
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++index) {
        put_bit(out, index, (rows_[order[i]] >> order[j]) & 1U);
      }
    }
    return out;
  }

  bool swappable(std::uint32_t u, std::uint32_t v) const {
    const std::uint64_t others = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (rows_[u] & others) == (rows_[v] & others);
  }

 private:
  std::vector<std::uint64_t> rows_;
};

class ColoredModel {
 public:
  explicit ColoredModel(const EdgeColoredGraph& g) : g_(g) {}
  std::uint32_t size() const { return static_cast<std::uint32_t>(g_.size()); }
  std::uint32_t vertex_class(std::uint32_t v) const { return g_.vertex_color(v); }

  void signature(std::uint32_t v, const std::vector<std::uint32_t>& cell_of,
                 std::vector<std::uint64_t>& out) const {
    for (std::uint32_t w = 0; w < size(); ++w) {
      if (w == v) continue;
      const std::uint8_t c = g_.color(v, w);
      if (c != 0) out.push_back((std::uint64_t{cell_of[w]} << 8) | c);
    }
  }

  std::vector<std::uint8_t> payload(const Order& order) const {
    const std::size_t n = g_.size();
    std::vector<std::uint8_t> out;
    out.reserve(n + n * n / 2);
    for (std::size_t i = 0; i < n; ++i) out.push_back(g_.vertex_color(order[i]));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out.push_back(g_.color(order[i], order[j]));
    }
    return out;
  }

  bool swappable(std::uint32_t u, std::uint32_t v) const {
    if (g_.vertex_color(u) != g_.vertex_color(v)) return false;
    for (std::uint32_t w = 0; w < size(); ++w) {
      if (w != u && w != v && g_.color(u, w) != g_.color(v, w)) return false;
    }
    return true;
  }

 private:
  const EdgeColoredGraph& g_;
};

class HypergraphModel {
 public:
  explicit HypergraphModel(const UniformHypergraph& h) : n_(h.size()), incident_(h.size()) {
    if (h.arity() > 11) throw CapExceeded("canonical labeling supports hyperedge arity up to 11");
    for (VertexSet e : h.edges()) {
      masks_.push_back(e.mask());
      for (std::size_t v : e) incident_[v].push_back(e.mask());
    }
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(n_); }
  std::uint32_t vertex_class(std::uint32_t) const { return 0; }

  void signature(std::uint32_t v, const std::vector<std::uint32_t>& cell_of,
                 std::vector<std::uint64_t>& out) const {
    std::uint32_t cells[16];
    for (std::uint64_t e : incident_[v]) {
      std::size_t k = 0;
      for (std::size_t w : VertexSet(e)) {
        if (w != v) cells[k++] = cell_of[w];
      }
      std::sort(cells, cells + k);
      std::uint64_t packed = 0;
      for (std::size_t i = 0; i < k; ++i) packed = (packed << 6) | cells[i];
      out.push_back(packed);
    }
  }

  std::vector<std::uint8_t> payload(const Order& order) const {
    std::vector<std::uint32_t> pos(n_);
    for (std::uint32_t p = 0; p < n_; ++p) pos[order[p]] = p;
    std::vector<std::uint64_t> relabeled;
    relabeled.reserve(masks_.size());
    for (std::uint64_t e : masks_) {
      std::uint64_t r = 0;
      for (std::size_t w : VertexSet(e)) r |= std::uint64_t{1} << pos[w];
      relabeled.push_back(r);
    }
    std::sort(relabeled.begin(), relabeled.end());
    const std::size_t width = (n_ + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(relabeled.size() * width);
    for (std::uint64_t r : relabeled) {
      for (std::size_t b = width; b-- > 0;) out.push_back(static_cast<std::uint8_t>(r >> (8 * b)));
    }
    return out;
  }

  bool swappable(std::uint32_t u, std::uint32_t v) const {
    const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    for (std::uint64_t e : masks_) {
      if (std::popcount(e & pair) == 1 &&
          !std::binary_search(masks_.begin(), masks_.end(), e ^ pair)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> masks_;  // sorted, since UniformHypergraph keeps edges sorted
  std::vector<std::vector<std::uint64_t>> incident_;
};

template <class Model>
std::vector<std::uint8_t> identity_payload(const Model& model) {
  Order order(model.size());
  std::iota(order.begin(), order.end(), 0U);
  return model.payload(order);
}

std::vector<std::uint8_t> with_header(std::vector<std::uint8_t> header,
                                      const std::vector<std::uint8_t>& payload) {
  header.insert(header.end(), payload.begin(), payload.end());
  return header;
}

std::uint8_t byte_of(std::size_t v) { return static_cast<std::uint8_t>(v); }
std::uint8_t byte_of(StructureKind k) { return static_cast<std::uint8_t>(k); }

std::vector<std::uint8_t> simple_header(std::size_t n) {
  return {byte_of(StructureKind::simple), byte_of(n)};
}
std::vector<std::uint8_t> colored_header(const EdgeColoredGraph& g) {
  return {byte_of(StructureKind::colored), byte_of(g.size()), byte_of(g.edge_colors() - 1),
          byte_of(g.vertex_colors() - 1)};
}
std::vector<std::uint8_t> multigraph_header(const MultiGraphTuple& t) {
  return {byte_of(StructureKind::multigraph), byte_of(t.size()), byte_of(t.layer_count())};
}
std::vector<std::uint8_t> hypergraph_header(const UniformHypergraph& h) {
  return {byte_of(StructureKind::hypergraph), byte_of(h.size()), byte_of(h.arity())};
}

void expect_kind(const Certificate& c, StructureKind kind, std::size_t header_size) {
  if (c.bytes().size() < header_size || c.kind() != kind) {
    throw std::invalid_argument("certificate does not encode the requested structure kind");
  }
}

}  // namespace

// --- public entry points -----------------------------------------------------

Permutation canonical_labeling(const SimpleGraph& g) {
  SimpleModel model(g);
  return CanonSearch<SimpleModel>(model).run();
}

Permutation canonical_labeling(const EdgeColoredGraph& g) {
  ColoredModel model(g);
  return CanonSearch<ColoredModel>(model).run();
}

Permutation canonical_labeling(const MultiGraphTuple& t) { return canonical_labeling(fuse_multigraph(t)); }

Permutation canonical_labeling(const UniformHypergraph& h) {
  HypergraphModel model(h);
  return CanonSearch<HypergraphModel>(model).run();
}

std::vector<std::uint8_t> encode_labeled(const SimpleGraph& g) {
  return with_header(simple_header(g.size()), identity_payload(SimpleModel(g)));
}

std::vector<std::uint8_t> encode_labeled(const EdgeColoredGraph& g) {
  return with_header(colored_header(g), identity_payload(ColoredModel(g)));
}

std::vector<std::uint8_t> encode_labeled(const MultiGraphTuple& t) {
  return with_header(multigraph_header(t), identity_payload(ColoredModel(fuse_multigraph(t))));
}

std::vector<std::uint8_t> encode_labeled(const UniformHypergraph& h) {
  return with_header(hypergraph_header(h), identity_payload(HypergraphModel(h)));
}

Certificate canonical_form(const SimpleGraph& g) {
  return Certificate(encode_labeled(apply_permutation(canonical_labeling(g), g)));
}

Certificate canonical_form(const EdgeColoredGraph& g) {
  return Certificate(encode_labeled(apply_permutation(canonical_labeling(g), g)));
}

Certificate canonical_form(const MultiGraphTuple& t) {
  return Certificate(encode_labeled(apply_permutation(canonical_labeling(t), t)));
}

Certificate canonical_form(const UniformHypergraph& h) {
  return Certificate(encode_labeled(apply_permutation(canonical_labeling(h), h)));
}

// --- decoding ----------------------------------------------------------------

SimpleGraph decode_simple(const Certificate& c) {
  expect_kind(c, StructureKind::simple, 2);
  const auto& b = c.bytes();
  const std::size_t n = b[1];
  if (b.size() != 2 + (n * (n - (n > 0 ? 1 : 0)) / 2 + 7) / 8) {
    throw std::invalid_argument("truncated simple-graph certificate");
  }
  SimpleGraph g(n);
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++index) {
      if ((b[2 + index / 8] >> (7 - index % 8)) & 1U) g.set_edge(i, j);
    }
  }
  return g;
}

namespace {

EdgeColoredGraph decode_colored_payload(std::span<const std::uint8_t> p, std::size_t n,
                                        std::size_t k, std::size_t v) {
  if (p.size() != n + n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw std::invalid_argument("truncated colored certificate");
  }
  EdgeColoredGraph g(n, k, v);
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) g.set_vertex_color(i, p[index++]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, p[index++]);
  }
  return g;
}

}  // namespace

EdgeColoredGraph decode_colored(const Certificate& c) {
  expect_kind(c, StructureKind::colored, 4);
  const auto& b = c.bytes();
  return decode_colored_payload(std::span(b).subspan(4), b[1], std::size_t{b[2]} + 1,
                                std::size_t{b[3]} + 1);
}

MultiGraphTuple decode_multigraph(const Certificate& c) {
  expect_kind(c, StructureKind::multigraph, 3);
  const auto& b = c.bytes();
  const std::size_t layers = b[2];
  if (layers == 0 || layers > 8) throw std::invalid_argument("bad layer count in certificate");
  return split_multigraph(
      decode_colored_payload(std::span(b).subspan(3), b[1], std::size_t{1} << layers, 1), layers);
}

UniformHypergraph decode_hypergraph(const Certificate& c) {
  expect_kind(c, StructureKind::hypergraph, 3);
  const auto& b = c.bytes();
  const std::size_t n = b[1];
  const std::size_t width = (n + 7) / 8;
  UniformHypergraph h(n, b[2]);
  if (width == 0 ? b.size() != 3 : (b.size() - 3) % width != 0) {
    throw std::invalid_argument("truncated hypergraph certificate");
  }
  for (std::size_t at = 3; width > 0 && at < b.size(); at += width) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < width; ++i) mask = (mask << 8) | b[at + i];
    h.add_edge(VertexSet(mask));
  }
  return h;
}

// --- isomorphism -------------------------------------------------------------

namespace {

template <class T>
std::optional<Permutation> witness(const T& a, const T& b) {
  const Permutation la = canonical_labeling(a);
  const Permutation lb = canonical_labeling(b);
  if (encode_labeled(apply_permutation(la, a)) != encode_labeled(apply_permutation(lb, b))) {
    return std::nullopt;
  }
  Permutation p = compose(lb.inverse(), la);
  if (!(apply_permutation(p, a) == b)) {
    throw std::logic_error("canonical labelings agree but the derived witness does not map a to b");
  }
  return p;
}

}  // namespace

std::optional<Permutation> are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.size() != b.size()) throw std::invalid_argument("graphs on different bases");
  return witness(a, b);
}

std::optional<Permutation> are_isomorphic(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
  if (a.size() != b.size() || a.edge_colors() != b.edge_colors() ||
      a.vertex_colors() != b.vertex_colors()) {
    throw std::invalid_argument("colored graphs with different parameters");
  }
  return witness(a, b);
}

std::optional<Permutation> are_isomorphic(const MultiGraphTuple& a, const MultiGraphTuple& b) {
  if (a.size() != b.size() || a.layer_count() != b.layer_count()) {
    throw std::invalid_argument("multigraph tuples with different parameters");
  }
  return witness(a, b);
}

std::optional<Permutation> are_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.size() != b.size() || a.arity() != b.arity()) {
    throw std::invalid_argument("hypergraphs with different parameters");
  }
  return witness(a, b);
}

}  // namespace recon
