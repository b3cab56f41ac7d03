#ifndef RECON_ENUMERATE_HPP
#define RECON_ENUMERATE_HPP

// Exhaustive generation of isomorphism classes, plus seeded random graphs.
//
// Classes on n vertices are produced by extending every class on n-1
// vertices with one new vertex in all possible ways and keeping one
// canonical representative per certificate. Every n-vertex structure arises
// this way (delete its last vertex), so the result is complete. Output is
// sorted by certificate bytes and does not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "recon/core.hpp"

namespace recon {

inline constexpr std::size_t kSimpleGraphCap = 9;
/// Upper bound on the labeled search space k^C(n,2) * v^n for colored graphs.
inline constexpr std::uint64_t kColoredLabelCap = std::uint64_t{1} << 30;
/// Upper bound on C(n, m), the number of possible hyperedges.
inline constexpr std::size_t kHyperedgeSlotCap = 20;

/// One representative per class of simple graphs on n vertices.
/// Throws CapExceeded when n > cap; cap itself may not exceed 10.
std::vector<SimpleGraph> all_graphs(std::size_t n, unsigned threads = 1,
                                    std::size_t cap = kSimpleGraphCap);

/// Colored graphs with pair colors in [0, k) and vertex colors in
/// [0, vertex_colors). vertex_colors == 1 is the constant-diagonal case.
std::vector<EdgeColoredGraph> all_colored(std::size_t n, std::size_t k, std::size_t vertex_colors = 1,
                                          unsigned threads = 1);

/// Tuples of `layers` graphs, up to simultaneous relabeling.
std::vector<MultiGraphTuple> all_multigraph_tuples(std::size_t n, std::size_t layers,
                                                   unsigned threads = 1);

/// m-uniform hypergraphs on n vertices.
std::vector<UniformHypergraph> all_hypergraphs(std::size_t n, std::size_t m, unsigned threads = 1);

/// G(n, p): each pair present independently with probability p. Throws
/// std::invalid_argument unless 0 <= p <= 1.
SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace recon

#endif  // RECON_ENUMERATE_HPP
