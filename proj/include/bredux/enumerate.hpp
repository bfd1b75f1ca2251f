#ifndef BREDUX_ENUMERATE_HPP
#define BREDUX_ENUMERATE_HPP

#include "bredux/graph.hpp"

#include <cstdint>
#include <functional>

namespace bredux {

// Every labeled graph on n vertices, or one representative per isomorphism
// class when dedup is set. Exhaustive mode is capped at n = 6 (2^15 labeled
// graphs); beyond that use sample_graph.
std::vector<Graph> enumerate_graphs(int n, bool dedup);

// Streams all 2^C(n,2) labeled graphs in edge-mask order. Plumbing for
// verification code that needs labeled corpora without materializing them.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

// Erdos-Renyi style G(n, p), deterministic for fixed (n, p, seed).
Graph sample_graph(int n, double edge_probability, std::uint64_t seed);

// Graph from an edge-presence bitmask over the lexicographic pair order.
Graph graph_from_mask(int n, std::uint64_t mask);

} // namespace bredux

#endif
