#ifndef BREDUX_ISOMORPHISM_HPP
#define BREDUX_ISOMORPHISM_HPP

#include "bredux/graph.hpp"

#include <cstdint>
#include <optional>

namespace bredux {

// Edge-preserving bijection test. Degree-sequence and neighbor-degree
// refinement first, then backtracking over the refined classes.
bool are_isomorphic(const Graph& a, const Graph& b);

// Returns a witness mapping a-vertex -> b-vertex when one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// Lexicographically smallest edge-bit encoding over all vertex
// permutations. Brute force, so only for small n (enumeration dedup).
std::uint64_t canonical_edge_mask(const Graph& g);

} // namespace bredux

#endif
