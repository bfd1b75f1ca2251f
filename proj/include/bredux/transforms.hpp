#ifndef BREDUX_TRANSFORMS_HPP
#define BREDUX_TRANSFORMS_HPP

#include "bredux/class_id.hpp"
#include "bredux/graph.hpp"

#include <optional>

namespace bredux {

// Same vertices, exactly the non-edges.
Graph complement(const Graph& g);

struct LineGraphResult {
    Graph graph;
    std::vector<Edge> vertex_to_edge; // L-vertex index -> originating edge of g
};

// Vertices of L(g) are the edges of g; adjacent iff the edges share an
// endpoint. L-vertex order follows the sorted edge order of g.
LineGraphResult line_graph(const Graph& g);

// Searches for a graph h in root_class with L(h) isomorphic to g. Only the
// spider class T is supported as a root class; the search runs per
// component over spider shapes with at most |component|+1 vertices.
std::optional<Graph> line_root(const Graph& g, ClassId root_class);

// Replaces every degree-3 vertex by a triangle, the three former edges
// attaching to distinct triangle corners (lowest neighbor to lowest
// corner). Defined on subcubic graphs only.
Graph r_expand(const Graph& g);

// Contracts every triangle to a single vertex; returns the result only if
// the triangles are vertex-disjoint and r_expand of the contraction gives
// back g up to isomorphism. Absent signals "not an R-image".
std::optional<Graph> r_contract(const Graph& g);

// Weighted completion: weight 0 on edges of g, weight 1 on non-edges.
WeightedGraph k_complete(const Graph& g);

// Inverse of k_complete: edges are the weight-0 pairs. Errors unless every
// weight is 0 or 1.
Graph k_extract(const WeightedGraph& w);

// All vertex triples forming triangles, each triple sorted ascending.
std::vector<std::array<int, 3>> find_triangles(const Graph& g);

} // namespace bredux

#endif
