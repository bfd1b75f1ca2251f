#ifndef BREDUX_GRAPH_HPP
#define BREDUX_GRAPH_HPP

#include "bredux/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bredux {

// Edges are stored normalized with u < v.
using Edge = std::pair<int, int>;

// A subset of the vertex range of some host graph.
using VertexSet = std::vector<int>;

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; adjacency is kept as 64-bit masks, which caps n at 64
// (far above the ~20-vertex working range of this project).
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const
    {
        return u != v && (adj_[u] >> v) & 1u;
    }
    std::uint64_t neighbors_mask(int v) const { return adj_[v]; }
    int degree(int v) const;
    int max_degree() const;
    std::vector<int> degrees() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves); // K_{1,leaves}, center 0

private:
    int n_ = 0;
    std::vector<Edge> edges_;        // sorted, unique
    std::vector<std::uint64_t> adj_;
};

// Complete graph with an exact rational weight on every vertex pair.
// Weights are stored over the lexicographic pair order (0,1),(0,2),...,(1,2),...
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Rational> weights);

    int vertex_count() const { return n_; }
    const Rational& weight(int u, int v) const;
    const std::vector<Rational>& weights() const { return w_; }
    bool binary_weights() const; // every weight 0 or 1

    bool operator==(const WeightedGraph& other) const
    {
        return n_ == other.n_ && w_ == other.w_;
    }

private:
    int n_ = 0;
    std::vector<Rational> w_;
};

// Rank of pair (u,v), u < v, in the lexicographic order used for weight
// storage and edge-mask encodings.
inline std::size_t pair_index(int n, int u, int v)
{
    // offset of row u is sum_{r<u} (n-1-r)
    return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

Graph delete_vertex(const Graph& g, int v);
WeightedGraph delete_vertex(const WeightedGraph& w, int v);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph disjoint_union(const Graph& a, const Graph& b);

// Component id per vertex, ids contiguous from 0 in order of first vertex.
std::vector<int> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g); // true for the empty graph
bool is_acyclic(const Graph& g);
std::vector<Graph> split_components(const Graph& g);

} // namespace bredux

#endif
