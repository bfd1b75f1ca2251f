#include "bredux/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bredux {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw Error("vertex count must be non-negative");
    if (n > 64)
        throw Error("graph too large (max 64 vertices)");
    adj_.assign(static_cast<std::size_t>(n), 0);
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u == v)
            throw Error("self-loop on vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v), edges_[i] = {u, v};
        if (u < 0 || v >= n)
            throw Error("vertex not in graph");
        if (i > 0 && edges_[i] == edges_[i - 1])
            throw Error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj_[u] |= std::uint64_t(1) << v;
        adj_[v] |= std::uint64_t(1) << u;
    }
    std::sort(edges_.begin(), edges_.end());
}

int Graph::degree(int v) const
{
    return static_cast<int>(std::popcount(adj_[v]));
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v)
        d[v] = degree(v);
    return d;
}

std::vector<int> Graph::neighbors(int v) const
{
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u))
            out.push_back(u);
    return out;
}

Graph Graph::complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph Graph::path(int n)
{
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.push_back({v - 1, v});
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw Error("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        e.push_back({v - 1, v});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

Graph Graph::star(int leaves)
{
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.push_back({0, v});
    return Graph(leaves + 1, std::move(e));
}

WeightedGraph::WeightedGraph(int n, std::vector<Rational> weights)
    : n_(n), w_(std::move(weights))
{
    if (n < 0)
        throw Error("vertex count must be non-negative");
    const std::size_t expect = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (w_.size() != expect)
        throw Error("incomplete weight map: expected " + std::to_string(expect)
                    + " weights, got " + std::to_string(w_.size()));
    for (const auto& w : w_)
        if (w < 0)
            throw Error("negative weight");
}

const Rational& WeightedGraph::weight(int u, int v) const
{
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error("vertex pair not in graph");
    if (u > v)
        std::swap(u, v);
    return w_[pair_index(n_, u, v)];
}

bool WeightedGraph::binary_weights() const
{
    for (const auto& w : w_)
        if (w != 0 && w != 1)
            return false;
    return true;
}

Graph delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.vertex_count())
        throw Error("vertex not in graph");
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v)
            continue;
        e.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    return Graph(g.vertex_count() - 1, std::move(e));
}

WeightedGraph delete_vertex(const WeightedGraph& w, int v)
{
    const int n = w.vertex_count();
    if (v < 0 || v >= n)
        throw Error("vertex not in graph");
    std::vector<Rational> out;
    for (int a = 0; a < n; ++a) {
        if (a == v)
            continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == v)
                continue;
            out.push_back(w.weight(a, b));
        }
    }
    return WeightedGraph(n - 1, std::move(out));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw Error("vertex set contains duplicates");
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count())
            throw Error("vertex not in graph");
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (auto [a, b] : g.edges())
        if (new_id[a] >= 0 && new_id[b] >= 0)
            e.push_back({new_id[a], new_id[b]});
    return Graph(static_cast<int>(keep.size()), std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> e = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges())
        e.push_back({u + shift, v + shift});
    return Graph(a.vertex_count() + b.vertex_count(), std::move(e));
}

std::vector<int> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u) && comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

int component_count(const Graph& g)
{
    const auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g)
{
    return component_count(g) <= 1;
}

bool is_acyclic(const Graph& g)
{
    return g.edge_count() + component_count(g) == g.vertex_count();
}

std::vector<Graph> split_components(const Graph& g)
{
    const auto comp = connected_components(g);
    const int k = component_count(g);
    std::vector<VertexSet> sets(static_cast<std::size_t>(k));
    for (int v = 0; v < g.vertex_count(); ++v)
        sets[comp[v]].push_back(v);
    std::vector<Graph> out;
    out.reserve(sets.size());
    for (const auto& s : sets)
        out.push_back(induced_subgraph(g, s));
    return out;
}

} // namespace bredux
