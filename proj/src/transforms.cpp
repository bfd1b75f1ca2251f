#include "bredux/transforms.hpp"

#include "bredux/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace bredux {

namespace {

constexpr int kLineRootMaxVertices = 20;

} // namespace

Graph complement(const Graph& g)
{
    std::vector<Edge> e;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v))
                e.push_back({u, v});
    return Graph(g.vertex_count(), std::move(e));
}

LineGraphResult line_graph(const Graph& g)
{
    const auto& ge = g.edges();
    std::vector<Edge> e;
    for (std::size_t i = 0; i < ge.size(); ++i)
        for (std::size_t j = i + 1; j < ge.size(); ++j) {
            const auto [a, b] = ge[i];
            const auto [c, d] = ge[j];
            if (a == c || a == d || b == c || b == d)
                e.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    return {Graph(static_cast<int>(ge.size()), std::move(e)), ge};
}

namespace {

// Defined locally to keep transforms free of the classes module: a center
// vertex with three pendant paths of i, j, k vertices.
Graph make_spider(int i, int j, int k)
{
    std::vector<Edge> e;
    int next = 1;
    for (int leg : {i, j, k}) {
        int prev = 0;
        for (int step = 0; step < leg; ++step) {
            e.push_back({std::min(prev, next), std::max(prev, next)});
            prev = next++;
        }
    }
    return Graph(1 + i + j + k, std::move(e));
}

std::optional<Graph> spider_line_root(const Graph& component)
{
    const int m = component.vertex_count(); // root edge count
    if (m == 0)
        return Graph();
    for (int i = 0; 3 * i <= m; ++i)
        for (int j = i; i + 2 * j <= m; ++j) {
            const int k = m - i - j;
            const Graph root = make_spider(i, j, k);
            const auto lg = line_graph(root);
            if (lg.graph.edge_count() != component.edge_count())
                continue;
            if (are_isomorphic(lg.graph, component))
                return root;
        }
    return std::nullopt;
}

} // namespace

std::optional<Graph> line_root(const Graph& g, ClassId root_class)
{
    if (root_class != ClassId::T)
        throw Error("line_root supports only root class t");
    if (g.vertex_count() > kLineRootMaxVertices)
        throw Error("root search bound exceeded");
    Graph root;
    for (const Graph& c : split_components(g)) {
        auto r = spider_line_root(c);
        if (!r)
            return std::nullopt;
        root = disjoint_union(root, *r);
    }
    return root;
}

Graph r_expand(const Graph& g)
{
    if (g.max_degree() > 3)
        throw Error("R undefined for degree > 3");
    const int n = g.vertex_count();
    std::vector<int> base(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v) {
        base[v] = next;
        next += g.degree(v) == 3 ? 3 : 1;
    }
    std::vector<Edge> e;
    auto attach_point = [&](int v, int other) {
        if (g.degree(v) != 3)
            return base[v];
        const auto nb = g.neighbors(v); // sorted ascending
        const int rank = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), other)
                                          - nb.begin());
        return base[v] + rank;
    };
    for (auto [u, v] : g.edges()) {
        const int a = attach_point(u, v);
        const int b = attach_point(v, u);
        e.push_back({std::min(a, b), std::max(a, b)});
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 3) {
            e.push_back({base[v], base[v] + 1});
            e.push_back({base[v], base[v] + 2});
            e.push_back({base[v] + 1, base[v] + 2});
        }
    return Graph(next, std::move(e));
}

std::vector<std::array<int, 3>> find_triangles(const Graph& g)
{
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v))
                continue;
            for (int w = v + 1; w < g.vertex_count(); ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w))
                    out.push_back({u, v, w});
        }
    return out;
}

std::optional<Graph> r_contract(const Graph& g)
{
    const int n = g.vertex_count();
    const auto triangles = find_triangles(g);
    std::vector<int> tri_of(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < triangles.size(); ++t)
        for (int v : triangles[t]) {
            if (tri_of[v] >= 0)
                return std::nullopt; // overlapping triangles
            tri_of[v] = static_cast<int>(t);
        }

    // Supernodes keyed by their smallest original vertex; this fixes a
    // deterministic labeling of the contraction.
    std::vector<int> super(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (super[v] >= 0)
            continue;
        const int id = next++;
        if (tri_of[v] >= 0)
            for (int w : triangles[tri_of[v]])
                super[w] = id;
        else
            super[v] = id;
    }

    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        if (tri_of[u] >= 0 && tri_of[u] == tri_of[v])
            continue; // triangle-internal edge
        const int a = std::min(super[u], super[v]);
        const int b = std::max(super[u], super[v]);
        e.push_back({a, b});
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        return std::nullopt; // contraction produced a multi-edge

    Graph contracted(next, std::move(e));
    if (contracted.max_degree() > 3)
        return std::nullopt;
    if (!are_isomorphic(r_expand(contracted), g))
        return std::nullopt;
    return contracted;
}

WeightedGraph k_complete(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            w.push_back(g.adjacent(u, v) ? Rational(0) : Rational(1));
    return WeightedGraph(n, std::move(w));
}

Graph k_extract(const WeightedGraph& w)
{
    if (!w.binary_weights())
        throw Error("not a K-image: weights must all be 0 or 1");
    const int n = w.vertex_count();
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (w.weight(u, v) == 0)
                e.push_back({u, v});
    return Graph(n, std::move(e));
}

} // namespace bredux
