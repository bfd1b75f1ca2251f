#include "bredux/enumerate.hpp"

#include "bredux/isomorphism.hpp"

#include <random>
#include <unordered_set>

namespace bredux {

Graph graph_from_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u)
                e.push_back({u, v});
    return Graph(n, std::move(e));
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn)
{
    if (n < 1)
        throw Error("labeled enumeration needs n >= 1");
    if (n > 8)
        throw Error("labeled enumeration limited to 8 vertices");
    const std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        fn(graph_from_mask(n, mask));
}

std::vector<Graph> enumerate_graphs(int n, bool dedup)
{
    if (n < 1 || n > 6)
        throw Error("exhaustive enumeration limited to 1 <= n <= 6; use sample_graph beyond");
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (dedup) {
            if (!seen.insert(canonical_edge_mask(g)).second)
                return;
        }
        out.push_back(g);
    });
    return out;
}

Graph sample_graph(int n, double edge_probability, std::uint64_t seed)
{
    if (n < 1)
        throw Error("sample_graph needs n >= 1");
    if (!(edge_probability >= 0.0) || !(edge_probability <= 1.0))
        throw Error("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // u64 draw compared against p * 2^64; avoids distribution
            // objects so output is pinned by the mt19937_64 spec alone.
            const std::uint64_t draw = rng();
            const bool present = edge_probability >= 1.0
                || (edge_probability > 0.0
                    && static_cast<double>(draw) * 0x1p-64 < edge_probability);
            if (present)
                e.push_back({u, v});
        }
    return Graph(n, std::move(e));
}

} // namespace bredux
