#include "bredux/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace bredux {

namespace {

// Per-vertex signature: (degree, sorted neighbor degrees). Isomorphisms
// must respect these, which prunes near everything at our scale.
std::vector<std::vector<int>> vertex_signatures(const Graph& g)
{
    const auto deg = g.degrees();
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        sig[v].push_back(deg[v]);
        std::vector<int> nd;
        for (int u : g.neighbors(v))
            nd.push_back(deg[u]);
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    std::vector<std::vector<int>> candidates; // per a-vertex, signature-compatible b-vertices
    std::vector<int> order;                   // a-vertices, most constrained first
    std::vector<int> image;                   // a-vertex -> b-vertex or -1
    std::vector<bool> used;                   // b-vertex taken

    bool extend(std::size_t depth)
    {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w : candidates[v]) {
            if (used[w])
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int u = order[i];
                if (a.adjacent(v, u) != b.adjacent(w, image[u]))
                    ok = false;
            }
            if (!ok)
                continue;
            image[v] = w;
            used[w] = true;
            if (extend(depth + 1))
                return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b)
{
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    if (n == 0)
        return std::vector<int>{};

    const auto sig_a = vertex_signatures(a);
    const auto sig_b = vertex_signatures(b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }

    Matcher m{a, b, {}, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    m.candidates.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w)
            if (sig_a[v] == sig_b[w])
                m.candidates[v].push_back(w);
        if (m.candidates[v].empty())
            return std::nullopt;
    }
    m.order.resize(static_cast<std::size_t>(n));
    std::iota(m.order.begin(), m.order.end(), 0);
    std::sort(m.order.begin(), m.order.end(), [&](int x, int y) {
        if (m.candidates[x].size() != m.candidates[y].size())
            return m.candidates[x].size() < m.candidates[y].size();
        return x < y;
    });
    if (!m.extend(0))
        return std::nullopt;
    return m.image;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    return find_isomorphism(a, b).has_value();
}

std::uint64_t canonical_edge_mask(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 8)
        throw Error("canonical_edge_mask limited to 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t mask = 0;
        for (auto [u, v] : g.edges()) {
            int pu = perm[u], pv = perm[v];
            if (pu > pv)
                std::swap(pu, pv);
            mask |= std::uint64_t(1) << pair_index(n, pu, pv);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace bredux
