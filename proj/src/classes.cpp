#include "bredux/classes.hpp"

#include "bredux/io.hpp"
#include "bredux/transforms.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <tuple>

namespace bredux {

Graph gen_spider(const SpiderSpec& spec)
{
    if (spec.i < 0 || spec.j < 0 || spec.k < 0)
        throw Error("spider leg lengths must be non-negative");
    std::vector<Edge> e;
    int next = 1;
    for (int leg : {spec.i, spec.j, spec.k}) {
        int prev = 0;
        for (int step = 0; step < leg; ++step) {
            e.push_back({std::min(prev, next), std::max(prev, next)});
            prev = next++;
        }
    }
    return Graph(1 + spec.i + spec.j + spec.k, std::move(e));
}

Graph gen_caterpillar(const CaterpillarSpec& spec)
{
    const int spine = static_cast<int>(spec.hairs.size());
    if (spine < 1)
        throw Error("caterpillar needs at least one spine vertex");
    for (int h : spec.hairs)
        if (h < 0)
            throw Error("hair lengths must be non-negative");
    std::vector<Edge> e;
    for (int v = 1; v < spine; ++v)
        e.push_back({v - 1, v});
    int next = spine;
    for (int m = 0; m < spine; ++m) {
        int prev = m;
        for (int step = 0; step < spec.hairs[m]; ++step) {
            e.push_back({std::min(prev, next), std::max(prev, next)});
            prev = next++;
        }
    }
    Graph g(next, std::move(e));
    // With one hair per spine vertex no vertex can exceed degree 3; the
    // guard stays in case the construction above ever changes.
    if (g.max_degree() > 3)
        throw Error("caterpillar spec forces degree > 3");
    return g;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int from)
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

std::vector<int> tree_path(const Graph& g, int from, int to)
{
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    parent[from] = from;
    q.push(from);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (parent[u] < 0) {
                parent[u] = v;
                q.push(u);
            }
    }
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v])
        path.push_back(v);
    path.push_back(from);
    return path;
}

// True iff all marked vertices lie on one path of the tree g; decided via
// the marked pair at maximum pairwise distance.
bool marked_on_single_path(const Graph& g, const std::vector<int>& marked)
{
    if (marked.size() <= 1)
        return true;
    int best_a = marked[0], best_b = marked[0], best = -1;
    for (int a : marked) {
        const auto dist = bfs_distances(g, a);
        for (int b : marked)
            if (dist[b] > best) {
                best = dist[b];
                best_a = a;
                best_b = b;
            }
    }
    const auto path = tree_path(g, best_a, best_b);
    const std::uint64_t on_path = [&] {
        std::uint64_t m = 0;
        for (int v : path)
            m |= std::uint64_t(1) << v;
        return m;
    }();
    for (int v : marked)
        if (!((on_path >> v) & 1u))
            return false;
    return true;
}

bool t_component(const Graph& c)
{
    if (!is_acyclic(c) || c.max_degree() > 3)
        return false;
    int cubic = 0;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.degree(v) == 3)
            ++cubic;
    return cubic <= 1;
}

bool q_component(const Graph& c)
{
    if (!is_acyclic(c) || c.max_degree() > 3)
        return false;
    std::vector<int> cubics;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.degree(v) == 3)
            cubics.push_back(v);
    return marked_on_single_path(c, cubics);
}

// Membership in the hereditary closure of the triangle-expansion images
// of Q: triangles vertex-disjoint, every cubic vertex inside a triangle,
// the triangle contraction a tree, and the contracted triangle vertices
// on a single path. Full images R(G), G in Q, satisfy this with the
// contraction recovering G; vertex deletion preserves every condition.
bool rq_component(const Graph& c)
{
    const int n = c.vertex_count();
    if (c.max_degree() > 3)
        return false;
    const auto triangles = find_triangles(c);
    std::vector<int> tri_of(static_cast<std::size_t>(n), -1);
    for (std::size_t t = 0; t < triangles.size(); ++t)
        for (int v : triangles[t]) {
            if (tri_of[v] >= 0)
                return false;
            tri_of[v] = static_cast<int>(t);
        }
    for (int v = 0; v < n; ++v)
        if (c.degree(v) == 3 && tri_of[v] < 0)
            return false;

    std::vector<int> super(static_cast<std::size_t>(n), -1);
    int supers = 0;
    for (int v = 0; v < n; ++v) {
        if (super[v] >= 0)
            continue;
        const int id = supers++;
        if (tri_of[v] >= 0)
            for (int w : triangles[tri_of[v]])
                super[w] = id;
        else
            super[v] = id;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : c.edges()) {
        if (tri_of[u] >= 0 && tri_of[u] == tri_of[v])
            continue;
        edges.push_back({std::min(super[u], super[v]), std::max(super[u], super[v])});
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        return false; // parallel contraction edges come from a non-triangle cycle
    if (static_cast<int>(edges.size()) != supers - 1)
        return false; // connected, so a tree iff the edge count matches
    Graph contracted(supers, std::move(edges));

    std::vector<int> marked;
    for (std::size_t t = 0; t < triangles.size(); ++t)
        marked.push_back(super[triangles[t][0]]);
    return marked_on_single_path(contracted, marked);
}

bool graph_member(ClassId c, const Graph& g)
{
    switch (c) {
    case ClassId::T:
        for (const Graph& comp : split_components(g))
            if (!t_component(comp))
                return false;
        return true;
    case ClassId::Q:
        for (const Graph& comp : split_components(g))
            if (!q_component(comp))
                return false;
        return true;
    case ClassId::CoT:
        return graph_member(ClassId::T, complement(g));
    case ClassId::LT:
        return line_root(g, ClassId::T).has_value();
    case ClassId::CoLT:
        return graph_member(ClassId::LT, complement(g));
    case ClassId::RQ:
        for (const Graph& comp : split_components(g))
            if (!rq_component(comp))
                return false;
        return true;
    case ClassId::KQ:
    case ClassId::KRQ:
        throw Error("class " + std::string(class_token(c)) + " expects a weighted graph");
    }
    throw Error("unknown class id");
}

} // namespace

bool is_member(ClassId c, const Graph& g)
{
    return graph_member(c, g);
}

bool is_member(ClassId c, const WeightedGraph& w)
{
    switch (c) {
    case ClassId::KQ:
        return w.binary_weights() && is_member(ClassId::Q, k_extract(w));
    case ClassId::KRQ:
        return w.binary_weights() && is_member(ClassId::RQ, k_extract(w));
    default:
        throw Error("class " + std::string(class_token(c)) + " expects an unweighted graph");
    }
}

bool is_member(ClassId c, const Member& m)
{
    if (std::holds_alternative<Graph>(m))
        return is_member(c, std::get<Graph>(m));
    return is_member(c, std::get<WeightedGraph>(m));
}

namespace {

std::vector<SpiderSpec> spider_specs_up_to(int max_vertices)
{
    std::vector<SpiderSpec> specs;
    for (int total = 0; total + 1 <= max_vertices; ++total)
        for (int i = 0; 3 * i <= total; ++i)
            for (int j = i; i + 2 * j <= total; ++j)
                specs.push_back({i, j, total - i - j});
    return specs;
}

// Single spiders plus two-spider forests within the vertex budget.
std::vector<Graph> t_members(int max_vertices)
{
    const auto specs = spider_specs_up_to(max_vertices);
    std::vector<Graph> out;
    for (const auto& s : specs)
        out.push_back(gen_spider(s));
    const std::size_t singles = out.size();
    for (std::size_t a = 0; a < singles; ++a)
        for (std::size_t b = a; b < singles; ++b) {
            if (out[a].vertex_count() + out[b].vertex_count() > max_vertices)
                continue;
            out.push_back(disjoint_union(out[a], out[b]));
        }
    return out;
}

std::vector<Graph> q_members(int max_vertices)
{
    std::vector<Graph> out;
    std::vector<int> hairs;
    auto rec = [&](auto&& self, int spine, int left) -> void {
        if (static_cast<int>(hairs.size()) == spine) {
            out.push_back(gen_caterpillar({hairs}));
            return;
        }
        for (int h = 0; h <= left; ++h) {
            hairs.push_back(h);
            self(self, spine, left - h);
            hairs.pop_back();
        }
    };
    for (int spine = 1; spine <= max_vertices; ++spine)
        rec(rec, spine, max_vertices - spine);
    return out;
}

} // namespace

std::vector<Member> generate_members(ClassId c, int max_vertices)
{
    std::vector<Member> out;
    switch (c) {
    case ClassId::T:
        for (auto& g : t_members(max_vertices))
            out.emplace_back(std::move(g));
        break;
    case ClassId::Q:
        for (auto& g : q_members(max_vertices))
            out.emplace_back(std::move(g));
        break;
    case ClassId::CoT:
        for (auto& g : t_members(max_vertices))
            out.emplace_back(complement(g));
        break;
    case ClassId::LT:
        // Roots with up to max_vertices edges give images within budget.
        for (auto& g : t_members(max_vertices + 2)) {
            if (g.edge_count() > max_vertices)
                continue;
            out.emplace_back(line_graph(g).graph);
        }
        break;
    case ClassId::CoLT:
        for (auto& g : t_members(max_vertices + 2)) {
            if (g.edge_count() > max_vertices)
                continue;
            out.emplace_back(complement(line_graph(g).graph));
        }
        break;
    case ClassId::RQ:
        for (auto& g : q_members(max_vertices)) {
            Graph image = r_expand(g);
            if (image.vertex_count() <= max_vertices)
                out.emplace_back(std::move(image));
        }
        break;
    case ClassId::KQ:
        for (auto& g : q_members(max_vertices))
            out.emplace_back(k_complete(g));
        break;
    case ClassId::KRQ:
        for (auto& g : q_members(max_vertices)) {
            Graph image = r_expand(g);
            if (image.vertex_count() <= max_vertices)
                out.emplace_back(k_complete(image));
        }
        break;
    }
    return out;
}

ClosureReport check_hereditary_closure(ClassId c, int size_budget, std::uint64_t seed)
{
    ClosureReport report;
    report.cls = c;
    report.budget = size_budget;
    report.seed = seed;
    const auto members = generate_members(c, size_budget);
    report.members = static_cast<long long>(members.size());
    for (const Member& m : members) {
        const int n = std::holds_alternative<Graph>(m)
            ? std::get<Graph>(m).vertex_count()
            : std::get<WeightedGraph>(m).vertex_count();
        for (int v = 0; v < n; ++v) {
            ++report.deletions;
            bool ok;
            std::string witness;
            if (std::holds_alternative<Graph>(m)) {
                const Graph& g = std::get<Graph>(m);
                ok = is_member(c, delete_vertex(g, v));
                if (!ok)
                    witness = serialize_graph(g);
            } else {
                const WeightedGraph& w = std::get<WeightedGraph>(m);
                ok = is_member(c, delete_vertex(w, v));
                if (!ok)
                    witness = serialize_weighted_graph(w);
            }
            if (!ok)
                report.violations.push_back({witness, v});
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const ClosureViolation& a, const ClosureViolation& b) {
                  return std::tie(a.member, a.deleted_vertex) < std::tie(b.member, b.deleted_vertex);
              });
    return report;
}

} // namespace bredux
