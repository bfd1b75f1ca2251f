#ifndef BREDUX_CLASSES_HPP
#define BREDUX_CLASSES_HPP

#include "bredux/class_id.hpp"
#include "bredux/graph.hpp"

#include <cstdint>
#include <variant>

namespace bredux {

// Tree with one center and three pendant paths of i, j, k vertices.
struct SpiderSpec {
    int i = 0;
    int j = 0;
    int k = 0;
};

// Subcubic tree: spine path of hairs.size() vertices, spine vertex m
// carrying a pendant path of hairs[m] vertices.
struct CaterpillarSpec {
    std::vector<int> hairs;
};

Graph gen_spider(const SpiderSpec& spec);
Graph gen_caterpillar(const CaterpillarSpec& spec);

using Member = std::variant<Graph, WeightedGraph>;

bool is_member(ClassId c, const Graph& g);
bool is_member(ClassId c, const WeightedGraph& w);
bool is_member(ClassId c, const Member& m);

// Exhaustive member corpora up to max_vertices, produced by generating
// T/Q members and transforming. Used by the closure sweeps.
std::vector<Member> generate_members(ClassId c, int max_vertices);

struct ClosureViolation {
    std::string member;     // serialized witness
    int deleted_vertex = 0;
};

struct ClosureReport {
    ClassId cls = ClassId::T;
    int budget = 0;
    long long members = 0;
    long long deletions = 0;
    std::vector<ClosureViolation> violations;
    std::uint64_t seed = 0;
};

// Deletes every vertex of every generated member and re-checks membership.
// Violations are data, not errors.
ClosureReport check_hereditary_closure(ClassId c, int size_budget, std::uint64_t seed);

} // namespace bredux

#endif
