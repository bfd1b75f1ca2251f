#ifndef BREDUX_IO_HPP
#define BREDUX_IO_HPP

#include "bredux/graph.hpp"

#include <string>
#include <variant>

namespace bredux {

// Text formats (see docs/formats.md):
//   graph     line 1 "n m", then m lines "u v" with 0 <= u < v < n
//   weighted  line 1 "n m w", then m = n(n-1)/2 lines "u v weight",
//             weight a decimal integer or ratio "p/q"
// Parse errors name the offending line.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

WeightedGraph parse_weighted_graph(const std::string& text);
std::string serialize_weighted_graph(const WeightedGraph& w);

using AnyGraph = std::variant<Graph, WeightedGraph>;

// Dispatches on the header: two tokens parse as a graph, a trailing "w"
// as a weighted graph.
AnyGraph parse_any_graph(const std::string& text);

Graph read_graph_file(const std::string& path);
WeightedGraph read_weighted_graph_file(const std::string& path);
AnyGraph read_any_graph_file(const std::string& path);

std::string to_dot(const Graph& g);
std::string to_dot(const WeightedGraph& w);

} // namespace bredux

#endif
