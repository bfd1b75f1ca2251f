#include "bredux/io.hpp"

#include <fstream>
#include <sstream>

namespace bredux {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what)
{
    throw Error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& line)
{
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, int line)
{
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        parse_fail(line, "expected an integer, got '" + tok + "'");
    return value;
}

struct Header {
    int n = 0;
    int m = 0;
    bool weighted = false;
    int body_start = 0; // 1-based line of first edge
};

Header parse_header(const std::vector<std::string>& lines)
{
    int line_no = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!split_ws(lines[i]).empty()) {
            line_no = static_cast<int>(i) + 1;
            break;
        }
    }
    if (line_no == 0)
        parse_fail(1, "malformed header: empty input");
    const auto tokens = split_ws(lines[line_no - 1]);
    Header h;
    if (tokens.size() == 3 && tokens[2] == "w")
        h.weighted = true;
    else if (tokens.size() != 2)
        parse_fail(line_no, "malformed header: expected 'n m' or 'n m w'");
    const long long n = parse_int(tokens[0], line_no);
    const long long m = parse_int(tokens[1], line_no);
    if (n < 0 || n > 64)
        parse_fail(line_no, "malformed header: vertex count out of range");
    if (m < 0 || m > n * (n - 1) / 2)
        parse_fail(line_no, "malformed header: edge count out of range");
    h.n = static_cast<int>(n);
    h.m = static_cast<int>(m);
    h.body_start = line_no + 1;
    return h;
}

// Reads m body rows of `arity` tokens each; complains about shortfall or
// trailing non-blank lines.
std::vector<std::vector<std::string>> parse_body(const std::vector<std::string>& lines,
                                                 const Header& h, std::size_t arity)
{
    std::vector<std::vector<std::string>> rows;
    int line_no = h.body_start - 1;
    for (std::size_t i = h.body_start - 1; i < lines.size(); ++i) {
        line_no = static_cast<int>(i) + 1;
        const auto tokens = split_ws(lines[i]);
        if (tokens.empty())
            continue;
        if (rows.size() == static_cast<std::size_t>(h.m))
            parse_fail(line_no, "unexpected content after " + std::to_string(h.m) + " edges");
        if (tokens.size() != arity)
            parse_fail(line_no, "expected " + std::to_string(arity) + " fields");
        rows.push_back(tokens);
    }
    if (rows.size() != static_cast<std::size_t>(h.m))
        parse_fail(line_no + 1, "expected " + std::to_string(h.m) + " edges, got "
                                 + std::to_string(rows.size()));
    return rows;
}

std::pair<int, int> parse_endpoints(const std::vector<std::string>& row, int n, int line)
{
    const long long u = parse_int(row[0], line);
    const long long v = parse_int(row[1], line);
    if (u == v)
        parse_fail(line, "self-loop on vertex " + std::to_string(u));
    if (u > v)
        parse_fail(line, "endpoints out of order (need u < v)");
    if (u < 0 || v >= n)
        parse_fail(line, "vertex id " + std::to_string(v) + " not below n = " + std::to_string(n));
    return {static_cast<int>(u), static_cast<int>(v)};
}

int body_line(const Header& h, std::size_t row)
{
    // Row index back to 1-based input line, skipping blank lines is not
    // tracked; body rows are contiguous in well-formed files.
    return h.body_start + static_cast<int>(row);
}

} // namespace

Graph parse_graph(const std::string& text)
{
    const auto lines = tokenize_lines(text);
    const Header h = parse_header(lines);
    if (h.weighted)
        throw Error("line 1: expected an unweighted graph header");
    const auto rows = parse_body(lines, h, 2);
    std::vector<Edge> edges;
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(h.n), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int line = body_line(h, i);
        const auto [u, v] = parse_endpoints(rows[i], h.n, line);
        if ((seen[u] >> v) & 1u)
            parse_fail(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        seen[u] |= std::uint64_t(1) << v;
        edges.push_back({u, v});
    }
    return Graph(h.n, std::move(edges));
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

WeightedGraph parse_weighted_graph(const std::string& text)
{
    const auto lines = tokenize_lines(text);
    const Header h = parse_header(lines);
    if (!h.weighted)
        throw Error("line 1: expected a weighted graph header 'n m w'");
    if (h.m != h.n * (h.n - 1) / 2)
        throw Error("line 1: incomplete weight map: need all " + std::to_string(h.n * (h.n - 1) / 2)
                    + " pairs");
    const auto rows = parse_body(lines, h, 3);
    std::vector<Rational> weights(static_cast<std::size_t>(h.m));
    std::vector<bool> filled(static_cast<std::size_t>(h.m), false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int line = body_line(h, i);
        const auto [u, v] = parse_endpoints(rows[i], h.n, line);
        const std::size_t idx = pair_index(h.n, u, v);
        if (filled[idx])
            parse_fail(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        filled[idx] = true;
        try {
            weights[idx] = parse_rational(rows[i][2]);
        } catch (const Error&) {
            parse_fail(line, "bad weight '" + rows[i][2] + "'");
        }
        if (weights[idx] < 0)
            parse_fail(line, "negative weight");
    }
    return WeightedGraph(h.n, std::move(weights));
}

std::string serialize_weighted_graph(const WeightedGraph& w)
{
    const int n = w.vertex_count();
    std::ostringstream out;
    out << n << ' ' << n * (n - 1) / 2 << " w\n";
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out << u << ' ' << v << ' ' << format_rational(w.weight(u, v)) << '\n';
    return out.str();
}

AnyGraph parse_any_graph(const std::string& text)
{
    const Header h = parse_header(tokenize_lines(text));
    if (h.weighted)
        return parse_weighted_graph(text);
    return parse_graph(text);
}

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

Graph read_graph_file(const std::string& path)
{
    return parse_graph(slurp(path));
}

WeightedGraph read_weighted_graph_file(const std::string& path)
{
    return parse_weighted_graph(slurp(path));
}

AnyGraph read_any_graph_file(const std::string& path)
{
    return parse_any_graph(slurp(path));
}

std::string to_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const WeightedGraph& w)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < w.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (int u = 0; u < w.vertex_count(); ++u)
        for (int v = u + 1; v < w.vertex_count(); ++v)
            out << "  " << u << " -- " << v << " [label=\"" << format_rational(w.weight(u, v))
                << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace bredux
