#include "linarb/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "linarb/errors.hpp"

namespace linarb {

namespace {

std::vector<std::string_view> tokenize(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long long parse_int(std::string_view token, std::size_t line)
{
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "malformed token '" + std::string(token) + "'");
    return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f)
{
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        f(number, tokenize(line));
    }
}

struct PendingEdge {
    Vertex u;
    Vertex v;
    std::size_t line;
};

} // namespace

Graph parse_edge_list(std::string_view text, bool one_based)
{
    constexpr long long kMaxId = 0x7FFFFFFE;
    std::optional<long long> n;
    std::optional<long long> m;
    std::size_t header_line = 0;
    std::vector<PendingEdge> pending;
    long long max_id = -1;
    const long long offset = one_based ? 1 : 0;

    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        if (tok.empty())
            return;
        if (one_based && tok[0] == "c")
            return;
        if (tok[0] == "p") {
            if (n || !pending.empty())
                throw ParseError(line, "header must be the first non-comment line");
            std::size_t first = 1;
            if (one_based && tok.size() == 4)
                first = 2;
            if (tok.size() != first + 2)
                throw ParseError(line, "header must read 'p <n> <m>'");
            n = parse_int(tok[first], line);
            m = parse_int(tok[first + 1], line);
            if (*n < 0 || *n > kMaxId + 1 || *m < 0)
                throw ParseError(line, "header values out of range");
            header_line = line;
            return;
        }
        std::size_t first = 0;
        if (one_based && tok[0] == "e")
            first = 1;
        if (tok.size() != first + 2)
            throw ParseError(line, "expected an edge 'u v'");
        const long long u = parse_int(tok[first], line) - offset;
        const long long v = parse_int(tok[first + 1], line) - offset;
        if (u < 0 || v < 0)
            throw ParseError(line, one_based ? "vertex ids start at 1" : "negative vertex id");
        if (u > kMaxId || v > kMaxId || (n && (u >= *n || v >= *n)))
            throw ParseError(line, "vertex id " + std::to_string(std::max(u, v) + offset) + " out of range");
        if (u == v)
            throw ParseError(line, "self-loop at vertex " + std::to_string(u + offset));
        max_id = std::max({max_id, u, v});
        pending.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), line});
    });

    Graph g(static_cast<Vertex>(n ? *n : max_id + 1));
    for (const PendingEdge& e : pending) {
        if (g.has_edge(e.u, e.v))
            throw ParseError(e.line, "duplicate edge " + std::to_string(e.u + offset) + " " +
                                         std::to_string(e.v + offset));
        g.add_edge(e.u, e.v);
    }
    if (m && *m != static_cast<long long>(pending.size()))
        throw ParseError(header_line, "header declares " + std::to_string(*m) + " edges, found " +
                                          std::to_string(pending.size()));
    return g;
}

std::string format_edge_list(const Graph& g)
{
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::ostringstream out;
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : edges)
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<ColoredEdge> parse_coloring(std::string_view text)
{
    std::vector<ColoredEdge> result;
    for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        if (tok.empty())
            return;
        if (tok.size() != 3)
            throw ParseError(line, "expected 'u v c'");
        const long long u = parse_int(tok[0], line);
        const long long v = parse_int(tok[1], line);
        const long long c = parse_int(tok[2], line);
        if (u < 0 || v < 0 || u > 0x7FFFFFFE || v > 0x7FFFFFFE)
            throw ParseError(line, "vertex id out of range");
        if (c < 1 || c > 0x7FFFFFFF)
            throw ParseError(line, "class must be a positive integer");
        result.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<ClassId>(c - 1)});
    });
    return result;
}

std::string format_coloring(const Graph& g, std::span<const ClassId> edge_class)
{
    std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        order[e] = e;
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    std::ostringstream out;
    for (EdgeId e : order)
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << edge_class[e] + 1 << '\n';
    return out.str();
}

std::string read_text(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace linarb
