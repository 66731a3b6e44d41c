#include "linarb/sdr.hpp"

#include <algorithm>
#include <string>

#include "linarb/errors.hpp"
#include "linarb/max_flow.hpp"

namespace linarb {

namespace {

void check_range(const Graph& g, const DegeneracyOrdering& ord, int d)
{
    if (ord.k < 1)
        throw InputError("ordering must certify k >= 1");
    if (d < ord.k || d > max_degree(g))
        throw InputError("degree threshold d=" + std::to_string(d) + " outside [k, max degree]");
}

std::vector<Vertex> right_neighbors(const Graph& g, const DegeneracyOrdering& ord, Vertex v)
{
    std::vector<Vertex> out;
    for (const Incidence& inc : g.incident(v))
        if (ord.before(v, inc.neighbor))
            out.push_back(inc.neighbor);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::span<const Vertex> SdrAssignment::representatives_of(Vertex v) const
{
    const int idx = high_index[v];
    if (idx < 0)
        return {};
    return reps[idx];
}

int sdr_size(int d, int k)
{
    return (d - k) / k;
}

SdrAssignment compute_sdr(const Graph& g, const DegeneracyOrdering& ord, int d)
{
    check_range(g, ord, d);
    const Vertex n = g.num_vertices();

    SdrAssignment sdr;
    sdr.r = sdr_size(d, ord.k);
    sdr.high_index.assign(static_cast<std::size_t>(n), -1);
    sdr.owner.assign(static_cast<std::size_t>(n), kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) >= d) {
            sdr.high_index[v] = static_cast<int>(sdr.high_set.size());
            sdr.high_set.push_back(v);
        }
    }
    const int h = static_cast<int>(sdr.high_set.size());
    sdr.reps.resize(static_cast<std::size_t>(h));
    if (sdr.r == 0 || h == 0)
        return sdr;

    // nodes: source, sink, high vertices 2..h+1, graph vertices h+2..h+1+n
    const int source = 0;
    const int sink = 1;
    auto high_node = [](int i) { return 2 + i; };
    auto vertex_node = [h](Vertex v) { return 2 + h + v; };

    MaxFlow flow(2 + h + n);
    std::size_t arc_count = static_cast<std::size_t>(h) + static_cast<std::size_t>(n);
    for (Vertex v : sdr.high_set)
        for (const Incidence& inc : g.incident(v))
            arc_count += ord.before(v, inc.neighbor);
    flow.reserve_arcs(arc_count);
    std::vector<std::vector<std::pair<int, Vertex>>> choice_arcs(static_cast<std::size_t>(h));
    std::vector<char> is_candidate(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < h; ++i) {
        flow.add_arc(source, high_node(i), sdr.r);
        for (Vertex u : right_neighbors(g, ord, sdr.high_set[i])) {
            choice_arcs[i].emplace_back(flow.add_arc(high_node(i), vertex_node(u), 1), u);
            is_candidate[u] = 1;
        }
    }
    for (Vertex u = 0; u < n; ++u)
        if (is_candidate[u])
            flow.add_arc(vertex_node(u), sink, 1);

    const auto value = flow.solve(source, sink);
    if (value != static_cast<std::int64_t>(sdr.r) * h)
        throw InternalContradiction("no " + std::to_string(sdr.r) + "-SDR exists for " +
                                    std::to_string(h) + " high vertices (flow " +
                                    std::to_string(value) + ")");

    for (int i = 0; i < h; ++i) {
        for (const auto& [arc, u] : choice_arcs[i]) {
            if (flow.flow_on(arc) > 0) {
                sdr.reps[i].push_back(u);
                sdr.owner[u] = sdr.high_set[i];
            }
        }
    }
    return sdr;
}

bool hall_certificate_check(const Graph& g, const DegeneracyOrdering& ord, int d,
                            std::span<const std::vector<Vertex>> sample_sets)
{
    check_range(g, ord, d);
    const long r = sdr_size(d, ord.k);
    std::vector<char> mark(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const auto& subset : sample_sets) {
        std::vector<Vertex> members(subset);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());

        std::vector<Vertex> touched;
        for (Vertex v : members) {
            g.check_vertex(v);
            if (g.degree(v) < d)
                throw InputError("vertex " + std::to_string(v) + " is not in the high set");
            for (Vertex u : right_neighbors(g, ord, v)) {
                if (!mark[u]) {
                    mark[u] = 1;
                    touched.push_back(u);
                }
            }
        }
        for (Vertex u : touched)
            mark[u] = 0;
        if (static_cast<long>(touched.size()) < r * static_cast<long>(members.size()))
            return false;
    }
    return true;
}

bool hall_full_check(const Graph& g, const DegeneracyOrdering& ord, int d)
{
    check_range(g, ord, d);
    std::vector<Vertex> high;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= d)
            high.push_back(v);
    if (high.size() > 20)
        throw InputError("exhaustive Hall check limited to 20 high vertices");

    std::vector<std::vector<Vertex>> subsets;
    const unsigned count = 1u << high.size();
    subsets.reserve(count);
    for (unsigned mask = 0; mask < count; ++mask) {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < high.size(); ++i)
            if (mask & (1u << i))
                s.push_back(high[i]);
        subsets.push_back(std::move(s));
    }
    return hall_certificate_check(g, ord, d, subsets);
}

} // namespace linarb
