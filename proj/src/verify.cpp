#include "linarb/verify.hpp"

#include <algorithm>

namespace linarb {

std::string_view to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::uncolored_edge: return "UNCOLORED_EDGE";
    case ViolationKind::degree_overflow: return "DEGREE_OVERFLOW";
    case ViolationKind::monochromatic_cycle: return "MONOCHROMATIC_CYCLE";
    case ViolationKind::unknown_edge: return "UNKNOWN_EDGE";
    case ViolationKind::invalid_class: return "INVALID_CLASS";
    case ViolationKind::duplicate_edge: return "DUPLICATE_EDGE";
    }
    return "UNKNOWN";
}

namespace {

// Iterative DFS over the edges of one class; every non-tree edge closes a
// cycle, reported as the tree path between its ends.
void find_cycles(const Graph& g, ClassId cls, const std::vector<EdgeId>& edges, std::vector<Violation>& out)
{
    std::vector<Vertex> touched;
    for (EdgeId e : edges) {
        touched.push_back(g.edge(e).u);
        touched.push_back(g.edge(e).v);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    auto local = [&](Vertex x) {
        return static_cast<std::size_t>(std::lower_bound(touched.begin(), touched.end(), x) - touched.begin());
    };

    const std::size_t n = touched.size();
    std::vector<std::vector<std::pair<std::size_t, EdgeId>>> adj(n);
    for (EdgeId e : edges) {
        const auto a = local(g.edge(e).u);
        const auto b = local(g.edge(e).v);
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }

    std::vector<int> depth(n, -1);
    std::vector<std::size_t> parent(n);
    std::vector<EdgeId> parent_edge(n, kNoEdge);
    std::vector<std::size_t> cursor(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (depth[root] != -1)
            continue;
        depth[root] = 0;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            if (cursor[x] == adj[x].size()) {
                stack.pop_back();
                continue;
            }
            const auto [y, e] = adj[x][cursor[x]++];
            if (e == parent_edge[x])
                continue;
            if (depth[y] == -1) {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                parent_edge[y] = e;
                stack.push_back(y);
            } else if (depth[y] < depth[x]) {
                Violation v{ViolationKind::monochromatic_cycle, cls, {}};
                for (std::size_t z = x; z != y; z = parent[z])
                    v.vertices.push_back(touched[z]);
                v.vertices.push_back(touched[y]);
                out.push_back(std::move(v));
            }
        }
    }
}

} // namespace

VerificationReport verify_partition(const Graph& g, std::span<const ClassId> edge_class, int t)
{
    VerificationReport report;
    std::vector<std::vector<EdgeId>> by_class(static_cast<std::size_t>(std::max(t, 0)));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const ClassId c = static_cast<std::size_t>(e) < edge_class.size() ? edge_class[e] : kUncolored;
        const Edge& ed = g.edge(e);
        if (c == kUncolored)
            report.violations.push_back({ViolationKind::uncolored_edge, kUncolored, {ed.u, ed.v}});
        else if (c < 0 || c >= t)
            report.violations.push_back({ViolationKind::invalid_class, c, {ed.u, ed.v}});
        else
            by_class[c].push_back(e);
    }

    // per-vertex class multiplicities
    std::vector<ClassId> at_vertex;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        at_vertex.clear();
        for (const Incidence& inc : g.incident(v)) {
            const auto e = static_cast<std::size_t>(inc.edge);
            if (e < edge_class.size() && edge_class[e] >= 0 && edge_class[e] < t)
                at_vertex.push_back(edge_class[e]);
        }
        std::sort(at_vertex.begin(), at_vertex.end());
        for (std::size_t a = 0; a < at_vertex.size();) {
            std::size_t b = a;
            while (b < at_vertex.size() && at_vertex[b] == at_vertex[a])
                ++b;
            if (b - a > 2)
                report.violations.push_back({ViolationKind::degree_overflow, at_vertex[a], {v}});
            a = b;
        }
    }

    for (ClassId c = 0; c < t; ++c) {
        if (!by_class[c].empty())
            ++report.class_count;
        find_cycles(g, c, by_class[c], report.violations);
    }

    report.valid = report.violations.empty();
    report.optimal = report.valid && report.class_count == (max_degree(g) + 1) / 2;
    return report;
}

VerificationReport verify_partition(const Graph& g, std::span<const ColoredEdge> coloring, int t)
{
    std::vector<ClassId> edge_class(static_cast<std::size_t>(g.num_edges()), kUncolored);
    std::vector<Violation> extra;
    for (const ColoredEdge& ce : coloring) {
        const auto e = g.find_edge(ce.u, ce.v);
        if (!e) {
            extra.push_back({ViolationKind::unknown_edge, ce.cls, {ce.u, ce.v}});
        } else if (edge_class[*e] != kUncolored) {
            extra.push_back({ViolationKind::duplicate_edge, ce.cls, {g.edge(*e).u, g.edge(*e).v}});
        } else if (ce.cls < 0) {
            // the edge stays uncolored and is reported as such as well
            extra.push_back({ViolationKind::invalid_class, ce.cls, {g.edge(*e).u, g.edge(*e).v}});
        } else {
            edge_class[*e] = ce.cls;
        }
    }
    VerificationReport report = verify_partition(g, edge_class, t);
    report.violations.insert(report.violations.begin(), extra.begin(), extra.end());
    report.valid = report.violations.empty();
    report.optimal = report.valid && report.optimal;
    return report;
}

} // namespace linarb
