#include "linarb/forest_coloring.hpp"

#include <algorithm>
#include <string>

#include "linarb/errors.hpp"

namespace linarb {

ForestColoring::ForestColoring(const Graph& g, int t)
    : graph_(&g)
    , t_(t)
    , color_(static_cast<std::size_t>(g.num_edges()), kUncolored)
    , degree_(static_cast<std::size_t>(g.num_vertices()) * static_cast<std::size_t>(std::max(t, 0)), 0)
    , colored_degree_(static_cast<std::size_t>(g.num_vertices()), 0)
    , internal_count_(static_cast<std::size_t>(g.num_vertices()), 0)
{
    if (t < 0)
        throw InputError("negative class count");
}

void ForestColoring::check_class(ClassId j) const
{
    if (j < 0 || j >= t_)
        throw InputError("class " + std::to_string(j) + " outside 0.." + std::to_string(t_ - 1));
}

void ForestColoring::bump(Vertex v, ClassId j, int delta)
{
    auto& d = degree_[index(v, j)];
    if (d == 2)
        --internal_count_[v];
    d = static_cast<std::uint8_t>(d + delta);
    if (d == 2)
        ++internal_count_[v];
    colored_degree_[v] += delta;
}

void ForestColoring::assign(EdgeId e, ClassId j)
{
    check_class(j);
    if (color_.at(static_cast<std::size_t>(e)) != kUncolored)
        throw InputError("edge " + std::to_string(e) + " is already colored");
    const Edge& ed = graph_->edge(e);
    if (class_degree(ed.u, j) >= 2 || class_degree(ed.v, j) >= 2)
        throw FeasibilityError("class " + std::to_string(j) + " would exceed degree 2 at edge " +
                               std::to_string(ed.u) + "-" + std::to_string(ed.v));
    bump(ed.u, j, +1);
    bump(ed.v, j, +1);
    color_[e] = j;
    ++num_colored_;
}

void ForestColoring::recolor(EdgeId e, ClassId j)
{
    check_class(j);
    const ClassId old = color_.at(static_cast<std::size_t>(e));
    if (old == kUncolored)
        throw InputError("edge " + std::to_string(e) + " is not colored");
    if (old == j)
        return;
    const Edge& ed = graph_->edge(e);
    if (class_degree(ed.u, j) >= 2 || class_degree(ed.v, j) >= 2)
        throw FeasibilityError("recolor to class " + std::to_string(j) + " would exceed degree 2 at edge " +
                               std::to_string(ed.u) + "-" + std::to_string(ed.v));
    bump(ed.u, old, -1);
    bump(ed.v, old, -1);
    bump(ed.u, j, +1);
    bump(ed.v, j, +1);
    color_[e] = j;
}

void ForestColoring::swap_colors(EdgeId e1, EdgeId e2)
{
    const ClassId c1 = color_.at(static_cast<std::size_t>(e1));
    const ClassId c2 = color_.at(static_cast<std::size_t>(e2));
    if (c1 == kUncolored || c2 == kUncolored)
        throw InputError("swap_colors needs two colored edges");
    if (c1 == c2)
        return;
    const Edge a = graph_->edge(e1);
    const Edge b = graph_->edge(e2);
    auto apply = [&](int sign) {
        bump(a.u, c1, -sign);
        bump(a.v, c1, -sign);
        bump(b.u, c2, -sign);
        bump(b.v, c2, -sign);
        bump(a.u, c2, +sign);
        bump(a.v, c2, +sign);
        bump(b.u, c1, +sign);
        bump(b.v, c1, +sign);
    };
    apply(+1);
    for (Vertex x : {a.u, a.v, b.u, b.v}) {
        if (class_degree(x, c1) > 2 || class_degree(x, c2) > 2) {
            apply(-1);
            throw FeasibilityError("swap would exceed degree 2 at vertex " + std::to_string(x));
        }
    }
    color_[e1] = c2;
    color_[e2] = c1;
}

std::optional<EdgeId> ForestColoring::class_edge_at(Vertex v, ClassId j, EdgeId except) const
{
    const int d = class_degree(v, j);
    if (d == 0 || (d == 1 && except != kNoEdge && color_[except] == j &&
                   (graph_->edge(except).u == v || graph_->edge(except).v == v)))
        return std::nullopt;
    for (const Incidence& inc : graph_->incident(v))
        if (inc.edge != except && color_[inc.edge] == j)
            return inc.edge;
    return std::nullopt;
}

bool ForestColoring::walk(ClassId j, Vertex start, EdgeId first, std::vector<Vertex>* visited,
                          Vertex stop_at) const
{
    // returns true iff the walk came back to start; reaching stop_at ends
    // the walk early (the caller inspects `visited`)
    EdgeId via = first;
    Vertex x = graph_->edge(first).other(start);
    while (true) {
        if (visited)
            visited->push_back(x);
        if (x == start)
            return true;
        if (x == stop_at)
            return false;
        const auto next = class_edge_at(x, j, via);
        if (!next)
            return false;
        via = *next;
        x = graph_->edge(via).other(x);
    }
}

bool ForestColoring::would_close_cycle(ClassId j, Vertex u, Vertex v) const
{
    check_class(j);
    graph_->check_vertex(u);
    graph_->check_vertex(v);
    if (u == v)
        return true;
    if (class_degree(u, j) == 0 || class_degree(v, j) == 0)
        return false;
    EdgeId first = kNoEdge;
    for (int side = 0; side < 2; ++side) {
        const auto e = class_edge_at(u, j, first);
        if (!e)
            break;
        std::vector<Vertex> seen;
        const bool cycle = walk(j, u, *e, &seen, v);
        if (!seen.empty() && seen.back() == v)
            return true;
        if (cycle)
            return false;
        first = *e;
    }
    return false;
}

bool ForestColoring::on_monochromatic_cycle(EdgeId e) const
{
    const ClassId j = color_.at(static_cast<std::size_t>(e));
    if (j == kUncolored)
        return false;
    return walk(j, graph_->edge(e).u, e, nullptr);
}

std::vector<Vertex> ForestColoring::path_through(ClassId j, Vertex v) const
{
    check_class(j);
    graph_->check_vertex(v);
    const auto e1 = class_edge_at(v, j);
    if (!e1)
        throw InputError("vertex " + std::to_string(v) + " has no edge of class " + std::to_string(j));

    std::vector<Vertex> forward;
    if (walk(j, v, *e1, &forward)) {
        forward.insert(forward.begin(), v);
        return forward;
    }
    std::vector<Vertex> backward;
    if (const auto e2 = class_edge_at(v, j, *e1))
        walk(j, v, *e2, &backward);

    std::vector<Vertex> path(backward.rbegin(), backward.rend());
    path.push_back(v);
    path.insert(path.end(), forward.begin(), forward.end());
    if (path.front() > path.back())
        std::reverse(path.begin(), path.end());
    return path;
}

ColorClassView ForestColoring::class_view(ClassId j) const
{
    check_class(j);
    const Vertex n = graph_->num_vertices();
    ColorClassView view;
    view.cls = j;
    view.component.assign(static_cast<std::size_t>(n), -1);

    auto add_component = [&](const std::vector<Vertex>& members, std::pair<Vertex, Vertex> ends, bool cycle) {
        const int id = static_cast<int>(view.ends.size());
        for (Vertex x : members)
            view.component[x] = id;
        view.ends.push_back(ends);
        view.is_cycle.push_back(cycle ? 1 : 0);
    };

    // paths are discovered from an end, so cycles are whatever remains
    for (Vertex v = 0; v < n; ++v) {
        if (view.component[v] != -1)
            continue;
        const int d = class_degree(v, j);
        if (d == 0) {
            add_component({v}, {v, v}, false);
        } else if (d == 1) {
            std::vector<Vertex> members{v};
            walk(j, v, *class_edge_at(v, j), &members);
            add_component(members, {std::min(v, members.back()), std::max(v, members.back())}, false);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (view.component[v] != -1)
            continue;
        std::vector<Vertex> members;
        walk(j, v, *class_edge_at(v, j), &members);
        add_component(members, {kNoVertex, kNoVertex}, true);
    }
    return view;
}

ColorSets color_sets(const ForestColoring& fc, Vertex v)
{
    fc.graph().check_vertex(v);
    ColorSets sets;
    for (ClassId j = 0; j < fc.num_classes(); ++j) {
        switch (fc.class_degree(v, j)) {
        case 0: sets.c0.push_back(j); break;
        case 1: sets.c1.push_back(j); break;
        default: sets.c2.push_back(j); break;
        }
    }
    return sets;
}

} // namespace linarb
