#include "linarb/oracle.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace linarb {

namespace {

class BacktrackSearch {
public:
    BacktrackSearch(const Graph& g, int t, std::int64_t& budget, std::int64_t& nodes)
        : g_(g)
        , t_(t)
        , n_(static_cast<std::size_t>(g.num_vertices()))
        , budget_(budget)
        , nodes_(nodes)
        , degree_(n_ * static_cast<std::size_t>(t), 0)
        , parent_(n_ * static_cast<std::size_t>(t))
        , size_(n_ * static_cast<std::size_t>(t), 1)
        , color_(static_cast<std::size_t>(g.num_edges()), kUncolored)
    {
        for (std::size_t j = 0; j < static_cast<std::size_t>(t); ++j)
            std::iota(parent_.begin() + static_cast<long>(j * n_), parent_.begin() + static_cast<long>((j + 1) * n_), 0);

        order_.resize(static_cast<std::size_t>(g.num_edges()));
        std::iota(order_.begin(), order_.end(), 0);
        auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
        std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
    }

    /// true: found; false: refuted. Sets exhausted_ on budget overrun.
    bool run() { return place(0, 0); }
    bool exhausted() const { return exhausted_; }
    const std::vector<ClassId>& coloring() const { return color_; }

private:
    std::size_t slot(ClassId j, Vertex x) const { return static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(x); }

    Vertex find(ClassId j, Vertex x) const
    {
        while (parent_[slot(j, x)] != x)
            x = parent_[slot(j, x)];
        return x;
    }

    bool place(std::size_t idx, int classes_open)
    {
        if (idx == order_.size())
            return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const EdgeId e = order_[idx];
        const Edge& ed = g_.edge(e);
        // classes are interchangeable: open at most one new class per edge
        const int limit = std::min(classes_open + 1, t_);
        for (ClassId j = 0; j < limit; ++j) {
            if (degree_[slot(j, ed.u)] >= 2 || degree_[slot(j, ed.v)] >= 2)
                continue;
            Vertex a = find(j, ed.u);
            Vertex b = find(j, ed.v);
            if (a == b)
                continue;
            if (size_[slot(j, a)] < size_[slot(j, b)])
                std::swap(a, b);
            parent_[slot(j, b)] = a;
            size_[slot(j, a)] += size_[slot(j, b)];
            ++degree_[slot(j, ed.u)];
            ++degree_[slot(j, ed.v)];
            color_[e] = j;

            if (place(idx + 1, std::max(classes_open, j + 1)))
                return true;

            color_[e] = kUncolored;
            --degree_[slot(j, ed.u)];
            --degree_[slot(j, ed.v)];
            size_[slot(j, a)] -= size_[slot(j, b)];
            parent_[slot(j, b)] = b;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    int t_;
    std::size_t n_;
    std::int64_t& budget_;
    std::int64_t& nodes_;
    std::vector<std::uint8_t> degree_;
    std::vector<Vertex> parent_;
    std::vector<int> size_;
    std::vector<ClassId> color_;
    std::vector<EdgeId> order_;
    bool exhausted_ = false;
};

} // namespace

OracleResult exact_la(const Graph& g, std::int64_t budget)
{
    OracleResult result;
    if (g.num_edges() == 0)
        return result;

    for (int t = (max_degree(g) + 1) / 2;; ++t) {
        BacktrackSearch search(g, t, budget, result.nodes_explored);
        const bool found = search.run();
        if (search.exhausted()) {
            result.status = OracleStatus::indeterminate;
            result.la = t;
            return result;
        }
        if (found) {
            result.la = t;
            result.witness = search.coloring();
            return result;
        }
    }
}

bool is_planar(const Graph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
    for (const Edge& e : g.edges())
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

LaBounds la_bounds(const Graph& g)
{
    const int delta = max_degree(g);
    LaBounds bounds;
    if (delta == 0)
        return bounds;

    bounds.lower = (delta + 1) / 2;
    bounds.upper = (delta + 2) / 2;
    if (delta % 2 == 0) {
        for (const auto& comp : connected_components(g)) {
            if (std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) == delta; })) {
                bounds.lower = bounds.upper;
                break;
            }
        }
    }
    const bool proven_degree = delta <= 6 || delta == 8 || delta == 10;
    bounds.upper_status = proven_degree || is_planar(g) ? BoundStatus::proven : BoundStatus::conjectured;
    return bounds;
}

} // namespace linarb
