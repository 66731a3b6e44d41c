#include "linarb/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <span>
#include <sstream>

#include "linarb/errors.hpp"

namespace linarb {

std::string_view to_string(Mode mode)
{
    return mode == Mode::minimum ? "minimum" : "lac";
}

int required_delta(int k, Mode mode)
{
    return mode == Mode::minimum ? 2 * k * k - k : 2 * k * k - 2 * k;
}

int class_budget(int delta, Mode mode)
{
    return mode == Mode::minimum ? (delta + 1) / 2 : (delta + 2) / 2;
}

bool debug_assertions_from_env()
{
    const char* value = std::getenv("LINARB_DEBUG_ASSERT");
    return value != nullptr && std::string_view(value) == "1";
}

SolverStats& SolverStats::operator+=(const SolverStats& o)
{
    components += o.components;
    forest_components += o.forest_components;
    isolated_vertices += o.isolated_vertices;
    added_vertices += o.added_vertices;
    lemma1_inserts += o.lemma1_inserts;
    saturated_edges += o.saturated_edges;
    eq2_checks += o.eq2_checks;
    repair_iterations += o.repair_iterations;
    case1 += o.case1;
    case1_swaps += o.case1_swaps;
    case2 += o.case2;
    case2_swaps += o.case2_swaps;
    case3 += o.case3;
    invariant_scans += o.invariant_scans;
    max_bad_set = std::max(max_bad_set, o.max_bad_set);
    return *this;
}

// ---------------------------------------------------------------------------
// regularization and ordering

Regularized regularize(const Graph& g, int delta)
{
    const Vertex n = g.num_vertices();
    if (max_degree(g) < 2 || delta < max_degree(g))
        throw InputError("regularize needs 2 <= max degree <= delta");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw InputError("regularize: vertex " + std::to_string(v) + " is isolated");

    Regularized out;
    out.graph = g;
    out.original_vertices = n;
    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d <= 1 || d >= delta)
            continue;
        for (int p = d; p < delta; ++p)
            out.graph.add_edge(v, out.graph.add_vertex());
    }
    out.original_edge.assign(static_cast<std::size_t>(out.graph.num_edges()), 0);
    std::fill_n(out.original_edge.begin(), g.num_edges(), 1);
    return out;
}

Regularized regularize(const Graph& g)
{
    return regularize(g, max_degree(g));
}

DegeneracyOrdering regular_ordering(const Graph& g_star, int delta)
{
    for (Vertex v = 0; v < g_star.num_vertices(); ++v)
        if (g_star.degree(v) != 1 && g_star.degree(v) != delta)
            throw InputError("graph is not (" + std::to_string(delta) + ",1)-regular at vertex " +
                             std::to_string(v));
    std::vector<Vertex> order = degeneracy_ordering(g_star).order;
    std::stable_partition(order.begin(), order.end(), [&](Vertex v) { return g_star.degree(v) == delta; });
    return ordering_from_sequence(g_star, std::move(order));
}

// ---------------------------------------------------------------------------
// single-edge insertion and forests

ClassId lemma1_insert(ForestColoring& fc, Vertex x, Vertex y, SplitMix64* rng)
{
    const auto e = fc.graph().find_edge(x, y);
    if (!e)
        throw InputError("no edge " + std::to_string(x) + "-" + std::to_string(y));
    if (fc.color_of(*e) != kUncolored)
        throw InputError("edge " + std::to_string(x) + "-" + std::to_string(y) + " is already colored");

    const int t = fc.num_classes();
    const int dx = fc.colored_degree(x) + 1;
    const int dy = fc.colored_degree(y) + 1;
    if (2 * dx + dy > 2 * t + 2)
        throw PreconditionError("single-edge insertion needs 2d(x)+d(y) <= 2t+2, got " +
                                std::to_string(2 * dx + dy) + " > " + std::to_string(2 * t + 2));

    std::vector<ClassId> admissible;
    for (ClassId j = 0; j < t; ++j) {
        if (fc.class_degree(x, j) == 0 && fc.class_degree(y, j) <= 1) {
            if (!rng) {
                fc.assign(*e, j);
                return j;
            }
            admissible.push_back(j);
        }
    }
    if (!admissible.empty()) {
        const ClassId j = admissible[rng->uniform_below(admissible.size())];
        fc.assign(*e, j);
        return j;
    }
    throw InternalContradiction("no class with x isolated and y of degree <= 1 for edge " +
                                std::to_string(x) + "-" + std::to_string(y));
}

namespace {

// Packs the edges of the tree containing `root` into classes, two per
// class at every vertex. Returns false if a cycle is met.
bool pair_tree(const Graph& g, Vertex root, std::vector<ClassId>& edge_class,
               std::vector<EdgeId>& parent_edge, std::vector<char>& seen, std::vector<int>& used)
{
    std::queue<Vertex> queue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        std::fill(used.begin(), used.end(), 0);
        if (parent_edge[v] != kNoEdge)
            ++used[edge_class[parent_edge[v]]];
        for (const Incidence& inc : g.incident(v)) {
            if (inc.edge == parent_edge[v])
                continue;
            if (seen[inc.neighbor])
                return false;
            const auto slot = std::find_if(used.begin(), used.end(), [](int c) { return c < 2; });
            if (slot == used.end())
                throw InputError("forest pairing: degree " + std::to_string(g.degree(v)) + " exceeds 2t");
            ++*slot;
            edge_class[inc.edge] = static_cast<ClassId>(slot - used.begin());
            parent_edge[inc.neighbor] = inc.edge;
            seen[inc.neighbor] = 1;
            queue.push(inc.neighbor);
        }
    }
    return true;
}

} // namespace

std::vector<ClassId> forest_pairing(const Graph& forest, int t)
{
    const auto n = static_cast<std::size_t>(forest.num_vertices());
    std::vector<ClassId> edge_class(static_cast<std::size_t>(forest.num_edges()), kUncolored);
    std::vector<EdgeId> parent_edge(n, kNoEdge);
    std::vector<char> seen(n, 0);
    std::vector<int> used(static_cast<std::size_t>(std::max(t, 0)), 0);
    for (Vertex v = 0; v < forest.num_vertices(); ++v)
        if (!seen[v] && !pair_tree(forest, v, edge_class, parent_edge, seen, used))
            throw InputError("forest pairing: graph has a cycle");
    return edge_class;
}

// ---------------------------------------------------------------------------
// incremental builder

LinearForestBuilder::LinearForestBuilder(const Graph& g_star, DegeneracyOrdering ord, SdrAssignment sdr, int t,
                                         Mode mode, SolverOptions options)
    : g_(&g_star)
    , ord_(std::move(ord))
    , sdr_(std::move(sdr))
    , mode_(mode)
    , options_(options)
    , palette_rng_(options.palette_seed)
    , delta_(max_degree(g_star))
    , fc_(g_star, t)
{
    const Vertex n = g_star.num_vertices();
    if (static_cast<Vertex>(ord_.order.size()) != n || static_cast<Vertex>(sdr_.high_index.size()) != n)
        throw InputError("ordering / SDR do not match the graph");
    owner_position_.assign(static_cast<std::size_t>(n), -1);
    for (Vertex x = 0; x < n; ++x) {
        if (sdr_.owner[x] != kNoVertex) {
            owner_position_[x] = ord_.position[sdr_.owner[x]];
            reps_by_owner_.push_back(x);
        }
    }
    std::stable_sort(reps_by_owner_.begin(), reps_by_owner_.end(),
                     [this](Vertex a, Vertex b) { return owner_position_[a] < owner_position_[b]; });
}

EdgeId LinearForestBuilder::edge_between(Vertex a, Vertex b) const
{
    const auto e = g_->find_edge(a, b);
    if (!e)
        throw InternalContradiction("missing edge " + std::to_string(a) + "-" + std::to_string(b));
    return *e;
}

void LinearForestBuilder::contradiction(int i, const std::string& what) const
{
    std::ostringstream dump;
    const Vertex v = ord_.order[i];
    dump << what << " [position " << i << ", vertex " << v << ", k=" << ord_.k << ", r=" << sdr_.r
         << ", t=" << fc_.num_classes() << ", delta=" << delta_ << "; classes at v:";
    for (ClassId j = 0; j < fc_.num_classes(); ++j)
        dump << ' ' << fc_.class_degree(v, j);
    dump << "; representatives:";
    for (Vertex w : sdr_.representatives_of(v)) {
        const auto e = g_->find_edge(v, w);
        dump << ' ' << w << '/' << (e ? fc_.color_of(*e) : kUncolored);
    }
    dump << ']';
    throw InternalContradiction(dump.str());
}

std::vector<Vertex> LinearForestBuilder::non_representatives(int i) const
{
    const Vertex v = ord_.order[i];
    const auto reps = sdr_.representatives_of(v);
    std::vector<Vertex> w_set;
    for (const Incidence& inc : g_->incident(v))
        if (ord_.before(v, inc.neighbor) && std::find(reps.begin(), reps.end(), inc.neighbor) == reps.end())
            w_set.push_back(inc.neighbor);
    std::sort(w_set.begin(), w_set.end());
    return w_set;
}

// Class-degree of x in j counting only edges outside E(v, R*(v)), i.e. the
// coloring of H.
int LinearForestBuilder::h_degree(Vertex v, Vertex x, ClassId j) const
{
    int d = fc_.class_degree(x, j);
    for (Vertex w : sdr_.representatives_of(v)) {
        if (x != v && x != w)
            continue;
        const auto e = g_->find_edge(v, w);
        if (e && fc_.color_of(*e) == j)
            --d;
    }
    return d;
}

void LinearForestBuilder::phase_a_add_w_edges(int i)
{
    if (i != frontier_ || phase_ != 0)
        throw InputError("phase A called out of order");
    const Vertex v = ord_.order[i];
    const int t = fc_.num_classes();
    for (Vertex u : non_representatives(i)) {
        const int du = fc_.colored_degree(u) + 1;
        const int dv = fc_.colored_degree(v) + 1;
        if (2 * du + dv > 2 * t + 2)
            contradiction(i, "insertion bound 2d(u)+d(v_i) <= 2t+2 fails for u=" + std::to_string(u));
        lemma1_insert(fc_, u, v, options_.palette_seed != 0 ? &palette_rng_ : nullptr);
        ++stats_.lemma1_inserts;
    }
    phase_ = 1;
}

void LinearForestBuilder::phase_b_saturated_extension(int i)
{
    if (i != frontier_ || phase_ != 1)
        throw InputError("phase B called out of order");
    const Vertex v = ord_.order[i];
    const auto reps = sdr_.representatives_of(v);
    const int r = static_cast<int>(reps.size());
    const ColorSets sets = color_sets(fc_, v);
    const int slots = 2 * static_cast<int>(sets.c0.size()) + static_cast<int>(sets.c1.size());
    ++stats_.eq2_checks;
    if (slots < r || (mode_ == Mode::minimum && slots > r + 1))
        contradiction(i, "saturation bound r <= 2|C0|+|C1| <= r+1 violated (2|C0|+|C1|=" +
                             std::to_string(slots) + ")");

    std::vector<ClassId> palette;
    for (ClassId c : sets.c0) {
        palette.push_back(c);
        palette.push_back(c);
    }
    palette.insert(palette.end(), sets.c1.begin(), sets.c1.end());
    if (options_.palette_seed != 0)
        for (std::size_t a = palette.size(); a > 1; --a)
            std::swap(palette[a - 1], palette[palette_rng_.uniform_below(a)]);
    for (int idx = 0; idx < r; ++idx) {
        try {
            fc_.assign(edge_between(v, reps[idx]), palette[idx]);
        } catch (const FeasibilityError& err) {
            contradiction(i, std::string("saturated extension infeasible: ") + err.what());
        }
        ++stats_.saturated_edges;
    }
    phase_ = 2;
}

std::vector<Vertex> LinearForestBuilder::bad_set(int i) const
{
    const Vertex v = ord_.order[i];
    std::vector<Vertex> bad;
    for (Vertex w : sdr_.representatives_of(v)) {
        const auto e = g_->find_edge(v, w);
        if (e && fc_.on_monochromatic_cycle(*e))
            bad.push_back(w);
    }
    return bad;
}

void LinearForestBuilder::repair_monochromatic_cycles(int i)
{
    if (i != frontier_ || phase_ != 2)
        throw InputError("repair called out of order");
    const Vertex v = ord_.order[i];
    const auto reps = sdr_.representatives_of(v);
    const int t = fc_.num_classes();
    auto rep_with_color = [&](ClassId c, Vertex skip) -> Vertex {
        for (Vertex x : reps)
            if (x != skip && fc_.color_of(edge_between(v, x)) == c)
                return x;
        return kNoVertex;
    };

    std::vector<Vertex> bad = bad_set(i);
    stats_.max_bad_set = std::max(stats_.max_bad_set, static_cast<int>(bad.size()));
    int iteration = 0;
    while (!bad.empty()) {
        if (iteration >= sdr_.r)
            contradiction(i, "repair exceeded r iterations");
        RepairContext ctx;
        ctx.position = i;
        ctx.vertex = v;
        ctx.bad_set = bad;
        ctx.w = bad.front();
        const EdgeId e_w = edge_between(v, ctx.w);
        ctx.xi = fc_.color_of(e_w);

        // the cycle through v_i w, minus v_i, read from w
        std::vector<Vertex> cycle = fc_.path_through(ctx.xi, v);
        ctx.path.assign(cycle.begin() + 1, cycle.end() - 1);
        if (ctx.path.empty() || (ctx.path.front() != ctx.w && ctx.path.back() != ctx.w))
            contradiction(i, "representative " + std::to_string(ctx.w) + " is not an end of its cycle path");
        if (ctx.path.front() != ctx.w)
            std::reverse(ctx.path.begin(), ctx.path.end());
        int reps_on_path = 0;
        for (Vertex x : ctx.path) {
            if (std::find(reps.begin(), reps.end(), x) == reps.end())
                continue;
            ++reps_on_path;
            if (x != ctx.w)
                ctx.w_prime = x;
        }
        if (reps_on_path > 2 || (ctx.w_prime != kNoVertex && ctx.w_prime != ctx.path.back()))
            contradiction(i, "cycle path carries an interior representative");

        try {
            // Case 1: a class where w is isolated in H and v_i is not internal in H
            for (ClassId j = 0; j < t && ctx.eta == kUncolored; ++j)
                if (h_degree(v, ctx.w, j) == 0 && h_degree(v, v, j) != 2)
                    ctx.eta = j;
            if (ctx.eta != kUncolored) {
                ctx.repair_case = 1;
                ++stats_.case1;
                ctx.u = rep_with_color(ctx.eta, ctx.w);
                if (ctx.u != kNoVertex) {
                    fc_.swap_colors(e_w, edge_between(v, ctx.u));
                    ++stats_.case1_swaps;
                } else {
                    fc_.recolor(e_w, ctx.eta);
                }
            } else {
                // Case 2: another class where v_i is isolated in H
                for (ClassId j = 0; j < t && ctx.eta == kUncolored; ++j)
                    if (j != ctx.xi && h_degree(v, v, j) == 0)
                        ctx.eta = j;
                if (ctx.eta != kUncolored) {
                    ctx.repair_case = 2;
                    ++stats_.case2;
                    if (fc_.class_degree(ctx.w, ctx.eta) > 0) {
                        const auto eta_path = fc_.path_through(ctx.eta, ctx.w);
                        const auto at_v = std::find(eta_path.begin(), eta_path.end(), v);
                        if (at_v != eta_path.end()) {
                            // w is an end of eta_path; take v_i's neighbour facing w
                            const bool w_first = eta_path.front() == ctx.w;
                            ctx.u = w_first ? *(at_v - 1) : *(at_v + 1);
                            if (std::find(reps.begin(), reps.end(), ctx.u) == reps.end())
                                contradiction(i, "eta-path neighbour of v_i is not a representative");
                        }
                    }
                    if (ctx.u == kNoVertex)
                        ctx.u = rep_with_color(ctx.eta, ctx.w);
                    if (ctx.u != kNoVertex) {
                        fc_.swap_colors(e_w, edge_between(v, ctx.u));
                        ++stats_.case2_swaps;
                    } else {
                        // only reachable when the budget leaves a C0 class unused
                        if (mode_ == Mode::minimum)
                            contradiction(i, "unused C0 class under the minimum budget");
                        fc_.recolor(e_w, ctx.eta);
                    }
                } else {
                    // Case 3: trade colors with an edge of H
                    ctx.repair_case = 3;
                    ++stats_.case3;
                    if (ord_.k != 2)
                        contradiction(i, "third repair case reached with k=" + std::to_string(ord_.k));
                    const auto w_set = non_representatives(i);
                    if (w_set.empty())
                        contradiction(i, "third repair case with empty W");
                    ctx.u = w_set.front();
                    const EdgeId e_u = edge_between(v, ctx.u);
                    ctx.eta = fc_.color_of(e_u);
                    fc_.swap_colors(e_w, e_u);
                }
            }
        } catch (const FeasibilityError& err) {
            contradiction(i, std::string("repair step infeasible: ") + err.what());
        }

        std::vector<Vertex> next = bad_set(i);
        if (next.size() >= bad.size() || std::find(next.begin(), next.end(), ctx.w) != next.end())
            contradiction(i, "repair case " + std::to_string(ctx.repair_case) + " did not shrink B (" +
                                 std::to_string(bad.size()) + " -> " + std::to_string(next.size()) + ")");
        ++stats_.repair_iterations;
        if (options_.record_repairs)
            repair_log_.push_back(std::move(ctx));
        bad = std::move(next);
        ++iteration;
    }
    phase_ = 3;
}

void LinearForestBuilder::check_touched(int i, Vertex v)
{
    auto check = [&](Vertex x) {
        if (owner_position_[x] > i && fc_.internal_count(x) > 0)
            contradiction(i, "future representative " + std::to_string(x) + " became internal");
    };
    check(v);
    for (const Incidence& inc : g_->incident(v))
        check(inc.neighbor);
    if (fc_.colored_degree(v) != g_->degree(v))
        contradiction(i, "edges at v_i left uncolored");
}

bool LinearForestBuilder::invariant_holds(int i) const
{
    const auto first = std::upper_bound(reps_by_owner_.begin(), reps_by_owner_.end(), i,
                                        [this](int pos, Vertex x) { return pos < owner_position_[x]; });
    return std::all_of(first, reps_by_owner_.end(), [this](Vertex x) { return fc_.internal_count(x) == 0; });
}

void LinearForestBuilder::process_vertex(int i)
{
    if (i != frontier_ || phase_ != 0)
        throw InputError("process_vertex(" + std::to_string(i) + ") out of order; frontier is " +
                         std::to_string(frontier_));
    const Vertex v = ord_.order[i];
    if (g_->degree(v) != delta_) {
        // a degree-1 vertex comes after its neighbour, so G_i = G_{i-1}
        for (const Incidence& inc : g_->incident(v))
            if (ord_.before(v, inc.neighbor))
                contradiction(i, "low-degree vertex precedes its neighbour");
    } else {
        phase_a_add_w_edges(i);
        phase_b_saturated_extension(i);
        repair_monochromatic_cycles(i);
    }
    finish_vertex(i);
}

void LinearForestBuilder::finish_vertex(int i)
{
    if (i != frontier_)
        throw InputError("finish_vertex called out of order");
    const Vertex v = ord_.order[i];
    const bool full = g_->degree(v) == delta_;
    if (phase_ != (full ? 3 : 0))
        throw InputError("finish_vertex called before the repair step");
    if (full)
        check_touched(i, v);
    if (options_.debug_assertions) {
        ++stats_.invariant_scans;
        if (!invariant_holds(i))
            contradiction(i, "future-representative invariant fails on full scan");
    }
    phase_ = 0;
    ++frontier_;
}

void LinearForestBuilder::run()
{
    const int n = static_cast<int>(ord_.order.size());
    while (frontier_ < n)
        process_vertex(frontier_);
}

// ---------------------------------------------------------------------------

Decomposition decompose(const Graph& g, Mode mode, SolverOptions options)
{
    Decomposition out;
    out.mode = mode;
    out.delta = max_degree(g);
    out.k = degeneracy_ordering(g).k;
    out.t = class_budget(out.delta, mode);
    out.edge_class.assign(static_cast<std::size_t>(g.num_edges()), kUncolored);

    const int need = required_delta(out.k, mode);
    if (out.delta < need)
        throw PreconditionError(std::string(to_string(mode)) + " mode requires max degree >= " +
                                std::to_string(need) + " for a " + std::to_string(out.k) +
                                "-degenerate graph, got " + std::to_string(out.delta));
    if (g.num_edges() == 0) {
        out.t = 0;
        out.stats.isolated_vertices = g.num_vertices();
        return out;
    }

    const auto components = connected_components(g);
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<EdgeId> parent_edge(n, kNoEdge);
    std::vector<char> seen(n, 0);
    std::vector<int> used(static_cast<std::size_t>(out.t), 0);

    for (const auto& comp : components) {
        if (comp.size() == 1) {
            ++out.stats.isolated_vertices;
            continue;
        }
        long edges = 0;
        for (Vertex x : comp)
            edges += g.degree(x);
        edges /= 2;
        if (edges == static_cast<long>(comp.size()) - 1) {
            if (!pair_tree(g, comp.front(), out.edge_class, parent_edge, seen, used))
                throw InternalContradiction("tree component contains a cycle");
            ++out.stats.forest_components;
            continue;
        }

        const bool whole = comp.size() == n;
        Subgraph sub;
        if (!whole)
            sub = induced_subgraph(g, comp);
        const Graph& cg = whole ? g : sub.graph;

        const Regularized reg = regularize(cg, out.delta);
        DegeneracyOrdering ord = regular_ordering(reg.graph, out.delta);
        if (out.delta < required_delta(ord.k, mode))
            throw InternalContradiction("component ordering certifies k=" + std::to_string(ord.k) +
                                        " above the global degeneracy");
        SdrAssignment sdr = compute_sdr(reg.graph, ord, out.delta);
        LinearForestBuilder builder(reg.graph, std::move(ord), std::move(sdr), out.t, mode, options);
        builder.run();

        for (EdgeId e = 0; e < cg.num_edges(); ++e) {
            const EdgeId parent = whole ? e : sub.to_parent_edge[e];
            out.edge_class[parent] = builder.coloring().color_of(e);
        }
        out.stats += builder.stats();
        out.stats.added_vertices += reg.graph.num_vertices() - reg.original_vertices;
        ++out.stats.components;
    }

    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (out.edge_class[e] == kUncolored)
            throw InternalContradiction("edge " + std::to_string(e) + " left uncolored");
    return out;
}

} // namespace linarb
