#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linarb/degeneracy.hpp"
#include "linarb/forest_coloring.hpp"
#include "linarb/graph.hpp"
#include "linarb/rng.hpp"
#include "linarb/sdr.hpp"

namespace linarb {

/// minimum: t = ceil(Δ/2) classes, needs Δ >= 2k²-k.
/// lac:     t = ceil((Δ+1)/2) classes, needs Δ >= 2k²-2k.
enum class Mode { minimum, lac };

std::string_view to_string(Mode mode);

int required_delta(int k, Mode mode);
int class_budget(int delta, Mode mode);

/// True when LINARB_DEBUG_ASSERT=1 is set in the environment.
bool debug_assertions_from_env();

struct SolverOptions {
    /// Full rescan of the future-representative invariant after every
    /// vertex. Cheap local checks run regardless.
    bool debug_assertions = debug_assertions_from_env();
    /// Keep a RepairContext for every repair iteration.
    bool record_repairs = false;
    /// Nonzero: single-edge insertions pick a random admissible class and
    /// the saturated-extension palette is shuffled, both seeded from this.
    std::uint64_t palette_seed = 0;
};

struct SolverStats {
    int components = 0;         // components run through the full pipeline
    int forest_components = 0;  // tree components handled by direct pairing
    int isolated_vertices = 0;
    int added_vertices = 0;     // pendants added by regularization
    long lemma1_inserts = 0;
    long saturated_edges = 0;
    long eq2_checks = 0;
    long repair_iterations = 0;
    long case1 = 0;
    long case1_swaps = 0;
    long case2 = 0;
    long case2_swaps = 0;
    long case3 = 0;
    long invariant_scans = 0;
    int max_bad_set = 0;

    SolverStats& operator+=(const SolverStats& other);
};

/// (Δ,1)-regular supergraph. Original vertex and edge ids are preserved;
/// pendant vertices and edges are appended after them.
struct Regularized {
    Graph graph;
    std::vector<char> original_edge;
    Vertex original_vertices = 0;
};

/// Attaches delta - d(v) pendant vertices to every v with 1 < d(v) < delta.
/// Requires no isolated vertices and 2 <= max_degree(g) <= delta.
Regularized regularize(const Graph& g, int delta);
Regularized regularize(const Graph& g);

/// Degeneracy ordering of a (Δ,1)-regular graph with every degree-Δ vertex
/// moved (stably) ahead of every degree-1 vertex. `k` is the resulting
/// left-degree bound.
DegeneracyOrdering regular_ordering(const Graph& g_star, int delta);

/// Colors the uncolored edge xy with a class in which x is isolated and y
/// has degree <= 1 (the smallest one, or a random one when rng is given).
/// Requires 2 d(x) + d(y) <= 2t + 2, degrees counted over colored edges
/// plus xy (PreconditionError
/// otherwise). Only y can become internal in a class.
ClassId lemma1_insert(ForestColoring& fc, Vertex x, Vertex y, SplitMix64* rng = nullptr);

/// Direct partition of a forest: at every vertex the edges are packed two
/// per class, the parent edge's class having one slot left. Needs
/// t >= ceil(Δ/2); throws InputError if g has a cycle.
std::vector<ClassId> forest_pairing(const Graph& forest, int t);

/// One iteration of the monochromatic-cycle repair at the current vertex.
struct RepairContext {
    int position = 0;              // i, index of v_i in the ordering
    Vertex vertex = kNoVertex;     // v_i
    std::vector<Vertex> bad_set;   // B(phi) before the step
    Vertex w = kNoVertex;
    Vertex w_prime = kNoVertex;    // second representative on the cycle, if any
    ClassId xi = kUncolored;
    ClassId eta = kUncolored;
    Vertex u = kNoVertex;          // swap partner, kNoVertex for a plain recolor
    std::vector<Vertex> path;      // the cycle minus v_i, from w
    int repair_case = 0;           // 1, 2 or 3
};

/// Incremental construction over a (Δ,1)-regular graph: vertices are
/// processed in ordering position order, each step coloring the edges from
/// v_i to later vertices while keeping every future representative free of
/// internal class positions.
class LinearForestBuilder {
public:
    LinearForestBuilder(const Graph& g_star, DegeneracyOrdering ord, SdrAssignment sdr, int t, Mode mode,
                        SolverOptions options = {});

    /// Processes position i; must equal frontier().
    void process_vertex(int i);
    void run();

    /// Steps of process_vertex for a degree-Δ vertex, exposed for testing.
    /// They must be called in this order for position frontier(), followed
    /// by finish_vertex.
    void phase_a_add_w_edges(int i);
    void phase_b_saturated_extension(int i);
    void repair_monochromatic_cycles(int i);
    /// Post-step checks; advances the frontier.
    void finish_vertex(int i);

    /// Full scan: no representative owned by a vertex after position i is
    /// internal in any class.
    bool invariant_holds(int i) const;
    /// Representatives w of v_i whose edge v_i w lies on a monochromatic cycle.
    std::vector<Vertex> bad_set(int i) const;
    /// W = N_R(v_i) \ R*(v_i), sorted by id.
    std::vector<Vertex> non_representatives(int i) const;

    int frontier() const { return frontier_; }
    int k() const { return ord_.k; }
    int r() const { return sdr_.r; }
    int delta() const { return delta_; }
    const Graph& graph() const { return *g_; }
    const DegeneracyOrdering& ordering() const { return ord_; }
    const SdrAssignment& sdr() const { return sdr_; }
    const ForestColoring& coloring() const { return fc_; }
    ForestColoring& coloring() { return fc_; }
    const SolverStats& stats() const { return stats_; }
    const std::vector<RepairContext>& repair_log() const { return repair_log_; }

private:
    EdgeId edge_between(Vertex a, Vertex b) const;
    int h_degree(Vertex v, Vertex x, ClassId j) const;
    [[noreturn]] void contradiction(int i, const std::string& what) const;
    void check_touched(int i, Vertex v);

    const Graph* g_;
    DegeneracyOrdering ord_;
    SdrAssignment sdr_;
    Mode mode_;
    SolverOptions options_;
    SplitMix64 palette_rng_;
    int delta_;
    ForestColoring fc_;
    std::vector<int> owner_position_;      // representative -> position of its owner, or -1
    std::vector<Vertex> reps_by_owner_;    // all representatives, by owner position
    int frontier_ = 0;
    int phase_ = 0;
    SolverStats stats_;
    std::vector<RepairContext> repair_log_;
};

struct Decomposition {
    int t = 0;
    int k = 0;
    int delta = 0;
    Mode mode = Mode::minimum;
    std::vector<ClassId> edge_class;  // per edge id of the input graph
    SolverStats stats;
};

/// Partitions E(g) into t linear forests (t per `mode`). Throws
/// PreconditionError when Δ is below the mode's threshold for the exact
/// degeneracy k of g.
Decomposition decompose(const Graph& g, Mode mode, SolverOptions options = {});

} // namespace linarb
