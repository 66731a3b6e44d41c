#include "linarb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "linarb/degeneracy.hpp"
#include "linarb/edge_list.hpp"
#include "linarb/errors.hpp"
#include "linarb/generate.hpp"
#include "linarb/oracle.hpp"
#include "linarb/solver.hpp"
#include "linarb/verify.hpp"

namespace linarb {

using Json = nlohmann::ordered_json;

namespace {

int parse_field(const std::string& text, const std::string& field)
{
    try {
        std::size_t used = 0;
        const long value = std::stol(field, &used);
        if (used != field.size() || value < 0 || value > 0x7FFFFFFE)
            throw std::invalid_argument(field);
        return static_cast<int>(value);
    } catch (const std::logic_error&) {
        throw InputError("bad generator spec '" + text + "'");
    }
}

Graph load_graph(const RunConfig& config)
{
    if (config.generator) {
        const GeneratorSpec& s = *config.generator;
        return generate_k_degenerate(s.n, s.k, s.delta_min, config.seed, s.max_degree);
    }
    return parse_edge_list(read_text(config.input), config.one_based);
}

std::vector<std::vector<Edge>> class_lists(const Graph& g, std::span<const ClassId> edge_class, int t)
{
    std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(std::max(t, 0)));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        classes[edge_class[e]].push_back(g.edge(e));
    for (auto& c : classes)
        std::sort(c.begin(), c.end(), [](const Edge& a, const Edge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
    return classes;
}

Json classes_json(const Graph& g, std::span<const ClassId> edge_class, int t)
{
    Json classes = Json::array();
    for (const auto& c : class_lists(g, edge_class, t)) {
        Json list = Json::array();
        for (const Edge& e : c)
            list.push_back({e.u, e.v});
        classes.push_back(std::move(list));
    }
    return classes;
}

Json stats_json(const SolverStats& s)
{
    return {
        {"components", s.components},
        {"forest_components", s.forest_components},
        {"isolated_vertices", s.isolated_vertices},
        {"added_vertices", s.added_vertices},
        {"lemma1_inserts", s.lemma1_inserts},
        {"saturated_edges", s.saturated_edges},
        {"eq2_checks", s.eq2_checks},
        {"repair_iterations", s.repair_iterations},
        {"case1", s.case1},
        {"case1_swaps", s.case1_swaps},
        {"case2", s.case2},
        {"case2_swaps", s.case2_swaps},
        {"case3", s.case3},
        {"invariant_scans", s.invariant_scans},
        {"max_bad_set", s.max_bad_set},
    };
}

Json report_json(const VerificationReport& report)
{
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json item = {{"kind", to_string(v.kind)}, {"vertices", v.vertices}};
        if (v.cls != kUncolored)
            item["class"] = v.cls + 1;
        violations.push_back(std::move(item));
    }
    return {
        {"valid", report.valid},
        {"class_count", report.class_count},
        {"optimal", report.optimal},
        {"violations", std::move(violations)},
    };
}

void write_violations(const VerificationReport& report, std::ostream& out)
{
    for (const Violation& v : report.violations) {
        out << to_string(v.kind);
        if (v.cls != kUncolored)
            out << " class " << v.cls + 1;
        out << " vertices";
        for (Vertex x : v.vertices)
            out << ' ' << x;
        out << '\n';
    }
}

struct Solution {
    int t = 0;
    int k = 0;
    int delta = 0;
    std::string mode;
    std::vector<ClassId> edge_class;
    SolverStats stats;
};

Solution solve(const Graph& g, const RunConfig& config)
{
    SolverOptions options;
    options.debug_assertions = options.debug_assertions || config.debug_assertions;
    options.palette_seed = config.palette_seed;

    if (config.mode == ModeChoice::minimum || config.mode == ModeChoice::lac) {
        const Mode mode = config.mode == ModeChoice::minimum ? Mode::minimum : Mode::lac;
        Decomposition d = decompose(g, mode, options);
        return {d.t, d.k, d.delta, std::string(to_string(mode)), std::move(d.edge_class), d.stats};
    }

    const int k = g.num_edges() == 0 ? 0 : degeneracy_ordering(g).k;
    const int delta = max_degree(g);
    for (Mode mode : {Mode::minimum, Mode::lac}) {
        if (delta >= required_delta(k, mode)) {
            Decomposition d = decompose(g, mode, options);
            return {d.t, d.k, d.delta, std::string(to_string(mode)), std::move(d.edge_class), d.stats};
        }
    }
    if (g.num_edges() <= kAutoOracleEdges) {
        OracleResult o = exact_la(g, config.oracle_budget);
        if (o.status != OracleStatus::exact)
            throw PreconditionError("oracle budget exhausted");
        return {o.la, k, delta, "oracle", std::move(o.witness), {}};
    }
    throw PreconditionError("no mode applies: max degree " + std::to_string(delta) + " is below " +
                            std::to_string(required_delta(k, Mode::lac)) + " for a " + std::to_string(k) +
                            "-degenerate graph and the graph is too large for the oracle");
}

int run_decompose(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const Graph g = load_graph(config);
    const auto start = std::chrono::steady_clock::now();
    Solution s = solve(g, config);

    std::optional<VerificationReport> report;
    if (config.verify_after)
        report = verify_partition(g, std::span<const ClassId>(s.edge_class), s.t);
    const auto stop = std::chrono::steady_clock::now();
    const double wall_ms =
        config.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;

    if (config.format == OutputFormat::json) {
        Json j = {
            {"t", s.t},
            {"k", s.k},
            {"delta", s.delta},
            {"mode", s.mode},
            {"classes", classes_json(g, s.edge_class, s.t)},
            {"verified", report ? Json(report->valid) : Json(nullptr)},
            {"wall_ms", wall_ms},
            {"stats", stats_json(s.stats)},
        };
        out << j.dump() << '\n';
    } else {
        out << format_coloring(g, s.edge_class);
        err << "t " << s.t << " k " << s.k << " delta " << s.delta << " mode " << s.mode;
        if (report)
            err << " verified " << (report->valid ? "yes" : "no");
        err << '\n';
    }
    if (report && !report->valid) {
        err << "error: decomposition failed verification\n";
        write_violations(*report, err);
        return kExitContradiction;
    }
    return kExitOk;
}

int run_oracle(const RunConfig& config, std::ostream& out)
{
    const Graph g = load_graph(config);
    const OracleResult o = exact_la(g, config.oracle_budget);
    const LaBounds b = la_bounds(g);
    const bool exact = o.status == OracleStatus::exact;
    if (config.format == OutputFormat::json) {
        Json j = {
            {"la", o.la},
            {"status", exact ? "exact" : "indeterminate"},
            {"lower", b.lower},
            {"upper", b.upper},
            {"nodes", o.nodes_explored},
            {"classes", exact ? classes_json(g, o.witness, o.la) : Json::array()},
        };
        out << j.dump() << '\n';
    } else {
        out << "la " << o.la << ' ' << (exact ? "exact" : "indeterminate") << '\n';
        out << "nodes " << o.nodes_explored << '\n';
        if (exact)
            out << format_coloring(g, o.witness);
    }
    return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out)
{
    if (config.coloring.empty())
        throw InputError("verify needs a coloring file");
    const Graph g = load_graph(config);
    const std::vector<ColoredEdge> coloring = parse_coloring(read_text(config.coloring));
    int t = config.classes;
    if (t <= 0)
        for (const ColoredEdge& c : coloring)
            t = std::max(t, c.cls + 1);
    const VerificationReport report = verify_partition(g, std::span<const ColoredEdge>(coloring), t);
    if (config.format == OutputFormat::json) {
        out << report_json(report).dump() << '\n';
    } else {
        out << (report.valid ? "valid" : "invalid") << " classes " << report.class_count << " optimal "
            << (report.optimal ? "yes" : "no") << '\n';
        write_violations(report, out);
    }
    return report.valid ? kExitOk : kExitFailure;
}

int run_generate(const RunConfig& config, std::ostream& out)
{
    if (!config.generator)
        throw InputError("generate needs --gen N:K:D");
    out << format_edge_list(load_graph(config));
    return kExitOk;
}

int run_bounds(const RunConfig& config, std::ostream& out)
{
    const Graph g = load_graph(config);
    const LaBounds b = la_bounds(g);
    const int k = g.num_edges() == 0 ? 0 : degeneracy_ordering(g).k;
    const int delta = max_degree(g);
    const char* status = b.upper_status == BoundStatus::proven ? "proven" : "conjectured";
    if (config.format == OutputFormat::json) {
        Json j = {
            {"lower", b.lower},
            {"upper", b.upper},
            {"upper_status", status},
            {"k", k},
            {"delta", delta},
            {"minimum_applies", g.num_edges() > 0 && delta >= required_delta(k, Mode::minimum)},
            {"lac_applies", g.num_edges() > 0 && delta >= required_delta(k, Mode::lac)},
        };
        out << j.dump() << '\n';
    } else {
        out << "lower " << b.lower << " upper " << b.upper << ' ' << status << " k " << k << " delta " << delta
            << '\n';
    }
    return kExitOk;
}

} // namespace

GeneratorSpec parse_generator_spec(const std::string& text)
{
    std::vector<std::string> fields;
    std::stringstream in(text);
    for (std::string f; std::getline(in, f, ':');)
        fields.push_back(f);
    if (fields.size() != 3 && fields.size() != 4)
        throw InputError("bad generator spec '" + text + "', expected N:K:D or N:K:D:CAP");
    GeneratorSpec s;
    s.n = parse_field(text, fields[0]);
    s.k = parse_field(text, fields[1]);
    s.delta_min = parse_field(text, fields[2]);
    if (fields.size() == 4)
        s.max_degree = parse_field(text, fields[3]);
    return s;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::decompose:
            return run_decompose(config, out, err);
        case Command::oracle:
            return run_oracle(config, out);
        case Command::verify:
            return run_verify(config, out);
        case Command::generate:
            return run_generate(config, out);
        case Command::bounds:
            return run_bounds(config, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitContradiction;
    }
    return kExitContradiction;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Linear forest decomposition of k-degenerate graphs"};
    app.require_subcommand(1);

    RunConfig config;
    std::string gen;
    std::string mode = "auto";
    std::string format = "text";
    bool no_timing = false;

    auto input_options = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Edge list file, - for stdin");
        sub->add_option("--gen", gen, "Generate N:K:D[:CAP] instead of reading input");
        sub->add_option("--seed", config.seed, "Generator seed");
        sub->add_flag("--one-based", config.one_based, "Read 1-based DIMACS-style edges");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* decompose = app.add_subcommand("decompose", "Partition the edges into linear forests");
    input_options(decompose);
    decompose->add_option("--mode", mode, "minimum, lac or auto")->check(CLI::IsMember({"minimum", "lac", "auto"}));
    decompose->add_flag("--verify", config.verify_after, "Verify the result");
    decompose->add_flag("--debug-assertions", config.debug_assertions, "Full invariant scans");
    decompose->add_flag("--no-timing", no_timing, "Report wall_ms as 0");
    decompose->add_option("--palette-seed", config.palette_seed, "Shuffle the extension palette (0 = off)");
    decompose->add_option("--budget", config.oracle_budget, "Oracle node budget for small inputs");

    auto* oracle = app.add_subcommand("oracle", "Exact linear arboricity by exhaustive search");
    input_options(oracle);
    oracle->add_option("--budget", config.oracle_budget, "Search node budget");

    auto* verify = app.add_subcommand("verify", "Check a 'u v c' coloring against a graph");
    verify->add_option("input", config.input, "Edge list file")->required();
    verify->add_option("coloring", config.coloring, "Coloring file")->required();
    verify->add_option("--t", config.classes, "Number of classes allowed");
    verify->add_flag("--one-based", config.one_based, "Read 1-based DIMACS-style edges");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* generate = app.add_subcommand("generate", "Write a random k-degenerate graph");
    generate->add_option("--gen", gen, "N:K:D[:CAP]")->required();
    generate->add_option("--seed", config.seed, "Generator seed");

    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the linear arboricity");
    input_options(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitFailure;
    }

    if (*decompose)
        config.command = Command::decompose;
    else if (*oracle)
        config.command = Command::oracle;
    else if (*verify)
        config.command = Command::verify;
    else if (*generate)
        config.command = Command::generate;
    else
        config.command = Command::bounds;

    config.mode = mode == "minimum" ? ModeChoice::minimum : mode == "lac" ? ModeChoice::lac : ModeChoice::automatic;
    config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    config.timing = !no_timing;
    try {
        if (!gen.empty())
            config.generator = parse_generator_spec(gen);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return run(config, out, err);
}

} // namespace linarb
