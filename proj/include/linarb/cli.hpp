#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "linarb/graph.hpp"

namespace linarb {

enum class Command { decompose, oracle, verify, generate, bounds };
enum class ModeChoice { minimum, lac, automatic };
enum class OutputFormat { text, json };

/// "N:K:D" or "N:K:D:CAP", see generate_k_degenerate.
struct GeneratorSpec {
    Vertex n = 0;
    int k = 1;
    int delta_min = 0;
    int max_degree = 0;
};

GeneratorSpec parse_generator_spec(const std::string& text);

struct RunConfig {
    Command command = Command::decompose;
    std::string input = "-";                // edge list path, "-" for stdin
    std::optional<GeneratorSpec> generator; // replaces the input when set
    std::string coloring;                   // verify: "u v c" file
    ModeChoice mode = ModeChoice::automatic;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::text;
    bool verify_after = false;
    bool debug_assertions = false;
    bool one_based = false;
    bool timing = true;
    int classes = 0;                        // verify: t, 0 = largest class used
    std::int64_t oracle_budget = 50'000'000;
    std::uint64_t palette_seed = 0;         // decompose: shuffled saturated extension
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // bad input, unmet precondition, invalid partition
inline constexpr int kExitContradiction = 2; // internal contradiction

/// Graphs with at most this many edges fall back to the oracle in auto mode.
inline constexpr long kAutoOracleEdges = 20;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors exit with kExitFailure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace linarb
