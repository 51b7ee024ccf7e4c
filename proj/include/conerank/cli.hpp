#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conerank/cone_generators.hpp"
#include "conerank/field.hpp"

namespace conerank {

enum class OutputFormat { text, json };

struct RunConfig {
    Field field = Field::rationals();
    CaseChoice case_choice = CaseChoice::automatic;
    bool prefer_roots = false;
    std::optional<std::string> witness_path;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::text;
    GroebnerOptions groebner;
};

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
};

CommandResult cmd_info(const std::string& complex_path, const RunConfig& config);
CommandResult cmd_betti(const std::string& complex_path, const RunConfig& config);
/// `new_vertex` empty picks x0, or x0_1, x0_2, ... when taken.
CommandResult cmd_cone(const std::string& complex_path, const std::string& face, const std::string& new_vertex,
                       const RunConfig& config);
CommandResult cmd_construct(const std::string& complex_path, const std::string& face,
                            const std::string& new_vertex, const RunConfig& config);
CommandResult cmd_classify(const std::string& complex_path, const RunConfig& config);
CommandResult cmd_pipeline(const std::string& complex_path, const RunConfig& config);
/// Seeded property suites (cone facets, Lemma 1 recursion, Lemma 2 equivalence).
CommandResult cmd_check(std::size_t count, std::size_t max_vertices, const RunConfig& config);

/// Full command line (args[0] is the program name). Library errors become
/// exit codes: InvalidInput/Undefined -> 2, VerificationFailure -> 1,
/// Inconclusive -> 3.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conerank
