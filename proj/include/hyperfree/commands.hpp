#ifndef HYPERFREE_COMMANDS_HPP
#define HYPERFREE_COMMANDS_HPP

// The gram / solve / verify pipelines behind the command-line tool. Each
// returns a JSON report plus the process exit status it maps to.

#include <hyperfree/problem_io.hpp>
#include <hyperfree/verifier.hpp>

#include <exception>
#include <string>
#include <vector>

namespace hyperfree {

enum ExitCode : int {
    kExitOk = 0,           // success, feasible, all requested predicates hold
    kExitInfeasible = 1,   // infeasible, delta too large, or a requested predicate fails
    kExitInvalidInput = 2, // parse errors, invalid densities, improper K, bad partition
    kExitInternal = 3,
};

/// Maps an exception escaping a command to its exit status.
int exit_code_for(const std::exception& e);

enum class Route { Lp, Theorem1 };

struct CommandResult {
    json report;
    std::string summary;
    int exit_code = kExitOk;
};

CommandResult cmd_gram(const ProblemFile& problem, const Rational& tol);
CommandResult cmd_solve(const ProblemFile& problem, const Rational& tol, Route route = Route::Lp);
/// require: extra predicate names (proportional, exact, equitable, envy_free,
/// super_envy_free) that must hold. Hyper envy-freeness is required when the
/// problem has K, the relation check when it has R.
CommandResult cmd_verify(const ProblemFile& problem, const Partition& part, const std::vector<std::string>& require);

json fairness_json(const FairnessReport& rep);

} // namespace hyperfree

#endif // HYPERFREE_COMMANDS_HPP
