// hyperfree: exact hyper envy-free divisions of [0,1] for step densities.
//
//   hyperfree gram   --input problem.json [--output report.json] [--tol 1/1099511627776]
//   hyperfree solve  --input problem.json [--output report.json] [--route lp|theorem1]
//   hyperfree verify --input problem.json --partition part.json [--require envy_free,...]

#include <hyperfree/commands.hpp>
#include <hyperfree/errors.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw hyperfree::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hyperfree::ProblemFile load_problem(const std::string& path)
{
    try {
        return hyperfree::read_problem(slurp(path));
    } catch (const hyperfree::ParseError& e) {
        std::string msg = e.what();
        const std::string prefix = "parse error: ";
        if (msg.starts_with(prefix))
            msg.erase(0, prefix.size());
        throw hyperfree::ParseError(path + ": " + msg);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact hyper envy-free fair division of [0,1] with piecewise-constant densities"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string partition_path;
    std::string tol_text = "1/1099511627776";
    std::string route_text = "lp";
    std::vector<std::string> require;
    bool print_json = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", input, "problem file (JSON)")->required();
        sub->add_option("--output,-o", output, "write the JSON report here");
        sub->add_option("--tol", tol_text, "enclosure width for the corollary bound (rational)");
        sub->add_flag("--json", print_json, "print the JSON report instead of the summary");
    };
    CLI::App* gram = app.add_subcommand("gram", "Gram matrix, measure relations, pseudo-inverse and bounds");
    common(gram);
    CLI::App* solve = app.add_subcommand("solve", "decide a relation matrix and/or build a hyper envy-free partition");
    common(solve);
    solve->add_option("--route", route_text, "construction route: lp or theorem1")
        ->check(CLI::IsMember({"lp", "theorem1"}));
    CLI::App* verify = app.add_subcommand("verify", "audit a partition against the problem");
    common(verify);
    verify->add_option("--partition,-p", partition_path, "partition file (JSON)")->required();
    verify->add_option("--require", require, "predicates that must hold")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hyperfree::kExitInvalidInput;
    }

    try {
        const hyperfree::ProblemFile problem = load_problem(input);
        const hyperfree::Rational tol = hyperfree::parse_rational(tol_text);
        if (tol <= 0)
            throw hyperfree::ParseError("--tol must be positive");

        hyperfree::CommandResult res;
        if (gram->parsed())
            res = hyperfree::cmd_gram(problem, tol);
        else if (solve->parsed())
            res = hyperfree::cmd_solve(problem, tol,
                                       route_text == "theorem1" ? hyperfree::Route::Theorem1 : hyperfree::Route::Lp);
        else
            res = hyperfree::cmd_verify(problem, hyperfree::read_partition(slurp(partition_path)), require);

        if (!output.empty()) {
            std::ofstream out(output);
            if (!out)
                throw hyperfree::Error("cannot write '" + output + "'");
            out << res.report.dump(2) << "\n";
        }
        if (print_json)
            std::cout << res.report.dump(2) << "\n";
        else
            std::cout << res.summary;
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hyperfree::exit_code_for(e);
    }
}
