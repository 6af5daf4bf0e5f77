#ifndef HYPERFREE_PROBLEM_IO_HPP
#define HYPERFREE_PROBLEM_IO_HPP

// JSON problem, partition and report files. Every number is an exact
// rational written as a string ("455/1536", "-3", "0"); plain JSON integers
// are also read, floating-point literals are rejected.
//
// Problem file:
//   {
//     "players": 3,
//     "densities": [ {"breakpoints": ["0", "1/10", "1"], "values": ["10", "0"]}, ... ],
//     "p": ["1/3", "1/3", "1/3"],                       (optional)
//     "K": [["1", "0", "-1"], ...],                     (optional)
//     "R": [[">", "=", "<"], ...],                      (optional)
//     "delta": "1/6" | "max"                            (optional)
//   }
//
// Partition file (a solve report is also accepted, it has the same key):
//   { "partition": [ [["0", "1/20"], ["1/10", "7/20"]], ... ] }

#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/measures.hpp>
#include <hyperfree/partition.hpp>
#include <hyperfree/relation_solver.hpp>

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfree {

using json = nlohmann::ordered_json;

struct ProblemFile {
    Index players = 0;
    std::vector<StepDensity> densities;
    std::optional<TargetPoint> p;
    std::optional<GoalMatrix> k;
    std::optional<RelationMatrix> r;
    std::optional<DeltaMode> delta;
};

/// Throws ParseError naming the offending field (e.g. "densities[0].values[1]").
ProblemFile parse_problem(const json& doc);
/// Parses text; syntax errors carry line and column.
ProblemFile read_problem(std::string_view text);
json to_json(const ProblemFile& problem);

Partition parse_partition(const json& doc);
Partition read_partition(std::string_view text);

json parse_document(std::string_view text);

json to_json(const Rational& x);
json to_json(const RatVector& v);
json to_json(const RatMatrix& m);
json to_json(const RelationMatrix& r);
json to_json(const Interval& iv);
json to_json(const Partition& part);

Rational rational_field(const json& node, const std::string& path);
RatMatrix matrix_field(const json& node, const std::string& path);

} // namespace hyperfree

#endif // HYPERFREE_PROBLEM_IO_HPP
