#include <hyperfree/problem_io.hpp>

#include <hyperfree/errors.hpp>

namespace hyperfree {

namespace {

std::string at(const std::string& path, std::size_t k)
{
    return path + "[" + std::to_string(k) + "]";
}

const json& array_field(const json& node, const std::string& path)
{
    if (!node.is_array())
        throw ParseError(path + ": expected an array");
    return node;
}

RatVector vector_field(const json& node, const std::string& path)
{
    const json& arr = array_field(node, path);
    RatVector v(static_cast<Index>(arr.size()));
    for (std::size_t k = 0; k < arr.size(); ++k)
        v(static_cast<Index>(k)) = rational_field(arr[k], at(path, k));
    return v;
}

std::vector<Rational> list_field(const json& node, const std::string& path)
{
    const RatVector v = vector_field(node, path);
    return {v.begin(), v.end()};
}

template <typename F>
auto rethrow_as_parse(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

Rational rational_field(const json& node, const std::string& path)
{
    if (node.is_number_integer())
        return Rational(node.get<long long>());
    if (node.is_number_float())
        throw ParseError(path + ": floating-point number " + node.dump() + " is not exact; write it as \"p/q\"");
    if (!node.is_string())
        throw ParseError(path + ": expected a rational string");
    try {
        return parse_rational(node.get<std::string>());
    } catch (const ParseError&) {
        throw ParseError(path + ": malformed rational '" + node.get<std::string>() + "'");
    }
}

RatMatrix matrix_field(const json& node, const std::string& path)
{
    const json& rows = array_field(node, path);
    const auto r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(array_field(rows[0], at(path, 0)).size());
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RatVector row = vector_field(rows[i], at(path, i));
        if (row.size() != c)
            throw ParseError(at(path, i) + ": expected " + std::to_string(c) + " entries, got " +
                             std::to_string(row.size()));
        m.row(static_cast<Index>(i)) = row.transpose();
    }
    return m;
}

json parse_document(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

ProblemFile parse_problem(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("problem file must be a JSON object");
    ProblemFile out;

    if (!doc.contains("players") || !doc["players"].is_number_integer() || doc["players"].get<long long>() < 1)
        throw ParseError("players: expected a positive integer");
    out.players = doc["players"].get<Index>();

    if (!doc.contains("densities"))
        throw ParseError("densities: missing");
    const json& dens = array_field(doc["densities"], "densities");
    if (static_cast<Index>(dens.size()) != out.players)
        throw ParseError("densities: expected " + std::to_string(out.players) + " entries, got " +
                         std::to_string(dens.size()));
    for (std::size_t k = 0; k < dens.size(); ++k) {
        const std::string path = at("densities", k);
        if (!dens[k].is_object() || !dens[k].contains("breakpoints") || !dens[k].contains("values"))
            throw ParseError(path + ": expected an object with breakpoints and values");
        auto bps = list_field(dens[k]["breakpoints"], path + ".breakpoints");
        auto vals = list_field(dens[k]["values"], path + ".values");
        out.densities.push_back(rethrow_as_parse(path, [&] { return StepDensity(std::move(bps), std::move(vals)); }));
    }

    if (doc.contains("p")) {
        RatVector p = vector_field(doc["p"], "p");
        if (p.size() != out.players)
            throw ParseError("p: expected " + std::to_string(out.players) + " entries");
        out.p = rethrow_as_parse("p", [&] { return TargetPoint(std::move(p)); });
    }
    if (doc.contains("K")) {
        RatMatrix k = matrix_field(doc["K"], "K");
        if (k.rows() != out.players || k.cols() != out.players)
            throw ParseError("K: expected a " + std::to_string(out.players) + "x" + std::to_string(out.players) +
                             " matrix");
        out.k = rethrow_as_parse("K", [&] { return GoalMatrix(std::move(k)); });
    }
    if (doc.contains("R")) {
        const json& rows = array_field(doc["R"], "R");
        if (static_cast<Index>(rows.size()) != out.players)
            throw ParseError("R: expected " + std::to_string(out.players) + " rows");
        RelationMatrix r(out.players);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const json& row = array_field(rows[i], at("R", i));
            if (static_cast<Index>(row.size()) != out.players)
                throw ParseError(at("R", i) + ": expected " + std::to_string(out.players) + " entries");
            for (std::size_t j = 0; j < row.size(); ++j) {
                const std::string path = at(at("R", i), j);
                if (!row[j].is_string() || row[j].get<std::string>().size() != 1)
                    throw ParseError(path + ": expected one of \"<\", \"=\", \">\"");
                r(static_cast<Index>(i), static_cast<Index>(j)) =
                    rethrow_as_parse(path, [&] { return relation_from_char(row[j].get<std::string>()[0]); });
            }
        }
        out.r = std::move(r);
    }
    if (doc.contains("delta")) {
        const json& d = doc["delta"];
        if (d.is_string() && d.get<std::string>() == "max") {
            out.delta = MaximizeDelta{};
        } else {
            const Rational v = rational_field(d, "delta");
            if (v < 0)
                throw ParseError("delta: must be nonnegative");
            out.delta = FixedDelta{v};
        }
    }
    return out;
}

ProblemFile read_problem(std::string_view text)
{
    return parse_problem(parse_document(text));
}

json to_json(const Rational& x)
{
    return to_string(x);
}

json to_json(const RatVector& v)
{
    json arr = json::array();
    for (Index k = 0; k < v.size(); ++k)
        arr.push_back(to_string(v(k)));
    return arr;
}

json to_json(const RatMatrix& m)
{
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i)
        rows.push_back(to_json(RatVector(m.row(i).transpose())));
    return rows;
}

json to_json(const RelationMatrix& r)
{
    json rows = json::array();
    for (Index i = 0; i < r.size(); ++i) {
        json row = json::array();
        for (Index j = 0; j < r.size(); ++j)
            row.push_back(std::string(1, to_char(r(i, j))));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Interval& iv)
{
    return json::array({to_string(iv.lo), to_string(iv.hi)});
}

json to_json(const Partition& part)
{
    json players = json::array();
    for (Index j = 0; j < part.players(); ++j) {
        json pieces = json::array();
        for (const Interval& iv : part.pieces(j))
            pieces.push_back(to_json(iv));
        players.push_back(std::move(pieces));
    }
    return players;
}

json to_json(const ProblemFile& problem)
{
    json doc;
    doc["players"] = problem.players;
    json dens = json::array();
    for (const StepDensity& d : problem.densities) {
        json entry;
        entry["breakpoints"] = json::array();
        for (const Rational& b : d.breakpoints())
            entry["breakpoints"].push_back(to_string(b));
        entry["values"] = json::array();
        for (const Rational& v : d.values())
            entry["values"].push_back(to_string(v));
        dens.push_back(std::move(entry));
    }
    doc["densities"] = std::move(dens);
    if (problem.p)
        doc["p"] = to_json(problem.p->values());
    if (problem.k)
        doc["K"] = to_json(problem.k->matrix());
    if (problem.r)
        doc["R"] = to_json(*problem.r);
    if (problem.delta) {
        if (std::holds_alternative<MaximizeDelta>(*problem.delta))
            doc["delta"] = "max";
        else
            doc["delta"] = to_string(std::get<FixedDelta>(*problem.delta).delta);
    }
    return doc;
}

Partition parse_partition(const json& doc)
{
    if (!doc.is_object() || !doc.contains("partition"))
        throw ParseError("partition file must be an object with a \"partition\" array");
    const json& players = array_field(doc["partition"], "partition");
    std::vector<std::vector<Interval>> pieces;
    for (std::size_t j = 0; j < players.size(); ++j) {
        const json& list = array_field(players[j], at("partition", j));
        std::vector<Interval> mine;
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string path = at(at("partition", j), k);
            const json& pair = array_field(list[k], path);
            if (pair.size() != 2)
                throw ParseError(path + ": expected [lo, hi]");
            Interval iv{rational_field(pair[0], path + "[0]"), rational_field(pair[1], path + "[1]")};
            if (iv.lo > iv.hi)
                throw ParseError(path + ": lo exceeds hi");
            mine.push_back(std::move(iv));
        }
        pieces.push_back(std::move(mine));
    }
    return Partition(std::move(pieces));
}

Partition read_partition(std::string_view text)
{
    return parse_partition(parse_document(text));
}

} // namespace hyperfree
