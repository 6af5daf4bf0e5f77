#include <hyperfree/relation_solver.hpp>

#include <hyperfree/errors.hpp>
#include <hyperfree/simplex.hpp>

namespace hyperfree {

char to_char(Relation r)
{
    switch (r) {
    case Relation::Less: return '<';
    case Relation::Equal: return '=';
    case Relation::Greater: return '>';
    }
    return '?';
}

Relation relation_from_char(char c)
{
    switch (c) {
    case '<': return Relation::Less;
    case '=': return Relation::Equal;
    case '>': return Relation::Greater;
    default: throw ParseError(std::string("relation must be one of '<', '=', '>', got '") + c + "'");
    }
}

RelationMatrix::RelationMatrix(Index n, Relation fill)
    : n_(n), cells_(static_cast<std::size_t>(n * n), fill)
{
}

RelationMatrix RelationMatrix::from_rows(const std::vector<std::string>& rows)
{
    const auto n = static_cast<Index>(rows.size());
    RelationMatrix r(n);
    for (Index i = 0; i < n; ++i) {
        const std::string& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<Index>(row.size()) != n)
            throw DimensionError("relation row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
        for (Index j = 0; j < n; ++j)
            r(i, j) = relation_from_char(row[static_cast<std::size_t>(j)]);
    }
    return r;
}

bool RelationMatrix::has_strict() const
{
    for (Relation c : cells_)
        if (c != Relation::Equal)
            return true;
    return false;
}

bool satisfies(const Rational& x, Relation r)
{
    switch (r) {
    case Relation::Less: return x < 0;
    case Relation::Equal: return x == 0;
    case Relation::Greater: return x > 0;
    }
    return false;
}

namespace {

// Column layout of the LP: for cell c = i*n + j, k_ij = u_c - v_c with
// u at 2c and v at 2c+1; then t; then one box slack per cell; then one
// strictness slack per strict cell.
struct Layout {
    Index n;
    Index cells() const { return n * n; }
    Index u(Index i, Index j) const { return 2 * (i * n + j); }
    Index v(Index i, Index j) const { return u(i, j) + 1; }
    Index t() const { return 2 * cells(); }
    Index box(Index i, Index j) const { return t() + 1 + i * n + j; }
    Index strict_base() const { return t() + 1 + cells(); }
};

} // namespace

RelationSolution solve_relations(const RelationMatrix& r, const std::vector<RatVector>& relations)
{
    const Index n = r.size();
    for (const RatVector& lambda : relations)
        if (lambda.size() != n)
            throw DimensionError("relation vector has " + std::to_string(lambda.size()) + " entries, expected " +
                                 std::to_string(n));

    RelationSolution out;
    if (!r.has_strict()) {
        out.status = RelationStatus::Feasible;
        out.k = GoalMatrix::zero(n);
        return out;
    }

    const Layout at{n};
    Index strict = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (r(i, j) != Relation::Equal)
                ++strict;
    const Index vars = at.strict_base() + strict;
    const auto rel_count = static_cast<Index>(relations.size());
    const Index rows = n + rel_count * n + at.cells() + at.cells();

    LpProblem<Rational> lp;
    lp.sense = Sense::Maximize;
    lp.objective = RatVector::Zero(vars);
    lp.objective(at.t()) = 1;
    lp.constraints = RatMatrix::Zero(rows, vars);
    lp.rhs = RatVector::Zero(rows);

    Index row = 0;
    for (Index i = 0; i < n; ++i, ++row)
        for (Index j = 0; j < n; ++j) {
            lp.constraints(row, at.u(i, j)) = 1;
            lp.constraints(row, at.v(i, j)) = -1;
        }
    for (const RatVector& lambda : relations)
        for (Index j = 0; j < n; ++j, ++row)
            for (Index i = 0; i < n; ++i) {
                lp.constraints(row, at.u(i, j)) = lambda(i);
                lp.constraints(row, at.v(i, j)) = -lambda(i);
            }
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j, ++row) {
            lp.constraints(row, at.u(i, j)) = 1;
            lp.constraints(row, at.v(i, j)) = 1;
            lp.constraints(row, at.box(i, j)) = 1;
            lp.rhs(row) = 1;
        }
    Index slack = at.strict_base();
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j, ++row) {
            switch (r(i, j)) {
            case Relation::Equal:
                lp.constraints(row, at.u(i, j)) = 1;
                lp.constraints(row, at.v(i, j)) = -1;
                break;
            case Relation::Greater:  // k - t - s = 0
                lp.constraints(row, at.u(i, j)) = 1;
                lp.constraints(row, at.v(i, j)) = -1;
                lp.constraints(row, at.t()) = -1;
                lp.constraints(row, slack++) = -1;
                break;
            case Relation::Less:  // -k - t - s = 0
                lp.constraints(row, at.u(i, j)) = -1;
                lp.constraints(row, at.v(i, j)) = 1;
                lp.constraints(row, at.t()) = -1;
                lp.constraints(row, slack++) = -1;
                break;
            }
        }

    const LpOutcome<Rational> res = simplex_solve(lp);
    if (res.status != LpStatus::Optimal)
        throw Error(std::string("internal: relation LP is ") + to_string(res.status));
    if (res.value <= 0) {
        out.status = RelationStatus::Infeasible;
        out.margin = Rational(0);
        return out;
    }

    RatMatrix k(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            k(i, j) = res.witness(at.u(i, j)) - res.witness(at.v(i, j));
    out.status = RelationStatus::Feasible;
    out.k = GoalMatrix(std::move(k));
    out.margin = res.value;
    return out;
}

bool verify_relation_solution(const RatMatrix& k, const RelationMatrix& r, const std::vector<RatVector>& relations)
{
    if (k.rows() != r.size() || k.cols() != r.size())
        return false;
    if (!is_proper(k, relations))
        return false;
    for (Index i = 0; i < r.size(); ++i)
        for (Index j = 0; j < r.size(); ++j)
            if (!satisfies(k(i, j), r(i, j)))
                return false;
    return true;
}

} // namespace hyperfree
