#ifndef HYPERFREE_SIMPLEX_HPP
#define HYPERFREE_SIMPLEX_HPP

// Exact two-phase simplex for standard-form programs
//
//     optimize  c^T x   subject to  A x = b,  x >= 0
//
// on a dense tableau. Bland's rule (lowest eligible index for both entering
// and leaving variable) guarantees termination on degenerate problems.

#include <hyperfree/errors.hpp>
#include <hyperfree/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperfree {

enum class Sense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

template <typename Scalar>
struct LpProblem {
    Sense sense = Sense::Maximize;
    Vector<Scalar> objective;
    Matrix<Scalar> constraints;
    Vector<Scalar> rhs;

    Index variables() const { return objective.size(); }
};

template <typename Scalar>
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Scalar value = 0;          // Optimal only
    Vector<Scalar> witness;    // Optimal: optimal vertex. Unbounded: a feasible point.
    Vector<Scalar> ray;        // Unbounded only: A ray = 0, ray >= 0, objective improves along it.
    Scalar infeasibility = 0;  // Infeasible only: phase-1 optimum (sum of artificials), > 0
};

namespace detail {

template <typename Scalar>
class Tableau {
public:
    // rows: constraints, plus a trailing objective row holding reduced costs
    // of a minimization problem. Last column holds the rhs / -objective value.
    Tableau(Matrix<Scalar> t, std::vector<Index> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

    Index rows() const { return t_.rows() - 1; }
    Index cols() const { return t_.cols() - 1; }
    Matrix<Scalar>& data() { return t_; }
    const Matrix<Scalar>& data() const { return t_; }
    std::vector<Index>& basis() { return basis_; }
    const std::vector<Index>& basis() const { return basis_; }

    void pivot(Index r, Index c)
    {
        const Scalar inv = Scalar(1) / t_(r, c);
        for (Index j = 0; j < t_.cols(); ++j)
            if (t_(r, j) != 0)
                t_(r, j) *= inv;
        for (Index i = 0; i < t_.rows(); ++i) {
            if (i == r || t_(i, c) == 0)
                continue;
            const Scalar factor = t_(i, c);
            for (Index j = 0; j < t_.cols(); ++j)
                if (t_(r, j) != 0)
                    t_(i, j) -= factor * t_(r, j);
        }
        basis_[static_cast<std::size_t>(r)] = c;
    }

    // Runs Bland-rule iterations over columns [0, active). Returns the entering
    // column of an unbounded direction, or -1 once optimal.
    Index optimize(Index active)
    {
        const Index obj = rows();
        for (;;) {
            Index entering = -1;
            for (Index j = 0; j < active; ++j)
                if (t_(obj, j) < 0) {
                    entering = j;
                    break;
                }
            if (entering < 0)
                return -1;

            Index leaving = -1;
            Scalar best_ratio = 0;
            for (Index i = 0; i < obj; ++i) {
                if (t_(i, entering) <= 0)
                    continue;
                const Scalar ratio = t_(i, cols()) / t_(i, entering);
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0)
                return entering;
            pivot(leaving, entering);
        }
    }

    Vector<Scalar> basic_solution(Index n) const
    {
        Vector<Scalar> x = Vector<Scalar>::Zero(n);
        for (Index i = 0; i < rows(); ++i) {
            const Index b = basis_[static_cast<std::size_t>(i)];
            if (b < n)
                x(b) = t_(i, cols());
        }
        return x;
    }

    void drop_row(Index r)
    {
        const Index last = t_.rows() - 1;
        Matrix<Scalar> kept(t_.rows() - 1, t_.cols());
        Index k = 0;
        for (Index i = 0; i <= last; ++i)
            if (i != r)
                kept.row(k++) = t_.row(i);
        t_ = std::move(kept);
        basis_.erase(basis_.begin() + r);
    }

private:
    Matrix<Scalar> t_;
    std::vector<Index> basis_;
};

} // namespace detail

template <typename Scalar>
LpOutcome<Scalar> simplex_solve(const LpProblem<Scalar>& p)
{
    const Index m = p.constraints.rows();
    const Index n = p.constraints.cols();
    if (p.objective.size() != n)
        throw DimensionError("objective has " + std::to_string(p.objective.size()) + " entries, constraints have " +
                             std::to_string(n) + " columns");
    if (p.rhs.size() != m)
        throw DimensionError("rhs has " + std::to_string(p.rhs.size()) + " entries, constraints have " +
                             std::to_string(m) + " rows");

    // Phase 1: columns [x | artificials | rhs], minimize the sum of artificials.
    Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
    std::vector<Index> basis(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) {
        const bool flip = p.rhs(i) < 0;
        for (Index j = 0; j < n; ++j)
            t(i, j) = flip ? Scalar(-p.constraints(i, j)) : p.constraints(i, j);
        t(i, n + m) = flip ? Scalar(-p.rhs(i)) : p.rhs(i);
        t(i, n + i) = 1;
        basis[static_cast<std::size_t>(i)] = n + i;
    }
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j <= n + m; ++j)
            if (j < n || j == n + m)
                t(m, j) -= t(i, j);

    detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
    tab.optimize(n + m);

    LpOutcome<Scalar> out;
    const Scalar phase1 = -tab.data()(tab.rows(), tab.cols());
    if (phase1 > 0) {
        out.status = LpStatus::Infeasible;
        out.infeasibility = phase1;
        return out;
    }

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (Index i = tab.rows(); i-- > 0;) {
        if (tab.basis()[static_cast<std::size_t>(i)] < n)
            continue;
        Index col = -1;
        for (Index j = 0; j < n; ++j)
            if (tab.data()(i, j) != 0) {
                col = j;
                break;
            }
        if (col >= 0)
            tab.pivot(i, col);
        else
            tab.drop_row(i);
    }

    // Phase 2: reduced costs of min (+/-) c^T x over the current basis.
    auto& d = tab.data();
    const Index obj = tab.rows();
    const Index rhs_col = tab.cols();
    d.row(obj).setZero();
    for (Index j = 0; j < n; ++j)
        d(obj, j) = p.sense == Sense::Maximize ? Scalar(-p.objective(j)) : p.objective(j);
    for (Index i = 0; i < obj; ++i) {
        const Index b = tab.basis()[static_cast<std::size_t>(i)];
        const Scalar cb = d(obj, b);
        if (cb == 0)
            continue;
        for (Index j = 0; j <= rhs_col; ++j)
            if (d(i, j) != 0)
                d(obj, j) -= cb * d(i, j);
    }
    // Artificial columns are never allowed back in.
    const Index unbounded_col = tab.optimize(n);

    out.witness = tab.basic_solution(n);
    if (unbounded_col >= 0) {
        out.status = LpStatus::Unbounded;
        out.ray = Vector<Scalar>::Zero(n);
        out.ray(unbounded_col) = 1;
        for (Index i = 0; i < tab.rows(); ++i) {
            const Index b = tab.basis()[static_cast<std::size_t>(i)];
            if (b < n)
                out.ray(b) = -tab.data()(i, unbounded_col);
        }
        return out;
    }
    out.status = LpStatus::Optimal;
    out.value = p.objective.dot(out.witness);
    return out;
}

} // namespace hyperfree

#endif // HYPERFREE_SIMPLEX_HPP
