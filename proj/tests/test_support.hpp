#ifndef HYPERFREE_TEST_SUPPORT_HPP
#define HYPERFREE_TEST_SUPPORT_HPP

// Fixtures, random generators and brute-force oracles shared by the tests.
// Oracles here deliberately avoid the library's own algorithms.

#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/measures.hpp>
#include <hyperfree/rational.hpp>
#include <hyperfree/relation_solver.hpp>
#include <hyperfree/simplex.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace hyperfree::testing {

inline Rational q(long long n, long long d = 1)
{
    return Rational(n, d);
}

// Three players on [0,1]: 10 on [0,1/10]; 10/9 on [1/10,1]; uniform.
inline std::vector<StepDensity> example_densities()
{
    return {
        StepDensity({q(0), q(1, 10), q(1)}, {q(10), q(0)}),
        StepDensity({q(0), q(1, 10), q(1)}, {q(0), q(10, 9)}),
        StepDensity::uniform(),
    };
}

inline MeasureProfile example_profile()
{
    return common_refinement(example_densities());
}

inline RatMatrix example_gram()
{
    return make_matrix({{"10/11", "0", "1/11"}, {"0", "10/19", "9/19"}, {"1/11", "9/19", "91/209"}});
}

inline GoalMatrix example_goal()
{
    return GoalMatrix(make_matrix({{"1", "0", "-1"}, {"-1/3", "1/9", "2/9"}, {"-2/10", "1/10", "1/10"}}));
}

inline RatMatrix example_sharing()
{
    return make_matrix({{"1/2", "1/3", "1/6"}, {"5/18", "19/54", "10/27"}, {"3/10", "7/20", "7/20"}});
}

inline RelationMatrix example_r1()
{
    return RelationMatrix::from_rows({">=<", ">><", "<<>"});
}

inline RelationMatrix example_r2()
{
    return RelationMatrix::from_rows({">=<", "<>>", "<>>"});
}

// Densities with disjoint supports on n equal cells: G = I.
inline std::vector<StepDensity> disjoint_densities(Index n)
{
    std::vector<Rational> bps;
    for (Index k = 0; k <= n; ++k)
        bps.push_back(q(k, n));
    std::vector<StepDensity> out;
    for (Index i = 0; i < n; ++i) {
        std::vector<Rational> vals(static_cast<std::size_t>(n), q(0));
        vals[static_cast<std::size_t>(i)] = q(n);
        out.emplace_back(bps, vals);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Random generators

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long long integer(long long lo, long long hi)
    {
        return std::uniform_int_distribution<long long>(lo, hi)(rng_);
    }

    Rational rational(long long num_range = 6, long long max_den = 6)
    {
        return q(integer(-num_range, num_range), integer(1, max_den));
    }

    bool coin() { return integer(0, 1) == 1; }

    RatMatrix matrix(Index r, Index c, long long num_range = 4, long long max_den = 4)
    {
        RatMatrix m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                m(i, j) = rational(num_range, max_den);
        return m;
    }

    // Sparse-ish random matrix of a prescribed rank (product of r x k and k x c).
    RatMatrix matrix_of_rank(Index r, Index c, Index k)
    {
        return matrix(r, k, 3, 2) * matrix(k, c, 3, 2);
    }

    // Breakpoints: 0, 1 and a random subset of {1/6, ..., 5/6}.
    std::vector<Rational> breakpoints(long long grid = 6)
    {
        std::vector<Rational> bps{q(0)};
        for (long long k = 1; k < grid; ++k)
            if (integer(0, 2) == 0)
                bps.push_back(q(k, grid));
        bps.push_back(q(1));
        return bps;
    }

    StepDensity density(long long grid = 6)
    {
        for (;;) {
            std::vector<Rational> bps = breakpoints(grid);
            std::vector<Rational> vals;
            for (std::size_t k = 0; k + 1 < bps.size(); ++k)
                vals.push_back(q(integer(0, 4)));
            if (std::any_of(vals.begin(), vals.end(), [](const Rational& v) { return v != 0; }))
                return StepDensity::normalized(std::move(bps), std::move(vals));
        }
    }

    // n random densities; with `dependent`, the last one is a mixture of two
    // earlier ones (or a copy), so the measures satisfy a linear relation.
    std::vector<StepDensity> densities(Index n, bool dependent = false, long long grid = 6)
    {
        std::vector<StepDensity> out;
        for (Index i = 0; i < n; ++i)
            out.push_back(density(grid));
        if (dependent && n >= 2) {
            const auto a = static_cast<std::size_t>(integer(0, n - 2));
            const auto b = static_cast<std::size_t>(integer(0, n - 2));
            out.back() = mixture(out[a], out[b], q(integer(1, 3), 4));
        }
        return out;
    }

    static StepDensity mixture(const StepDensity& x, const StepDensity& y, const Rational& w)
    {
        std::set<Rational> cuts(x.breakpoints().begin(), x.breakpoints().end());
        cuts.insert(y.breakpoints().begin(), y.breakpoints().end());
        std::vector<Rational> bps(cuts.begin(), cuts.end());
        std::vector<Rational> vals;
        for (std::size_t k = 0; k + 1 < bps.size(); ++k)
            vals.push_back(w * x.value_on(bps[k], bps[k + 1]) + (1 - w) * y.value_on(bps[k], bps[k + 1]));
        return StepDensity(std::move(bps), std::move(vals));
    }

    TargetPoint target(Index n)
    {
        RatVector w(n);
        for (Index j = 0; j < n; ++j)
            w(j) = q(integer(1, 5));
        return TargetPoint(w / w.sum());
    }

    // Random K with zero row sums whose columns are annihilated by every relation:
    // columns are projected onto the complement of the relation space.
    GoalMatrix proper_goal(Index n, const std::vector<RatVector>& relations)
    {
        for (;;) {
            RatMatrix k = matrix(n, n, 4, 3);
            for (Index i = 0; i < n; ++i)
                k.row(i).array() -= k.row(i).sum() / Rational(n);
            // Columns must lie in span(relations)^perp. Relations are few and
            // small, so Gram-Schmidt on them suffices.
            std::vector<RatVector> ortho;
            for (const RatVector& l : relations) {
                RatVector v = l;
                for (const RatVector& o : ortho)
                    v -= o * (o.dot(v) / o.dot(o));
                if (v.squaredNorm() != 0)
                    ortho.push_back(v);
            }
            for (Index j = 0; j < n; ++j) {
                RatVector col = k.col(j);
                for (const RatVector& o : ortho)
                    col -= o * (o.dot(col) / o.dot(o));
                k.col(j) = col;
            }
            // K' = (I - Pi) K still has K' e = 0.
            GoalMatrix g(std::move(k));
            if (!g.is_zero())
                return g;
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

// Determinant by cofactor expansion along the first row.
inline Rational det_cofactor(const RatMatrix& m)
{
    const Index n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Rational total = 0;
    for (Index j = 0; j < n; ++j) {
        if (m(0, j) == 0)
            continue;
        RatMatrix minor(n - 1, n - 1);
        for (Index r = 1; r < n; ++r)
            for (Index c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        const Rational term = m(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Characteristic polynomial det(xI - m) by Lagrange interpolation of
// cofactor determinants at x = 0..n. Ascending coefficients.
inline RatVector char_poly_by_interpolation(const RatMatrix& m)
{
    const Index n = m.rows();
    RatVector coeffs = RatVector::Zero(n + 1);
    for (Index s = 0; s <= n; ++s) {
        const Rational xs = s;
        const Rational ys = det_cofactor(RatMatrix(RatMatrix::Identity(n, n) * xs - m));
        // Basis polynomial L_s(x) = prod_{t != s} (x - t) / (s - t).
        RatVector basis = RatVector::Zero(n + 1);
        basis(0) = 1;
        Rational denom = 1;
        Index deg = 0;
        for (Index t = 0; t <= n; ++t) {
            if (t == s)
                continue;
            RatVector next = RatVector::Zero(n + 1);
            for (Index k = 0; k <= deg; ++k) {
                next(k + 1) += basis(k);
                next(k) -= basis(k) * Rational(t);
            }
            basis = next;
            ++deg;
            denom *= Rational(s - t);
        }
        coeffs += basis * (ys / denom);
    }
    return coeffs;
}

// Solves a square system by Cramer's rule; nullopt when singular.
inline std::optional<RatVector> solve_cramer(const RatMatrix& a, const RatVector& b)
{
    const Rational d = det_cofactor(a);
    if (d == 0)
        return std::nullopt;
    RatVector x(a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        RatMatrix aj = a;
        aj.col(j) = b;
        x(j) = det_cofactor(aj) / d;
    }
    return x;
}

// Optimum of a bounded, full-row-rank standard-form LP by enumerating all
// bases; nullopt when no basic feasible solution exists.
inline std::optional<Rational> lp_vertex_oracle(const LpProblem<Rational>& p)
{
    const Index m = p.constraints.rows();
    const Index n = p.constraints.cols();
    std::optional<Rational> best;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<Index> cols;
        for (Index j = 0; j < n; ++j)
            if (pick[static_cast<std::size_t>(j)])
                cols.push_back(j);
        RatMatrix basis(m, m);
        for (Index k = 0; k < m; ++k)
            basis.col(k) = p.constraints.col(cols[static_cast<std::size_t>(k)]);
        const auto xb = solve_cramer(basis, p.rhs);
        if (!xb || (xb->array() < 0).any())
            continue;
        Rational value = 0;
        for (Index k = 0; k < m; ++k)
            value += p.objective(cols[static_cast<std::size_t>(k)]) * (*xb)(k);
        if (!best || (p.sense == Sense::Maximize ? value > *best : value < *best))
            best = value;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

inline bool penrose_identities(const RatMatrix& m, const RatMatrix& mp)
{
    return RatMatrix(m * mp * m) == m && RatMatrix(mp * m * mp) == mp &&
           RatMatrix((m * mp).transpose()) == RatMatrix(m * mp) &&
           RatMatrix((mp * m).transpose()) == RatMatrix(mp * m);
}

} // namespace hyperfree::testing

#endif // HYPERFREE_TEST_SUPPORT_HPP
