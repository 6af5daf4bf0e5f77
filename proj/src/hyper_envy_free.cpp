#include <hyperfree/hyper_envy_free.hpp>

#include <hyperfree/errors.hpp>
#include <hyperfree/linalg.hpp>

namespace hyperfree {

TargetPoint::TargetPoint(RatVector p) : p_(std::move(p))
{
    if (p_.size() == 0)
        throw PreconditionError("target point is empty");
    for (Index j = 0; j < p_.size(); ++j)
        if (p_(j) <= 0)
            throw PreconditionError("target point entry " + std::to_string(j + 1) + " is not positive");
    if (p_.sum() != 1)
        throw PreconditionError("target point sums to " + to_string(p_.sum()) + ", expected 1");
}

TargetPoint TargetPoint::uniform(Index n)
{
    return TargetPoint(RatVector::Constant(n, Rational(1, n)));
}

RatMatrix TargetPoint::row_matrix() const
{
    return RatVector::Ones(p_.size()) * p_.transpose();
}

GoalMatrix::GoalMatrix(RatMatrix k) : k_(std::move(k))
{
    if (k_.rows() != k_.cols())
        throw DimensionError("goal matrix must be square");
    for (Index i = 0; i < k_.rows(); ++i)
        if (k_.row(i).sum() != 0)
            throw PreconditionError("goal matrix row " + std::to_string(i + 1) + " sums to " +
                                    to_string(k_.row(i).sum()) + ", expected 0");
}

GoalMatrix GoalMatrix::zero(Index n)
{
    return GoalMatrix(RatMatrix::Zero(n, n));
}

GoalMatrix GoalMatrix::super_envy_free(Index n)
{
    if (n < 2)
        throw PreconditionError("super envy-free goal needs at least two players");
    RatMatrix k = RatMatrix::Constant(n, n, Rational(-1, n - 1));
    k.diagonal().setOnes();
    return GoalMatrix(std::move(k));
}

bool GoalMatrix::is_zero() const
{
    return hyperfree::is_zero(k_);
}

ProperReport is_proper(const RatMatrix& k, const std::vector<RatVector>& relations)
{
    if (k.rows() != k.cols())
        throw DimensionError("goal matrix must be square");
    ProperReport report;
    for (Index i = 0; i < k.rows(); ++i)
        if (k.row(i).sum() != 0) {
            report.proper = false;
            report.bad_row = i;
            report.message = "row " + std::to_string(i + 1) + " sums to " + to_string(k.row(i).sum());
            return report;
        }
    for (std::size_t a = 0; a < relations.size(); ++a) {
        const RatVector& lambda = relations[a];
        if (lambda.size() != k.rows())
            throw DimensionError("relation has " + std::to_string(lambda.size()) + " entries, goal matrix has " +
                                 std::to_string(k.rows()) + " rows");
        const RatVector image = k.transpose() * lambda;
        for (Index j = 0; j < image.size(); ++j)
            if (image(j) != 0) {
                report.proper = false;
                report.bad_relation = std::make_pair(static_cast<Index>(a), j);
                report.message = "relation " + std::to_string(a + 1) + " does not annihilate column " +
                                 std::to_string(j + 1) + " (gives " + to_string(image(j)) + ")";
                return report;
            }
    }
    return report;
}

ProperReport is_proper(const GoalMatrix& k, const std::vector<RatVector>& relations)
{
    return is_proper(k.matrix(), relations);
}

DeltaBound delta_bound(const RatMatrix& g_plus, const GoalMatrix& k, const TargetPoint& p)
{
    if (g_plus.rows() != k.size() || g_plus.cols() != k.size() || p.size() != k.size())
        throw DimensionError("delta_bound operands disagree on the player count");
    DeltaBound out{max_abs_entry(RatMatrix(g_plus * k.matrix())), std::nullopt};
    if (out.max_abs_entry != 0)
        out.value = p.min() / out.max_abs_entry;
    return out;
}

Enclosure<Rational> corollary_bound(const RatMatrix& g, const GoalMatrix& k, const TargetPoint& p,
                                    const Rational& tol)
{
    if (g.rows() != k.size() || g.cols() != k.size() || p.size() != k.size())
        throw DimensionError("corollary_bound operands disagree on the player count");
    if (rank(g) < g.rows())
        throw SingularMatrixError("corollary bound needs linearly independent measures");
    if (k.is_zero())
        throw PreconditionError("corollary bound needs a nonzero goal matrix");

    const Enclosure<Rational> sigma = smallest_eigenvalue(g, tol);
    const Rational factor = p.min() / (Rational(k.size()) * max_abs_entry(k.matrix()));
    return {sigma.lo * factor, sigma.hi * factor};
}

Rational default_tolerance()
{
    return Rational(Integer(1), Integer(1) << 40);
}

bool is_row_stochastic(const RatMatrix& m)
{
    for (Index i = 0; i < m.rows(); ++i) {
        if (m.row(i).sum() != 1)
            return false;
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) < 0)
                return false;
    }
    return true;
}

HyperFreeCertificate stochastic_factor(const RatMatrix& g, const RatMatrix& g_plus, const GoalMatrix& k,
                                       const TargetPoint& p, const Rational& delta)
{
    const Index n = k.size();
    if (g.rows() != n || g.cols() != n || g_plus.rows() != n || g_plus.cols() != n || p.size() != n)
        throw DimensionError("stochastic_factor operands disagree on the player count");
    if (delta < 0)
        throw PreconditionError("delta must be nonnegative");
    const ProperReport proper = is_proper(k, kernel_basis(g));
    if (!proper)
        throw ImproperGoalError(proper.message);

    HyperFreeCertificate cert{delta, RatMatrix(), p.row_matrix() + k.matrix() * delta};
    cert.stochastic = g_plus * cert.target;

    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (cert.stochastic(i, j) < 0)
                throw DeltaTooLargeError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         ") of G+(P + delta K) is " + to_string(cert.stochastic(i, j)) +
                                         " at delta = " + to_string(delta));
    if (!is_row_stochastic(cert.stochastic))
        throw Error("internal: G+(P + delta K) rows do not sum to 1");
    if (RatMatrix(g * cert.stochastic) != cert.target)
        throw Error("internal: G G+ (P + delta K) differs from P + delta K");
    return cert;
}

bool necessary_condition_check(const RatMatrix& m, const Rational& delta, const std::vector<RatVector>& relations)
{
    if (delta <= 0)
        throw PreconditionError("delta must be positive");
    if (m.rows() != m.cols())
        throw DimensionError("sharing matrix must be square");
    if (!is_row_stochastic(m))
        throw PreconditionError("matrix is not a sharing matrix (rows must be nonnegative and sum to 1)");
    const Index n = m.rows();
    const RatMatrix k = (m - RatMatrix::Constant(n, n, Rational(1, n))) / delta;
    return is_proper(k, relations).proper;
}

} // namespace hyperfree
