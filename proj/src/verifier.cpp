#include <hyperfree/verifier.hpp>

#include <hyperfree/errors.hpp>

namespace hyperfree {

SharingMatrix::SharingMatrix(RatMatrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw PreconditionError("sharing matrix must be square");
    if (!is_row_stochastic(m_))
        throw PreconditionError("sharing matrix rows must be nonnegative and sum to 1");
}

SharingMatrix sharing_matrix(const MeasureProfile& profile, const Partition& part)
{
    if (part.players() != profile.players())
        throw DimensionError("partition has " + std::to_string(part.players()) + " players, profile has " +
                             std::to_string(profile.players()));
    check_partition(part);
    const Index n = profile.players();
    RatMatrix m = RatMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j)
        for (const Interval& iv : part.pieces(j))
            for (Index i = 0; i < n; ++i)
                m(i, j) += measure_of(profile, i, iv);
    return SharingMatrix(std::move(m));
}

namespace {

HyperEnvyFreeCheck check_hyper(const RatMatrix& m, const GoalMatrix& k, const TargetPoint& p,
                               const std::optional<Rational>& expected)
{
    HyperEnvyFreeCheck out{k, p, false, std::nullopt, false};
    const Index n = m.rows();
    const RatMatrix target = p.row_matrix();
    if (k.is_zero()) {
        out.holds = m == target;
        out.delta_unconstrained = out.holds;
        return out;
    }

    std::optional<Rational> delta;
    for (Index i = 0; i < n && !delta; ++i)
        for (Index j = 0; j < n && !delta; ++j)
            if (k(i, j) != 0)
                delta = (m(i, j) - p[j]) / k(i, j);
    if (m != RatMatrix(target + k.matrix() * *delta))
        return out;
    out.delta = delta;
    out.holds = *delta > 0 && (!expected || *expected == *delta);
    return out;
}

} // namespace

FairnessReport check_fairness(const SharingMatrix& sm, const FairnessOptions& opts)
{
    const RatMatrix& m = sm.matrix();
    const Index n = m.rows();
    const Rational share(1, n);

    FairnessReport rep;
    rep.proportional = true;
    rep.exact_division = true;
    rep.equitable = true;
    rep.envy_free = true;
    rep.super_envy_free = true;
    for (Index i = 0; i < n; ++i) {
        rep.proportional = rep.proportional && m(i, i) >= share;
        rep.equitable = rep.equitable && m(i, i) == m(0, 0);
        rep.super_envy_free = rep.super_envy_free && m(i, i) > share;
        for (Index j = 0; j < n; ++j) {
            rep.exact_division = rep.exact_division && m(i, j) == share;
            rep.envy_free = rep.envy_free && m(i, i) >= m(i, j);
            if (j != i)
                rep.super_envy_free = rep.super_envy_free && m(i, j) < share;
        }
    }

    const TargetPoint p = opts.p ? *opts.p : TargetPoint::uniform(n);
    if (p.size() != n)
        throw DimensionError("target point does not match the sharing matrix");
    if (opts.k) {
        if (opts.k->size() != n)
            throw DimensionError("goal matrix does not match the sharing matrix");
        rep.hyper_envy_free = check_hyper(m, *opts.k, p, opts.delta);
    }
    if (opts.r) {
        if (opts.r->size() != n)
            throw DimensionError("relation matrix does not match the sharing matrix");
        RelationCheck rc{*opts.r, p, true};
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                rc.holds = rc.holds && satisfies(m(i, j) - p[j], (*opts.r)(i, j));
        rep.relation_satisfied = rc;
    }
    rep.rawlsian_distance = rawlsian_distance(sm);
    return rep;
}

Rational rawlsian_distance(const SharingMatrix& sm)
{
    const RatMatrix& m = sm.matrix();
    Rational worst = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        Rational row = 0;
        for (Index j = 0; j < m.cols(); ++j)
            row += abs(i == j ? Rational(m(i, j) - 1) : m(i, j));
        if (row > worst)
            worst = row;
    }
    return worst;
}

} // namespace hyperfree
