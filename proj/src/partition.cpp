#include <hyperfree/partition.hpp>

#include <hyperfree/errors.hpp>
#include <hyperfree/linalg.hpp>
#include <hyperfree/simplex.hpp>

#include <algorithm>
#include <string>

namespace hyperfree {

namespace {

std::string show(const Interval& iv)
{
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

std::vector<Interval> normalized_pieces(std::vector<Interval> pieces)
{
    std::erase_if(pieces, [](const Interval& iv) { return iv.lo == iv.hi; });
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (Interval& iv : pieces) {
        if (!merged.empty() && merged.back().hi == iv.lo)
            merged.back().hi = iv.hi;
        else
            merged.push_back(std::move(iv));
    }
    return merged;
}

} // namespace

WeightSystem::WeightSystem(RatMatrix alpha) : alpha_(std::move(alpha))
{
    for (Index a = 0; a < alpha_.cols(); ++a) {
        if (alpha_.col(a).sum() != 1)
            throw PreconditionError("weights on atom " + std::to_string(a + 1) + " sum to " +
                                    to_string(alpha_.col(a).sum()) + ", expected 1");
        for (Index j = 0; j < alpha_.rows(); ++j)
            if (alpha_(j, a) < 0)
                throw PreconditionError("negative weight for player " + std::to_string(j + 1) + " on atom " +
                                        std::to_string(a + 1));
    }
}

WeightSystem WeightSystem::constant(const RatVector& shares, Index atoms)
{
    return WeightSystem(shares * RatVector::Ones(atoms).transpose());
}

Partition::Partition(std::vector<std::vector<Interval>> pieces)
{
    for (auto& list : pieces) {
        for (const Interval& iv : list)
            if (iv.lo > iv.hi)
                throw PartitionError("interval " + show(iv) + " has lo > hi");
        pieces_.push_back(normalized_pieces(std::move(list)));
    }
}

void check_partition(const Partition& part)
{
    struct Owned {
        Interval iv;
        Index player;
    };
    std::vector<Owned> all;
    for (Index j = 0; j < part.players(); ++j)
        for (const Interval& iv : part.pieces(j)) {
            if (iv.lo < 0 || iv.hi > 1)
                throw PartitionError("interval " + show(iv) + " of player " + std::to_string(j + 1) +
                                     " leaves [0,1]");
            all.push_back({iv, j});
        }
    std::sort(all.begin(), all.end(), [](const Owned& a, const Owned& b) { return a.iv.lo < b.iv.lo; });

    Rational cursor = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Interval& iv = all[k].iv;
        if (iv.lo > cursor)
            throw PartitionError("gap " + show(Interval{cursor, iv.lo}) + " is not assigned");
        if (iv.lo < cursor)
            throw PartitionError("interval " + show(iv) + " of player " + std::to_string(all[k].player + 1) +
                                 " overlaps " + show(all[k - 1].iv) + " of player " +
                                 std::to_string(all[k - 1].player + 1));
        cursor = iv.hi;
    }
    if (cursor < 1)
        throw PartitionError("gap " + show(Interval{cursor, Rational(1)}) + " is not assigned");
}

Partition build_from_weights(const MeasureProfile& profile, const WeightSystem& w)
{
    if (w.players() != profile.players() || w.atoms() != profile.atom_count())
        throw DimensionError("weight system is " + std::to_string(w.players()) + "x" + std::to_string(w.atoms()) +
                             ", profile has " + std::to_string(profile.players()) + " players and " +
                             std::to_string(profile.atom_count()) + " atoms");

    std::vector<std::vector<Interval>> pieces(static_cast<std::size_t>(w.players()));
    for (Index a = 0; a < profile.atom_count(); ++a) {
        const Interval& atom = profile.atom(a);
        Rational cursor = atom.lo;
        for (Index j = 0; j < w.players(); ++j) {
            if (w.alpha()(j, a) == 0)
                continue;
            // The last nonzero piece ends exactly at atom.hi since the weights sum to 1.
            const Rational end = cursor + w.alpha()(j, a) * atom.length();
            pieces[static_cast<std::size_t>(j)].push_back({cursor, end});
            cursor = end;
        }
    }
    return Partition(std::move(pieces));
}

AlphaSolution solve_alpha(const MeasureProfile& profile, const GoalMatrix& k, const TargetPoint& p,
                          const DeltaMode& mode)
{
    const Index n = profile.players();
    const Index atoms = profile.atom_count();
    if (k.size() != n || p.size() != n)
        throw DimensionError("goal matrix / target point do not match the " + std::to_string(n) + " players");

    const bool maximize = std::holds_alternative<MaximizeDelta>(mode);
    if (maximize && k.is_zero())
        return {WeightSystem::constant(p.values(), atoms), std::nullopt};

    // Variables: alpha_{j,I} at j*atoms + I, then delta when maximizing.
    const Index alpha_vars = n * atoms;
    const Index vars = alpha_vars + (maximize ? 1 : 0);
    const Index rows = atoms + n * n;
    const Rational fixed = maximize ? Rational(0) : std::get<FixedDelta>(mode).delta;

    LpProblem<Rational> lp;
    lp.sense = Sense::Maximize;
    lp.objective = RatVector::Zero(vars);
    if (maximize)
        lp.objective(alpha_vars) = 1;
    lp.constraints = RatMatrix::Zero(rows, vars);
    lp.rhs = RatVector::Zero(rows);

    for (Index a = 0; a < atoms; ++a) {
        for (Index j = 0; j < n; ++j)
            lp.constraints(a, j * atoms + a) = 1;
        lp.rhs(a) = 1;
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const Index row = atoms + i * n + j;
            for (Index a = 0; a < atoms; ++a)
                lp.constraints(row, j * atoms + a) = profile.atom_measures()(i, a);
            if (maximize) {
                lp.constraints(row, alpha_vars) = -k(i, j);
                lp.rhs(row) = p[j];
            } else {
                lp.rhs(row) = p[j] + k(i, j) * fixed;
            }
        }

    const LpOutcome<Rational> res = simplex_solve(lp);
    if (res.status == LpStatus::Infeasible)
        throw InfeasibleError(maximize ? std::string("no weight system realizes P + delta K for any delta >= 0")
                                       : "no weight system realizes P + delta K at delta = " + to_string(fixed));
    if (res.status == LpStatus::Unbounded)
        throw Error("internal: delta unbounded for a nonzero goal matrix");

    RatMatrix alpha(n, atoms);
    for (Index j = 0; j < n; ++j)
        for (Index a = 0; a < atoms; ++a)
            alpha(j, a) = res.witness(j * atoms + a);
    for (Index a = 0; a < atoms; ++a)
        if (profile.is_null_atom(a)) {
            alpha.col(a).setZero();
            alpha(0, a) = 1;
        }
    return {WeightSystem(std::move(alpha)), maximize ? res.value : fixed};
}

WeightSystem theorem1_weights(const MeasureProfile& profile, const HyperFreeCertificate& cert)
{
    const Index n = profile.players();
    RatMatrix alpha(n, profile.atom_count());
    for (Index a = 0; a < profile.atom_count(); ++a) {
        if (profile.is_null_atom(a)) {
            alpha.col(a).setZero();
            alpha(0, a) = 1;
            continue;
        }
        alpha.col(a) = cert.stochastic.transpose() * rn_weights(profile, a);
    }
    return WeightSystem(std::move(alpha));
}

Partition build_via_theorem1(const MeasureProfile& profile, const GoalMatrix& k, const TargetPoint& p,
                             const Rational& delta)
{
    const RatMatrix g = gram_matrix(profile);
    const RatMatrix g_plus = pseudo_inverse(g);
    const HyperFreeCertificate cert = stochastic_factor(g, g_plus, k, p, delta);
    return build_from_weights(profile, theorem1_weights(profile, cert));
}

} // namespace hyperfree
