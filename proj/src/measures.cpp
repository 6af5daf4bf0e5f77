#include <hyperfree/measures.hpp>

#include <hyperfree/errors.hpp>
#include <hyperfree/linalg.hpp>

#include <algorithm>
#include <string>

namespace hyperfree {

namespace {

Rational total_mass(const std::vector<Rational>& breakpoints, const std::vector<Rational>& values)
{
    Rational mass = 0;
    for (std::size_t k = 0; k < values.size(); ++k)
        mass += values[k] * (breakpoints[k + 1] - breakpoints[k]);
    return mass;
}

void check_shape(const std::vector<Rational>& breakpoints, const std::vector<Rational>& values)
{
    if (breakpoints.size() < 2)
        throw InvalidDensityError("need at least two breakpoints");
    if (breakpoints.front() != 0 || breakpoints.back() != 1)
        throw InvalidDensityError("breakpoints must start at 0 and end at 1");
    for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k)
        if (breakpoints[k] >= breakpoints[k + 1])
            throw InvalidDensityError("breakpoints must be strictly increasing");
    if (values.size() + 1 != breakpoints.size())
        throw InvalidDensityError("expected " + std::to_string(breakpoints.size() - 1) + " values, got " +
                                  std::to_string(values.size()));
    for (const Rational& v : values)
        if (v < 0)
            throw InvalidDensityError("negative value " + to_string(v));
}

} // namespace

StepDensity::StepDensity(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values))
{
    check_shape(breakpoints_, values_);
    const Rational mass = total_mass(breakpoints_, values_);
    if (mass != 1)
        throw InvalidDensityError("total mass is " + to_string(mass) + ", expected 1");
}

StepDensity StepDensity::normalized(std::vector<Rational> breakpoints, std::vector<Rational> values)
{
    check_shape(breakpoints, values);
    const Rational mass = total_mass(breakpoints, values);
    if (mass == 0)
        throw InvalidDensityError("density has zero mass");
    for (Rational& v : values)
        v /= mass;
    return StepDensity(std::move(breakpoints), std::move(values));
}

StepDensity StepDensity::uniform()
{
    return StepDensity({Rational(0), Rational(1)}, {Rational(1)});
}

Rational StepDensity::value_on(const Rational& a, const Rational& b) const
{
    // Index of the last breakpoint <= a.
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), a);
    const auto k = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
    if (k >= values_.size() || b > breakpoints_[k + 1])
        throw PreconditionError("cell does not lie inside a single piece");
    return values_[k];
}

MeasureProfile common_refinement(std::vector<StepDensity> densities)
{
    if (densities.empty())
        throw InvalidDensityError("profile needs at least one density");

    std::vector<Rational> cuts;
    for (const StepDensity& d : densities)
        cuts.insert(cuts.end(), d.breakpoints().begin(), d.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    MeasureProfile profile;
    const auto n = static_cast<Index>(densities.size());
    const auto atoms = static_cast<Index>(cuts.size() - 1);
    profile.values_.resize(n, atoms);
    profile.atom_measures_.resize(n, atoms);
    for (Index a = 0; a < atoms; ++a) {
        const Interval iv{cuts[static_cast<std::size_t>(a)], cuts[static_cast<std::size_t>(a) + 1]};
        for (Index i = 0; i < n; ++i) {
            profile.values_(i, a) = densities[static_cast<std::size_t>(i)].value_on(iv.lo, iv.hi);
            profile.atom_measures_(i, a) = profile.values_(i, a) * iv.length();
        }
        profile.atoms_.push_back(iv);
    }
    profile.densities_ = std::move(densities);
    return profile;
}

Rational measure_of(const MeasureProfile& profile, Index player, const Interval& iv)
{
    if (player < 0 || player >= profile.players())
        throw PreconditionError("player index " + std::to_string(player) + " out of range");
    if (iv.lo < 0 || iv.hi > 1 || iv.lo > iv.hi)
        throw PreconditionError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "] is not inside [0,1]");

    Rational total = 0;
    for (Index a = 0; a < profile.atom_count(); ++a) {
        const Interval& atom = profile.atom(a);
        const Rational lo = std::max(atom.lo, iv.lo);
        const Rational hi = std::min(atom.hi, iv.hi);
        if (lo < hi)
            total += profile.values()(player, a) * (hi - lo);
    }
    return total;
}

RatVector rn_weights(const MeasureProfile& profile, Index atom)
{
    if (atom < 0 || atom >= profile.atom_count())
        throw PreconditionError("atom index " + std::to_string(atom) + " out of range");
    const RatVector phi = profile.values().col(atom);
    const Rational sum = phi.sum();
    if (sum == 0)
        return RatVector::Zero(phi.size());
    return phi / sum;
}

RatMatrix gram_matrix(const MeasureProfile& profile)
{
    const Index n = profile.players();
    RatMatrix g = RatMatrix::Zero(n, n);
    for (Index a = 0; a < profile.atom_count(); ++a) {
        const Rational mu = profile.total_measure(a);
        if (mu == 0)
            continue;
        const RatVector f = rn_weights(profile, a);
        g += (f * mu) * f.transpose();
    }
    return g;
}

std::vector<RatVector> measure_relations(const MeasureProfile& profile)
{
    return kernel_basis(gram_matrix(profile));
}

} // namespace hyperfree
