#ifndef HYPERFREE_MEASURES_HPP
#define HYPERFREE_MEASURES_HPP

// Piecewise-constant probability densities on the cake [0,1], their common
// refinement into atoms, and the Gram matrix of the Radon-Nikodym weights
// f_i = d(mu_i) / d(mu_1 + ... + mu_n).

#include <hyperfree/rational.hpp>

#include <vector>

namespace hyperfree {

struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// phi(x) = values[k] on [breakpoints[k], breakpoints[k+1]].
class StepDensity {
public:
    /// Throws InvalidDensityError unless breakpoints run strictly increasing
    /// from 0 to 1, values are nonnegative and the total mass is exactly 1.
    StepDensity(std::vector<Rational> breakpoints, std::vector<Rational> values);

    /// Rescales values so the total mass becomes 1.
    static StepDensity normalized(std::vector<Rational> breakpoints, std::vector<Rational> values);

    /// Uniform density on [0,1].
    static StepDensity uniform();

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }

    /// Density value on the cell containing the open interval (a, b); the
    /// cell must not straddle a breakpoint.
    Rational value_on(const Rational& a, const Rational& b) const;

    friend bool operator==(const StepDensity&, const StepDensity&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

class MeasureProfile {
public:
    Index players() const { return values_.rows(); }
    Index atom_count() const { return values_.cols(); }

    const std::vector<StepDensity>& densities() const { return densities_; }
    const std::vector<Interval>& atoms() const { return atoms_; }
    const Interval& atom(Index a) const { return atoms_[static_cast<std::size_t>(a)]; }

    /// players x atoms table of density values.
    const RatMatrix& values() const { return values_; }
    /// players x atoms table of mu_i(atom).
    const RatMatrix& atom_measures() const { return atom_measures_; }
    /// mu(atom) = sum_i mu_i(atom).
    Rational total_measure(Index a) const { return atom_measures_.col(a).sum(); }
    bool is_null_atom(Index a) const { return total_measure(a) == 0; }

private:
    friend MeasureProfile common_refinement(std::vector<StepDensity> densities);

    std::vector<StepDensity> densities_;
    std::vector<Interval> atoms_;
    RatMatrix values_;
    RatMatrix atom_measures_;
};

/// Atoms are the cells between consecutive points of the sorted union of all
/// breakpoints. Throws InvalidDensityError on an empty list.
MeasureProfile common_refinement(std::vector<StepDensity> densities);

/// Exact mu_player(iv). Throws PreconditionError unless 0 <= lo <= hi <= 1.
Rational measure_of(const MeasureProfile& profile, Index player, const Interval& iv);

/// (f_1, ..., f_n) on the given atom; the zero vector on a mu-null atom.
RatVector rn_weights(const MeasureProfile& profile, Index atom);

/// G_ij = sum over atoms of f_i f_j mu(atom).
RatMatrix gram_matrix(const MeasureProfile& profile);

/// Basis of the linear relations sum_i lambda_i mu_i = 0, i.e. ker G.
std::vector<RatVector> measure_relations(const MeasureProfile& profile);

} // namespace hyperfree

#endif // HYPERFREE_MEASURES_HPP
