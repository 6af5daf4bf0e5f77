#ifndef HYPERFREE_PARTITION_HPP
#define HYPERFREE_PARTITION_HPP

// Explicit interval partitions of [0,1]. On an atom every density is
// constant, so cutting the atom into pieces of relative length alpha_j gives
// player j exactly the fraction alpha_j of every player's measure of it.

#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/measures.hpp>
#include <hyperfree/rational.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace hyperfree {

/// players x atoms matrix of alpha_{j,I}: nonnegative columns summing to 1.
class WeightSystem {
public:
    explicit WeightSystem(RatMatrix alpha);
    /// alpha_{j,I} = p_j on every atom.
    static WeightSystem constant(const RatVector& shares, Index atoms);

    const RatMatrix& alpha() const { return alpha_; }
    Index players() const { return alpha_.rows(); }
    Index atoms() const { return alpha_.cols(); }

    friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.alpha_ == b.alpha_; }

private:
    RatMatrix alpha_;
};

/// Per player, a sorted list of closed intervals. Adjacent intervals of the
/// same player are merged; empty intervals are never stored.
class Partition {
public:
    explicit Partition(std::vector<std::vector<Interval>> pieces);

    Index players() const { return static_cast<Index>(pieces_.size()); }
    const std::vector<Interval>& pieces(Index player) const { return pieces_[static_cast<std::size_t>(player)]; }
    const std::vector<std::vector<Interval>>& all() const { return pieces_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<Interval>> pieces_;
};

/// Throws PartitionError naming the first overlap or uncovered gap, or an
/// interval outside [0,1].
void check_partition(const Partition& part);

/// Cuts each atom left to right into pieces of length alpha_{j,I} l(I) in
/// player order. Throws DimensionError when w does not match the profile.
Partition build_from_weights(const MeasureProfile& profile, const WeightSystem& w);

struct MaximizeDelta {};
struct FixedDelta {
    Rational delta;
};
using DeltaMode = std::variant<MaximizeDelta, FixedDelta>;

struct AlphaSolution {
    WeightSystem weights;
    // Empty when MaximizeDelta meets K = 0: every delta works.
    std::optional<Rational> delta;
};

/// Solves sum_j alpha_{j,I} = 1, alpha >= 0, sum_I alpha_{j,I} mu_i(I) = p_j + k_ij delta
/// exactly. Mu-null atoms go wholly to the first player.
/// Throws InfeasibleError when no weights exist (e.g. FixedDelta above the maximum).
AlphaSolution solve_alpha(const MeasureProfile& profile, const GoalMatrix& k, const TargetPoint& p,
                          const DeltaMode& mode);

/// Composes the Gram division with S = G+ (P + delta K): on atom I player j
/// gets w_{j,I} = sum_k S_kj f_k(I). Propagates ImproperGoalError and
/// DeltaTooLargeError from stochastic_factor.
Partition build_via_theorem1(const MeasureProfile& profile, const GoalMatrix& k, const TargetPoint& p,
                             const Rational& delta);

/// Weight system used by build_via_theorem1.
WeightSystem theorem1_weights(const MeasureProfile& profile, const HyperFreeCertificate& cert);

} // namespace hyperfree

#endif // HYPERFREE_PARTITION_HPP
