#ifndef HYPERFREE_VERIFIER_HPP
#define HYPERFREE_VERIFIER_HPP

#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/measures.hpp>
#include <hyperfree/partition.hpp>
#include <hyperfree/rational.hpp>
#include <hyperfree/relation_solver.hpp>

#include <optional>

namespace hyperfree {

/// M = (mu_i(X_j)): nonnegative with unit row sums.
class SharingMatrix {
public:
    /// Throws PreconditionError unless m is square and row stochastic.
    explicit SharingMatrix(RatMatrix m);

    const RatMatrix& matrix() const { return m_; }
    Index size() const { return m_.rows(); }
    const Rational& operator()(Index i, Index j) const { return m_(i, j); }

private:
    RatMatrix m_;
};

/// Validates the partition (check_partition) and sums measures over each
/// player's pieces.
SharingMatrix sharing_matrix(const MeasureProfile& profile, const Partition& part);

struct FairnessOptions {
    std::optional<GoalMatrix> k;
    std::optional<TargetPoint> p;    // defaults to uniform where needed
    std::optional<Rational> delta;   // when set, the recovered delta must equal it
    std::optional<RelationMatrix> r;
};

struct HyperEnvyFreeCheck {
    GoalMatrix k;
    TargetPoint p;
    bool holds = false;
    // delta with M = P + delta K, when one exists. Empty when K = 0 (any
    // delta fits if M = P) or when no single delta fits.
    std::optional<Rational> delta;
    bool delta_unconstrained = false;
};

struct RelationCheck {
    RelationMatrix r;
    TargetPoint p;
    bool holds = false;
};

struct FairnessReport {
    bool proportional = false;    // m_ii >= 1/n
    bool exact_division = false;  // m_ij == 1/n
    bool equitable = false;       // m_ii == m_jj
    bool envy_free = false;       // m_ii >= m_ij
    bool super_envy_free = false; // m_ii > 1/n > m_ij for j != i
    std::optional<HyperEnvyFreeCheck> hyper_envy_free;
    std::optional<RelationCheck> relation_satisfied;
    Rational rawlsian_distance;
};

FairnessReport check_fairness(const SharingMatrix& m, const FairnessOptions& opts = {});

/// max_i sum_j |m_ij - [i == j]|; 1 - d is a welfare level.
Rational rawlsian_distance(const SharingMatrix& m);

} // namespace hyperfree

#endif // HYPERFREE_VERIFIER_HPP
