#ifndef HYPERFREE_HYPER_ENVY_FREE_HPP
#define HYPERFREE_HYPER_ENVY_FREE_HPP

// Existence machinery for hyper envy-free divisions: a partition with
// mu_i(X_j) = p_j + k_ij delta. Given the Gram matrix G and its pseudo-inverse,
// S = G+ (P + delta K) is row stochastic for 0 <= delta <= B and
// G S = P + delta K, which makes P + delta K a sharing matrix.

#include <hyperfree/rational.hpp>
#include <hyperfree/spectrum.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperfree {

/// Target shares p: strictly positive, summing to 1.
class TargetPoint {
public:
    explicit TargetPoint(RatVector p);
    static TargetPoint uniform(Index n);

    const RatVector& values() const { return p_; }
    Index size() const { return p_.size(); }
    const Rational& operator[](Index j) const { return p_(j); }
    Rational min() const { return p_.minCoeff(); }
    /// The matrix P whose rows are all p.
    RatMatrix row_matrix() const;

    friend bool operator==(const TargetPoint& a, const TargetPoint& b) { return a.p_ == b.p_; }

private:
    RatVector p_;
};

/// Square matrix K with zero row sums.
class GoalMatrix {
public:
    explicit GoalMatrix(RatMatrix k);
    static GoalMatrix zero(Index n);
    /// k_ii = 1, k_ij = -1/(n-1): the super envy-free goal.
    static GoalMatrix super_envy_free(Index n);

    const RatMatrix& matrix() const { return k_; }
    Index size() const { return k_.rows(); }
    bool is_zero() const;
    const Rational& operator()(Index i, Index j) const { return k_(i, j); }

    friend bool operator==(const GoalMatrix& a, const GoalMatrix& b) { return a.k_ == b.k_; }

private:
    RatMatrix k_;
};

struct ProperReport {
    bool proper = true;
    std::optional<Index> bad_row;                             // row not summing to 0
    std::optional<std::pair<Index, Index>> bad_relation;      // (relation index, column)
    std::string message;

    explicit operator bool() const { return proper; }
};

/// K is proper when its rows sum to 0 and every measure relation lambda
/// annihilates each column: sum_i lambda_i k_ij = 0.
/// Throws DimensionError on shape mismatch.
ProperReport is_proper(const RatMatrix& k, const std::vector<RatVector>& relations);
ProperReport is_proper(const GoalMatrix& k, const std::vector<RatVector>& relations);

struct DeltaBound {
    Rational max_abs_entry;          // max_ij |(G+ K)_ij|
    std::optional<Rational> value;   // min_i p_i / max_abs_entry; empty when G+ K = 0

    bool unbounded() const { return !value.has_value(); }
};

/// B = min_i p_i / max_ij |(G+ K)_ij|.
DeltaBound delta_bound(const RatMatrix& g_plus, const GoalMatrix& k, const TargetPoint& p);

/// Enclosure of min_i p_i * sigma_min(G) / (n max_ij |k_ij|), where sigma_min(G)
/// is the spectral-norm distance from G to the singular matrices. Requires G
/// nonsingular (SingularMatrixError) and K != 0 (PreconditionError).
Enclosure<Rational> corollary_bound(const RatMatrix& g, const GoalMatrix& k, const TargetPoint& p,
                                    const Rational& tol);

/// 2^-40.
Rational default_tolerance();

struct HyperFreeCertificate {
    Rational delta;
    RatMatrix stochastic;  // S = G+ (P + delta K)
    RatMatrix target;      // P + delta K
};

/// Computes S = G+ (P + delta K) and checks S e = e, S >= 0 and G S = P + delta K.
/// Throws ImproperGoalError when K is not proper for ker G, DeltaTooLargeError
/// when S has a negative entry, PreconditionError when delta < 0.
HyperFreeCertificate stochastic_factor(const RatMatrix& g, const RatMatrix& g_plus, const GoalMatrix& k,
                                       const TargetPoint& p, const Rational& delta);

/// For a sharing matrix m = P_uniform + delta K, recovers K and checks it is
/// proper. Throws PreconditionError when delta <= 0 or m is not a sharing matrix.
bool necessary_condition_check(const RatMatrix& m, const Rational& delta, const std::vector<RatVector>& relations);

/// Row sums all 1 and entries nonnegative.
bool is_row_stochastic(const RatMatrix& m);

} // namespace hyperfree

#endif // HYPERFREE_HYPER_ENVY_FREE_HPP
