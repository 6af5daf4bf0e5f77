#ifndef HYPERFREE_RELATION_SOLVER_HPP
#define HYPERFREE_RELATION_SOLVER_HPP

// Decides whether some partition satisfies mu_i(X_j) r_ij p_j for a grid of
// relations r_ij in {<, =, >}. That holds iff a proper K with k_ij r_ij 0
// exists, which is a linear program once strictness is turned into a margin t:
// maximize t subject to k_ij >= t (GT), k_ij <= -t (LT), k_ij = 0 (EQ),
// |k_ij| <= 1, zero row sums and the measure relations on every column.

#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperfree {

enum class Relation { Less, Equal, Greater };

char to_char(Relation r);
/// Accepts '<', '=', '>'. Throws ParseError.
Relation relation_from_char(char c);

class RelationMatrix {
public:
    explicit RelationMatrix(Index n, Relation fill = Relation::Equal);
    /// Rows of "<", "=", ">" symbols, e.g. {">=<", ">><", "<<>"}.
    static RelationMatrix from_rows(const std::vector<std::string>& rows);

    Index size() const { return n_; }
    Relation operator()(Index i, Index j) const { return cells_[index(i, j)]; }
    Relation& operator()(Index i, Index j) { return cells_[index(i, j)]; }
    bool has_strict() const;

    friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;

private:
    std::size_t index(Index i, Index j) const { return static_cast<std::size_t>(i * n_ + j); }

    Index n_;
    std::vector<Relation> cells_;
};

/// True iff sign(x) agrees with r.
bool satisfies(const Rational& x, Relation r);

enum class RelationStatus { Feasible, Infeasible };

struct RelationSolution {
    RelationStatus status = RelationStatus::Infeasible;
    GoalMatrix k = GoalMatrix::zero(0);
    // Optimal strictness slack. Empty when r has no strict entry, in which case
    // K = 0 and the signs put no constraint on delta.
    std::optional<Rational> margin;

    bool feasible() const { return status == RelationStatus::Feasible; }
};

/// Throws DimensionError when a relation vector does not have r.size() entries.
RelationSolution solve_relations(const RelationMatrix& r, const std::vector<RatVector>& relations);

/// is_proper(k, relations) and sign(k_ij) matches r_ij for every entry.
bool verify_relation_solution(const RatMatrix& k, const RelationMatrix& r, const std::vector<RatVector>& relations);

} // namespace hyperfree

#endif // HYPERFREE_RELATION_SOLVER_HPP
