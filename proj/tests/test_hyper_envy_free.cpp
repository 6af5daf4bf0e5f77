#include "doctest.h"
#include "test_support.hpp"

#include <hyperfree/errors.hpp>
#include <hyperfree/hyper_envy_free.hpp>
#include <hyperfree/linalg.hpp>

#include <algorithm>

using namespace hyperfree;
using namespace hyperfree::testing;

TEST_CASE("TargetPoint and GoalMatrix validation")
{
    CHECK_NOTHROW(TargetPoint(make_vector({"1/3", "2/3"})));
    CHECK_THROWS_AS(TargetPoint(make_vector({"1/3", "1/3"})), PreconditionError);
    CHECK_THROWS_AS(TargetPoint(make_vector({"0", "1"})), PreconditionError);
    CHECK(TargetPoint::uniform(4).values() == RatVector::Constant(4, q(1, 4)));

    CHECK_THROWS_AS(GoalMatrix(make_matrix({{"1", "0"}, {"0", "0"}})), PreconditionError);
    CHECK_THROWS_AS(GoalMatrix(make_matrix({{"1", "-1"}})), DimensionError);
    CHECK(GoalMatrix::super_envy_free(3).matrix() ==
          make_matrix({{"1", "-1/2", "-1/2"}, {"-1/2", "1", "-1/2"}, {"-1/2", "-1/2", "1"}}));
}

TEST_CASE("is_proper")
{
    const std::vector<RatVector> rel{make_vector({"1", "9", "-10"})};
    CHECK(is_proper(example_goal(), rel).proper);
    CHECK(is_proper(GoalMatrix::zero(3), rel).proper);
    CHECK(is_proper(GoalMatrix::super_envy_free(3), {}).proper);

    const ProperReport bad = is_proper(GoalMatrix::super_envy_free(3), rel);
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.bad_relation.has_value());
    CHECK(bad.bad_relation->first == 0);
    CHECK(bad.bad_relation->second == 0);

    const ProperReport row = is_proper(make_matrix({{"1", "0"}, {"0", "0"}}), {});
    CHECK_FALSE(row.proper);
    CHECK(row.bad_row == Index(0));

    CHECK_THROWS_AS(is_proper(example_goal(), {make_vector({"1", "-1"})}), DimensionError);
}

TEST_CASE("property: is_proper is invariant under permuting the relation basis")
{
    Gen gen(61);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 4;
        std::vector<RatVector> rel{gen.matrix(n, 1).col(0), gen.matrix(n, 1).col(0)};
        const RatMatrix k = gen.matrix(n, n);
        const bool proper = is_proper(k, rel).proper;
        std::reverse(rel.begin(), rel.end());
        CHECK(is_proper(k, rel).proper == proper);
    }
}

TEST_CASE("delta_bound")
{
    SUBCASE("example: B = 455/1536")
    {
        const DeltaBound b = delta_bound(pseudo_inverse(example_gram()), example_goal(), TargetPoint::uniform(3));
        CHECK(b.max_abs_entry == q(512, 455));
        REQUIRE(b.value.has_value());
        CHECK(*b.value == q(455, 1536));
    }
    SUBCASE("K = 0 is unbounded")
    {
        CHECK(delta_bound(pseudo_inverse(example_gram()), GoalMatrix::zero(3), TargetPoint::uniform(3)).unbounded());
    }
    SUBCASE("identity Gram, super envy-free K, n = 2")
    {
        // G+ = I, max |k_ij| = 1, min p = 1/2.
        const DeltaBound b =
            delta_bound(RatMatrix::Identity(2, 2), GoalMatrix::super_envy_free(2), TargetPoint::uniform(2));
        CHECK(b.value == q(1, 2));
    }
}

TEST_CASE("property: scaling K by c scales B by 1/c")
{
    Gen gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const MeasureProfile p = common_refinement(gen.densities(3, gen.coin()));
        const RatMatrix gp = pseudo_inverse(gram_matrix(p));
        const GoalMatrix k = gen.proper_goal(3, measure_relations(p));
        const TargetPoint t = gen.target(3);
        const Rational c = q(gen.integer(1, 9), gen.integer(1, 9));
        const DeltaBound b1 = delta_bound(gp, k, t);
        const DeltaBound b2 = delta_bound(gp, GoalMatrix(k.matrix() * c), t);
        REQUIRE(b1.value.has_value());
        CHECK(*b2.value == *b1.value / c);
    }
}

TEST_CASE("corollary_bound")
{
    const Rational tol = default_tolerance();
    SUBCASE("identity Gram, n = 2: (1/2) * 1 / (2 * 1) = 1/4")
    {
        const auto e = corollary_bound(RatMatrix::Identity(2, 2), GoalMatrix::super_envy_free(2), TargetPoint::uniform(2), tol);
        CHECK(e.contains(q(1, 4)));
        CHECK(e.width() <= tol);
    }
    SUBCASE("two overlapping players: below delta_bound")
    {
        const MeasureProfile p = common_refinement({StepDensity({q(0), q(1, 2), q(1)}, {q(3, 2), q(1, 2)}),
                                                    StepDensity({q(0), q(1, 2), q(1)}, {q(1, 2), q(3, 2)})});
        const RatMatrix g = gram_matrix(p);
        const GoalMatrix k = GoalMatrix::super_envy_free(2);
        const auto e = corollary_bound(g, k, TargetPoint::uniform(2), tol);
        const DeltaBound b = delta_bound(pseudo_inverse(g), k, TargetPoint::uniform(2));
        CHECK(e.hi <= *b.value);
        CHECK(e.lo > 0);
    }
    SUBCASE("scaling K by 2 halves the bound")
    {
        const RatMatrix g = make_matrix({{"3/4", "1/4"}, {"1/4", "3/4"}});
        const GoalMatrix k = GoalMatrix::super_envy_free(2);
        const auto e1 = corollary_bound(g, k, TargetPoint::uniform(2), tol);
        const auto e2 = corollary_bound(g, GoalMatrix(k.matrix() * 2), TargetPoint::uniform(2), tol);
        CHECK(e2.lo == e1.lo / 2);
        CHECK(e2.hi == e1.hi / 2);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(corollary_bound(example_gram(), example_goal(), TargetPoint::uniform(3), tol), SingularMatrixError);
        CHECK_THROWS_AS(corollary_bound(RatMatrix::Identity(2, 2), GoalMatrix::zero(2), TargetPoint::uniform(2), tol),
                        PreconditionError);
    }
}

TEST_CASE("stochastic_factor")
{
    const RatMatrix g = example_gram();
    const RatMatrix gp = pseudo_inverse(g);
    const TargetPoint p = TargetPoint::uniform(3);
    SUBCASE("example at delta = 1/6")
    {
        const HyperFreeCertificate c = stochastic_factor(g, gp, example_goal(), p, q(1, 6));
        CHECK(c.target == example_sharing());
        CHECK(is_row_stochastic(c.stochastic));
        CHECK(RatMatrix(g * c.stochastic) == c.target);
    }
    SUBCASE("delta = 0: S = G+ P")
    {
        const HyperFreeCertificate c = stochastic_factor(g, gp, example_goal(), p, q(0));
        CHECK(c.target == p.row_matrix());
        CHECK(c.stochastic == RatMatrix(gp * p.row_matrix()));
    }
    SUBCASE("identity Gram: S = P + delta K")
    {
        const RatMatrix id = RatMatrix::Identity(3, 3);
        const HyperFreeCertificate c = stochastic_factor(id, id, GoalMatrix::super_envy_free(3), p, q(1, 5));
        CHECK(c.stochastic == c.target);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(stochastic_factor(g, gp, GoalMatrix::super_envy_free(3), p, q(1, 100)), ImproperGoalError);
        CHECK_THROWS_AS(stochastic_factor(g, gp, example_goal(), p, q(1)), DeltaTooLargeError);
        CHECK_THROWS_AS(stochastic_factor(g, gp, example_goal(), p, q(-1)), PreconditionError);
    }
}

TEST_CASE("property: G+(P + delta K) is stochastic and G G+ (P + delta K) = P + delta K for delta in [0, B]")
{
    Gen gen(555);
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = gen.integer(2, 4);
        const MeasureProfile prof = common_refinement(gen.densities(n, trial % 2 == 0));
        const RatMatrix g = gram_matrix(prof);
        const RatMatrix gp = pseudo_inverse(g);
        const GoalMatrix k = gen.proper_goal(n, kernel_basis(g));
        const TargetPoint p = gen.target(n);
        const DeltaBound b = delta_bound(gp, k, p);
        REQUIRE(b.value.has_value());
        for (const Rational& delta : {q(0), *b.value / 3, *b.value}) {
            const HyperFreeCertificate c = stochastic_factor(g, gp, k, p, delta);
            CHECK(is_row_stochastic(c.stochastic));
            CHECK(RatMatrix(g * c.stochastic) == c.target);
        }
    }
}

TEST_CASE("necessary_condition_check")
{
    const std::vector<RatVector> rel{make_vector({"1", "9", "-10"})};
    CHECK(necessary_condition_check(example_sharing(), q(1, 6), rel));
    CHECK(necessary_condition_check(RatMatrix::Constant(3, 3, q(1, 3)), q(7), rel));
    // A stochastic matrix whose deviation breaks the relation.
    CHECK_FALSE(necessary_condition_check(make_matrix({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}), q(1), rel));
    CHECK_THROWS_AS(necessary_condition_check(make_matrix({{"1/2", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}}),
                                              q(1, 6), rel),
                    PreconditionError);
    CHECK_THROWS_AS(necessary_condition_check(example_sharing(), q(0), rel), PreconditionError);
}
