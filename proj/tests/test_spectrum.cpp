#include "doctest.h"
#include "test_support.hpp"

#include <hyperfree/spectrum.hpp>

#include <Eigen/Eigenvalues>

using namespace hyperfree;
using namespace hyperfree::testing;

namespace {

Eigen::MatrixXd to_double(const RatMatrix& m)
{
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            d(i, j) = m(i, j).convert_to<double>();
    return d;
}

// Smallest |eigenvalue| above 1e-9 from a floating-point eigensolver; a
// rough independent cross-check only.
double float_smallest_nonzero(const RatMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_double(m));
    double best = 1e300;
    for (Index k = 0; k < es.eigenvalues().size(); ++k)
        if (es.eigenvalues()(k) > 1e-9)
            best = std::min(best, es.eigenvalues()(k));
    return best;
}

} // namespace

TEST_CASE("char_poly of simple matrices")
{
    CHECK(char_poly(RatMatrix(RatMatrix::Identity(2, 2))) == make_vector({"1", "-2", "1"}));
    RatMatrix d = RatMatrix::Zero(3, 3);
    d.diagonal() = make_vector({"1", "2", "3"});
    CHECK(char_poly(d) == make_vector({"-6", "11", "-6", "1"}));
    CHECK_THROWS_AS(char_poly(RatMatrix(RatMatrix::Zero(2, 3))), DimensionError);
}

TEST_CASE("char_poly of the example Gram matrix matches cofactor expansion")
{
    const RatMatrix g = example_gram();
    const RatVector expected = char_poly_by_interpolation(g);
    CHECK(char_poly(g) == expected);
    CHECK(expected(0) == 0);  // singular
}

TEST_CASE("property: Faddeev-LeVerrier agrees with cofactor interpolation")
{
    Gen gen(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = gen.integer(1, 5);
        const RatMatrix m = gen.matrix(n, n);
        CHECK(char_poly(m) == char_poly_by_interpolation(m));
    }
}

TEST_CASE("smallest_eigenvalue enclosures")
{
    const Rational tol = default_tolerance();
    SUBCASE("identity")
    {
        const auto e = smallest_eigenvalue(RatMatrix(RatMatrix::Identity(3, 3)), tol);
        CHECK(e.contains(1));
        CHECK(e.width() <= tol);
    }
    SUBCASE("diag(1/4, 3)")
    {
        const auto e = smallest_eigenvalue(make_matrix({{"1/4", "0"}, {"0", "3"}}), tol);
        CHECK(e.contains(Rational(1, 4)));
        CHECK(e.width() <= tol);
    }
    SUBCASE("example Gram matrix: smallest nonzero root of the cubic")
    {
        const RatMatrix g = example_gram();
        const auto e = smallest_eigenvalue(g, tol);
        CHECK(e.width() <= tol);
        const RatVector p = char_poly_by_interpolation(g);
        // det(xI - G) = x (x - 1)(x - 182/209): cubic oracle from cofactors.
        const Rational at_lo = poly::evaluate(p, e.lo);
        const Rational at_hi = poly::evaluate(p, e.hi);
        CHECK((at_lo * at_hi < 0 || at_hi == 0 || at_lo == 0));
        CHECK(e.lo > 0);
        CHECK(std::abs(e.lo.convert_to<double>() - float_smallest_nonzero(g)) < 1e-9);
    }
    SUBCASE("non-symmetric input is rejected")
    {
        CHECK_THROWS_AS(smallest_eigenvalue(make_matrix({{"1", "2"}, {"0", "1"}}), tol), PreconditionError);
    }
    SUBCASE("zero matrix has no nonzero eigenvalue")
    {
        CHECK_THROWS_AS(smallest_eigenvalue(RatMatrix(RatMatrix::Zero(2, 2)), tol), PreconditionError);
    }
}

TEST_CASE("property: enclosure brackets a sign change of the square-free part")
{
    Gen gen(19);
    const Rational tol(1, 1 << 20);
    for (int trial = 0; trial < 60; ++trial) {
        const Index n = gen.integer(1, 4);
        const Index k = gen.integer(1, n);
        const RatMatrix b = gen.matrix(n, k, 3, 2);
        const RatMatrix m = b * b.transpose();  // symmetric PSD, rank <= k
        if (is_zero(m))
            continue;
        const auto e = smallest_eigenvalue(m, tol);
        CHECK(e.width() <= tol);
        const RatVector sf = poly::square_free_part(char_poly(m));
        CHECK(poly::evaluate(sf, e.lo) * poly::evaluate(sf, e.hi) <= 0);
        CHECK(std::abs(e.hi.convert_to<double>() - float_smallest_nonzero(m)) < 1e-5);
    }
}

TEST_CASE("polynomial helpers")
{
    const RatVector p = make_vector({"-1", "0", "1"});  // x^2 - 1
    const auto [quo, rem] = poly::divide(p, make_vector({"-1", "1"}));
    CHECK(quo == make_vector({"1", "1"}));
    CHECK(rem.size() == 0);
    // (x - 1)^2 (x - 2) -> (x - 1)(x - 2)
    const RatVector sq = make_vector({"-2", "5", "-4", "1"});
    CHECK(poly::square_free_part(sq) == make_vector({"2", "-3", "1"}));
    CHECK(poly::degree(make_vector({"0", "0"})) == -1);
}
