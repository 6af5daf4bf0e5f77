#ifndef HYPERFREE_RATIONAL_HPP
#define HYPERFREE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace hyperfree {

// Expression templates are disabled so the type composes cleanly with Eigen's own.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

/// Parses "p", "-p" or "p/q" (decimal digits only). Floating-point notation is rejected.
/// The result is in lowest terms. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when q == 1.
std::string to_string(const Rational& x);

Rational abs(const Rational& x);

// Row-major nested list convenience for literals in code and tests:
// make_matrix({{"10/11", "0"}, {"0", "1"}}).
RatMatrix make_matrix(const std::vector<std::vector<std::string>>& rows);
RatVector make_vector(const std::vector<std::string>& entries);

} // namespace hyperfree

#endif // HYPERFREE_RATIONAL_HPP
