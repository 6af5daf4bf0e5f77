#ifndef HYPERFREE_LINALG_HPP
#define HYPERFREE_LINALG_HPP

// Exact dense linear algebra over a field. Every routine here assumes the
// scalar type has exact arithmetic (comparisons against zero are decisive),
// so it is meant for Rational and friends, not for floating point.

#include <hyperfree/errors.hpp>
#include <hyperfree/rational.hpp>

#include <Eigen/Core>

#include <type_traits>
#include <utility>
#include <vector>

namespace hyperfree {

template <typename Scalar>
struct EchelonForm {
    Matrix<Scalar> reduced;     // reduced row echelon form
    std::vector<Index> pivots;  // pivot column of each nonzero row, increasing

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. The first nonzero entry below the current row is
/// taken as pivot; with exact scalars no other pivoting is needed.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    EchelonForm<Scalar> out{m, {}};
    Matrix<Scalar>& a = out.reduced;
    const Index rows = a.rows();
    const Index cols = a.cols();

    Index row = 0;
    for (Index col = 0; col < cols && row < rows; ++col) {
        Index pivot = row;
        while (pivot < rows && a(pivot, col) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != row)
            a.row(pivot).swap(a.row(row));

        const Scalar inv = Scalar(1) / a(row, col);
        for (Index j = col; j < cols; ++j)
            a(row, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            const Scalar factor = a(i, col);
            for (Index j = col; j < cols; ++j)
                a(i, j) -= factor * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return reduced_row_echelon(m).rank();
}

/// Scales v so that its first nonzero entry is positive. For Rational the
/// vector is further scaled to coprime integers; other fields get a leading 1.
template <typename Scalar>
void canonicalize_direction(Vector<Scalar>& v)
{
    Index lead = 0;
    while (lead < v.size() && v(lead) == 0)
        ++lead;
    if (lead == v.size())
        return;

    if constexpr (std::is_same_v<Scalar, Rational>) {
        Integer den_lcm = 1;
        for (Index i = 0; i < v.size(); ++i)
            den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(v(i))));
        Integer num_gcd = 0;
        for (Index i = 0; i < v.size(); ++i) {
            const Integer scaled = Integer(numerator(v(i))) * (den_lcm / Integer(denominator(v(i))));
            num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
        }
        Rational scale(den_lcm, num_gcd);
        if (v(lead) < 0)
            scale = -scale;
        v *= scale;
    } else {
        v /= v(lead);
    }
}

/// Basis of the right null space of m. One vector per free column of the
/// reduced echelon form (in column order), each canonicalized by
/// canonicalize_direction.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const EchelonForm<Scalar> ef = reduced_row_echelon(m);
    const Index cols = m.cols();

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : ef.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vector<Scalar>> basis;
    for (Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        Vector<Scalar> v = Vector<Scalar>::Zero(cols);
        v(free) = 1;
        for (Index r = 0; r < ef.rank(); ++r)
            v(ef.pivots[static_cast<std::size_t>(r)]) = -ef.reduced(r, free);
        canonicalize_direction(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename Scalar>
struct RankFactorization {
    Matrix<Scalar> c;  // rows x r, the pivot columns of m
    Matrix<Scalar> f;  // r x cols, nonzero rows of rref(m)
};

/// m = c * f with c of full column rank and f of full row rank.
template <typename Derived>
RankFactorization<typename Derived::Scalar> rank_factorization(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const EchelonForm<Scalar> ef = reduced_row_echelon(m);
    const Index r = ef.rank();

    RankFactorization<Scalar> out{Matrix<Scalar>(m.rows(), r), ef.reduced.topRows(r)};
    for (Index k = 0; k < r; ++k)
        out.c.col(k) = m.col(ef.pivots[static_cast<std::size_t>(k)]);
    return out;
}

/// Exact inverse by Gauss-Jordan on [m | I]. Throws SingularMatrixError.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw DimensionError("inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<Scalar> augmented(n, 2 * n);
    augmented << m, Matrix<Scalar>::Identity(n, n);
    const EchelonForm<Scalar> ef = reduced_row_echelon(augmented);
    if (ef.rank() < n || ef.pivots.back() >= n)
        throw SingularMatrixError("no inverse exists");
    return ef.reduced.rightCols(n);
}

/// Moore-Penrose pseudo-inverse through a rank factorization m = c f:
///   m+ = f^T (f f^T)^-1 (c^T c)^-1 c^T.
/// A rank-0 input yields the zero matrix of transposed shape.
template <typename Derived>
Matrix<typename Derived::Scalar> pseudo_inverse(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const RankFactorization<Scalar> rf = rank_factorization(m);
    if (rf.c.cols() == 0)
        return Matrix<Scalar>::Zero(m.cols(), m.rows());

    const Matrix<Scalar> ct = rf.c.transpose();
    const Matrix<Scalar> ft = rf.f.transpose();
    const Matrix<Scalar> ctc_inv = inverse(ct * rf.c);
    const Matrix<Scalar> fft_inv = inverse(rf.f * ft);
    return ft * (fft_inv * (ctc_inv * ct));
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols())
        return false;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                return false;
    return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                return false;
    return true;
}

/// Entrywise max |m_ij|; zero for an empty matrix.
template <typename Derived>
typename Derived::Scalar max_abs_entry(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    Scalar best = 0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            const Scalar a = m(i, j) < 0 ? Scalar(-m(i, j)) : m(i, j);
            if (a > best)
                best = a;
        }
    return best;
}

} // namespace hyperfree

#endif // HYPERFREE_LINALG_HPP
