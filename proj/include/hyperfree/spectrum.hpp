#ifndef HYPERFREE_SPECTRUM_HPP
#define HYPERFREE_SPECTRUM_HPP

// Characteristic polynomials and certified eigenvalue enclosures for exact
// symmetric matrices. Polynomials are coefficient vectors in ascending
// order: p(x) = c(0) + c(1) x + ... + c(d) x^d.

#include <hyperfree/errors.hpp>
#include <hyperfree/linalg.hpp>
#include <hyperfree/rational.hpp>

#include <utility>
#include <vector>

namespace hyperfree {

template <typename Scalar>
struct Enclosure {
    Scalar lo;
    Scalar hi;

    Scalar width() const { return hi - lo; }
    bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
};

namespace poly {

template <typename Scalar>
Vector<Scalar> trimmed(Vector<Scalar> p)
{
    Index deg = p.size();
    while (deg > 0 && p(deg - 1) == 0)
        --deg;
    p.conservativeResize(deg);
    return p;
}

// Degree of the zero polynomial is -1.
template <typename Scalar>
Index degree(const Vector<Scalar>& p)
{
    return trimmed(p).size() - 1;
}

template <typename Scalar>
Scalar evaluate(const Vector<Scalar>& p, const Scalar& x)
{
    Scalar acc = 0;
    for (Index k = p.size(); k-- > 0;)
        acc = acc * x + p(k);
    return acc;
}

template <typename Scalar>
Vector<Scalar> derivative(const Vector<Scalar>& p)
{
    if (p.size() <= 1)
        return Vector<Scalar>(0);
    Vector<Scalar> d(p.size() - 1);
    for (Index k = 1; k < p.size(); ++k)
        d(k - 1) = p(k) * Scalar(k);
    return d;
}

/// Polynomial long division: a = q b + r with deg r < deg b.
template <typename Scalar>
std::pair<Vector<Scalar>, Vector<Scalar>> divide(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    const Vector<Scalar> den = trimmed(b);
    if (den.size() == 0)
        throw PreconditionError("polynomial division by zero");
    Vector<Scalar> rem = trimmed(a);
    const Index db = den.size() - 1;
    if (rem.size() - 1 < db)
        return {Vector<Scalar>(0), rem};

    Vector<Scalar> quo = Vector<Scalar>::Zero(rem.size() - db);
    for (Index k = rem.size() - 1; k >= db; --k) {
        if (rem(k) == 0)
            continue;
        const Scalar c = rem(k) / den(db);
        quo(k - db) = c;
        for (Index j = 0; j <= db; ++j)
            rem(k - db + j) -= c * den(j);
    }
    return {trimmed(quo), trimmed(rem)};
}

/// Monic greatest common divisor.
template <typename Scalar>
Vector<Scalar> gcd(Vector<Scalar> a, Vector<Scalar> b)
{
    a = trimmed(a);
    b = trimmed(b);
    while (b.size() > 0) {
        Vector<Scalar> r = divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() > 0)
        a /= a(a.size() - 1);
    return a;
}

/// p / gcd(p, p'): same roots, all simple.
template <typename Scalar>
Vector<Scalar> square_free_part(const Vector<Scalar>& p)
{
    const Vector<Scalar> g = gcd(p, derivative(p));
    if (g.size() <= 1)
        return trimmed(p);
    return divide(p, g).first;
}

template <typename Scalar>
std::vector<Vector<Scalar>> sturm_sequence(const Vector<Scalar>& p)
{
    std::vector<Vector<Scalar>> seq{trimmed(p), trimmed(derivative(p))};
    while (seq.back().size() > 0) {
        Vector<Scalar> r = divide(seq[seq.size() - 2], seq.back()).second;
        if (r.size() == 0)
            break;
        seq.push_back(-r);
    }
    if (seq.back().size() == 0)
        seq.pop_back();
    return seq;
}

template <typename Scalar>
int sign_changes(const std::vector<Vector<Scalar>>& seq, const Scalar& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& s : seq) {
        const Scalar v = evaluate(s, x);
        const int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

/// Number of distinct real roots in (a, b] of the square-free polynomial
/// whose Sturm sequence is seq.
template <typename Scalar>
int roots_in(const std::vector<Vector<Scalar>>& seq, const Scalar& a, const Scalar& b)
{
    return sign_changes(seq, a) - sign_changes(seq, b);
}

/// Cauchy bound: every root has modulus below 1 + max |c_k / c_d|.
template <typename Scalar>
Scalar root_bound(const Vector<Scalar>& p)
{
    const Vector<Scalar> q = trimmed(p);
    const Scalar lead = q(q.size() - 1);
    Scalar best = 0;
    for (Index k = 0; k + 1 < q.size(); ++k) {
        Scalar r = q(k) / lead;
        if (r < 0)
            r = -r;
        if (r > best)
            best = r;
    }
    return best + 1;
}

} // namespace poly

/// det(x I - m) by the Faddeev-LeVerrier recurrence, ascending coefficients.
template <typename Derived>
Vector<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw DimensionError("characteristic polynomial of a non-square matrix");
    const Index n = m.rows();
    const Matrix<Scalar> a = m;
    Vector<Scalar> c = Vector<Scalar>::Zero(n + 1);
    c(n) = 1;

    Matrix<Scalar> mk = Matrix<Scalar>::Zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        mk = a * mk;
        mk.diagonal().array() += c(n - k + 1);
        const Matrix<Scalar> amk = a * mk;
        c(n - k) = -amk.trace() / Scalar(k);
    }
    return c;
}

/// Enclosure of the smallest eigenvalue of a symmetric positive-semidefinite
/// matrix, or of the smallest nonzero eigenvalue when the matrix is singular.
/// Bisection on the square-free part of the characteristic polynomial, driven
/// by Sturm root counts; on return the bracket isolates that single root, so
/// the square-free part changes sign across [lo, hi] (or hi is the exact root
/// and lo == hi). hi - lo <= tol.
template <typename Derived>
Enclosure<typename Derived::Scalar> smallest_eigenvalue(const Eigen::MatrixBase<Derived>& m,
                                                        const typename Derived::Scalar& tol)
{
    using Scalar = typename Derived::Scalar;
    if (!is_symmetric(m))
        throw PreconditionError("smallest_eigenvalue requires a symmetric matrix");
    if (tol <= 0)
        throw PreconditionError("enclosure tolerance must be positive");

    Vector<Scalar> p = char_poly(m);
    Index zeros = 0;
    while (zeros < p.size() && p(zeros) == 0)
        ++zeros;
    if (zeros + 1 >= p.size())
        throw PreconditionError("matrix has no nonzero eigenvalue");
    p = Vector<Scalar>(p.tail(p.size() - zeros));

    const Vector<Scalar> sf = poly::square_free_part(p);
    const auto seq = poly::sturm_sequence(sf);
    Scalar lo = 0;
    Scalar hi = poly::root_bound(sf);
    if (poly::roots_in(seq, lo, hi) == 0)
        throw PreconditionError("no positive eigenvalue; matrix is not positive-semidefinite");

    // Invariant: no root in (0, lo], at least one root in (lo, hi].
    for (;;) {
        const int count = poly::roots_in(seq, lo, hi);
        if (count == 1 && poly::evaluate(sf, hi) == 0)
            return {hi, hi};
        if (count == 1 && hi - lo <= tol)
            return {lo, hi};
        const Scalar mid = (lo + hi) / 2;
        if (poly::roots_in(seq, lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
}

} // namespace hyperfree

#endif // HYPERFREE_SPECTRUM_HPP
