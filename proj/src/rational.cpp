#include <hyperfree/rational.hpp>

#include <hyperfree/errors.hpp>

#include <algorithm>
#include <cctype>

namespace hyperfree {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    const Integer n(std::string{num});
    const Integer d(std::string{den});
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& x)
{
    return x.str();
}

Rational abs(const Rational& x)
{
    return x < 0 ? Rational(-x) : x;
}

RatMatrix make_matrix(const std::vector<std::vector<std::string>>& rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = rows.empty() ? 0 : static_cast<Index>(rows.front().size());
    RatMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[i].size()) != c)
            throw DimensionError("ragged matrix literal");
        for (Index j = 0; j < c; ++j)
            m(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

RatVector make_vector(const std::vector<std::string>& entries)
{
    RatVector v(static_cast<Index>(entries.size()));
    for (Index i = 0; i < v.size(); ++i)
        v(i) = parse_rational(entries[i]);
    return v;
}

} // namespace hyperfree
