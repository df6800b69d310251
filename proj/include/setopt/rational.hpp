#pragma once

// Exact rational scalars, vectors and matrices used throughout the library.
// All arithmetic is exact; nothing in this project ever rounds.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setopt {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Bad input: dimension mismatches, malformed files, out-of-range flags.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical guarantee failed to hold. Always a bug, never user error.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Accepted literals: integers ("-3"), fractions ("5/8"), finite decimals
// ("0.25"). The result is always normalized (lowest terms, positive
// denominator), independent of how it was written.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { throw InputError("invalid rational literal: '" + std::string(text) + "'"); };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    auto digits = [&](std::string_view d) -> Integer {
        if (d.empty()) fail();
        Integer v = 0;
        for (char ch : d) {
            if (ch < '0' || ch > '9') fail();
            v = v * 10 + (ch - '0');
        }
        return v;
    };

    Integer num, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = digits(s.substr(0, slash));
        den = digits(s.substr(slash + 1));
        if (den == 0) fail();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        num = whole.empty() ? Integer(0) : digits(whole);
        den = 1;
        for (char ch : frac) {
            if (ch < '0' || ch > '9') fail();
            num = num * 10 + (ch - '0');
            den *= 10;
        }
    } else {
        num = digits(s);
        den = 1;
    }
    if (negative) num = -num;
    // Division canonicalizes; mpq string construction would not.
    return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline RVec make_vec(std::initializer_list<Rational> xs)
{
    RVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return v;
}

inline RVec vec_of(const std::vector<Rational>& xs)
{
    RVec v(static_cast<Eigen::Index>(xs.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = xs[static_cast<size_t>(i)];
    return v;
}

inline bool vec_eq(const RVec& a, const RVec& b)
{
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

inline bool lex_less(const RVec& a, const RVec& b)
{
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return a.size() < b.size();
}

inline std::string format_point(const RVec& v)
{
    std::string s = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v(i));
    }
    return s + ")";
}

inline std::vector<RVec> sorted_unique(std::vector<RVec> pts)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), vec_eq), pts.end());
    return pts;
}

// Exact Gauss-Jordan inverse; nullopt on a singular matrix. Pivot selection
// only needs a nonzero entry -- there is no numerical error to balance.
inline std::optional<RMat> try_inverse(const RMat& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    const Eigen::Index n = m.rows();
    RMat a = m;
    RMat inv = RMat::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Rational p = a(col, col);
        a.row(col) /= p;
        inv.row(col) /= p;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            a.row(r) -= f * a.row(col);
            inv.row(r) -= f * inv.row(col);
        }
    }
    return inv;
}

inline std::optional<RVec> solve_square(const RMat& a, const RVec& b)
{
    auto inv = try_inverse(a);
    if (!inv) return std::nullopt;
    return RVec(*inv * b);
}

}  // namespace setopt
