// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point is used anywhere in the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Point of a polytope: an ordered tuple of exact rationals.
using RationalVector = std::vector<Rational>;

/// num / den with sign moved to the numerator; den must be nonzero. The
/// underlying two-argument constructor rejects negative denominators.
inline Rational make_fraction(Int num, Int den)
{
    if (den == 0)
        throw std::domain_error("make_fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

/// Renders q in lowest terms as "p" or "p/q" with positive denominator.
inline std::string to_fraction_string(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

/// Parses "p" or "p/q" (q > 0 after normalization). Throws on malformed input.
inline Rational parse_fraction(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return make_fraction(std::move(num), std::move(den));
    }
    catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

inline std::string format_tuple(const RationalVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_fraction_string(v[i]);
    }
    return s + ")";
}

inline std::vector<std::string> to_fraction_strings(const RationalVector& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v)
        out.push_back(to_fraction_string(q));
    return out;
}

inline RationalVector parse_fractions(const std::vector<std::string>& v)
{
    RationalVector out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(parse_fraction(s));
    return out;
}

}  // namespace lstc
