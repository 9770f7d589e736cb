#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hofer {

// Exact rational arithmetic for region weights and move costs. All weight
// constraints in this library are equalities checked without tolerance, so
// everything downstream of area rationalization stays in Rational.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Canonical "p/q" rendering, q >= 1, gcd(p,q) = 1. Integers render as "p/1"
// so that keys and files are uniform.
inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

// Accepts "p/q" and bare "p".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hofer
