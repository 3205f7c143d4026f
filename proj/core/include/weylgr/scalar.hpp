#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "weylgr/error.hpp"

namespace weylgr {

// Exact scalar kinds.  Everything downstream (matrices, schemes, roots,
// cluster variables) is computed over these; no floating point anywhere.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Canonical text: "p" when the denominator is 1, else "p/q" with q > 0 and
// gcd(p, q) = 1.  cpp_rational maintains that normal form itself.
inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw error(errc::parse, "not an integer: '" + s + "'");
    }
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw error(errc::parse, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        throw error(errc::parse, "not a rational: '" + s + "'");
    }
}

} // namespace weylgr
