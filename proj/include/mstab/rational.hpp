#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "mstab/errors.hpp"

namespace mstab {

// Exact scalar type used everywhere outside the finite-field module.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw bad_parameters("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat rat(long long num, long long den = 1) { return make_rat(Int(num), Int(den)); }

// Canonical "p/q" form: lowest terms, q > 0, plain "p" when q == 1.
inline std::string to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p" or "p/q". No decimal or exponent forms.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + s + "'");
        return make_rat(num, den);
    } catch (const parse_error&) {
        throw;
    } catch (const std::runtime_error&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

} // namespace mstab
