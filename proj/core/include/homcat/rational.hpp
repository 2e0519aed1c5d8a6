#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcat {

// Exact rational scalar used everywhere. No floating point anywhere in the
// computational core.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline std::string rat_to_string(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p", "-p" or "p/q" (q > 0 after normalization).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Int rat_floor(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    Int q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

} // namespace homcat
