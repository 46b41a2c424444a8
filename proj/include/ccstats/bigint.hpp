#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccstats {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return BigRat(num, den);
}

/// q^{-k} as an exact rational, k >= 0.
inline BigRat inv_pow(long long q, unsigned k) {
    return BigRat(BigInt(1), int_pow(BigInt(q), k));
}

/// Canonical "num/den" text form (always carries the denominator).
inline std::string rat_string(const BigRat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "num/den" or a plain integer.
inline BigRat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline double rat_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace ccstats
