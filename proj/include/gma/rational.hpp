#ifndef GMA_RATIONAL_HPP
#define GMA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gma/errors.hpp"

namespace gma {

// Exact arithmetic over the base field Q. cpp_rational keeps the canonical
// form we need: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw arithmetic_error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(num, den);
}

inline bool is_integer(const BigRational& r) { return denominator(r) == 1; }

inline BigRational rat_pow(const BigRational& base, long long e) {
    if (e == 0)
        return BigRational(1);
    if (base == 0) {
        if (e < 0)
            throw arithmetic_error("zero raised to a negative power");
        return BigRational(0);
    }
    BigRational b = base;
    unsigned long long n;
    if (e < 0) {
        b = BigRational(1) / b;
        n = static_cast<unsigned long long>(-(e + 1)) + 1;
    } else {
        n = static_cast<unsigned long long>(e);
    }
    BigRational acc(1);
    while (n > 0) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const BigRational& r) { return r.str(); }

// gcd on integers, result >= 0; gcd(0, 0) = 0.
inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

} // namespace gma

#endif
