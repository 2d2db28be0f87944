#pragma once

// Exact big-integer / rational / high-precision-float scalar layer shared by
// every module. All accept/reject comparisons in the library go through exact
// integer or rational arithmetic; floating point appears only in reported
// display values.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace specint {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;  // ~50 significant decimal digits

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const BigRat& x) { return x.sign(); }

// C(n, k) as an exact big integer; 0 outside the triangle.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

// Sum_{i=0..k} C(n, i).
inline BigInt binomial_prefix(long long n, long long k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) k = n;
    BigInt term = 1, total = 1;
    for (long long i = 1; i <= k; ++i) {
        term *= (n - i + 1);
        term /= i;
        total += term;
    }
    return total;
}

inline BigInt pow2_big(unsigned e) { return BigInt(1) << e; }

// floor(log2(x)) for x > 0.
inline long floor_log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("floor_log2: argument must be positive");
    return static_cast<long>(boost::multiprecision::msb(x));
}

inline Float50 log2_value(const Float50& x) {
    using boost::multiprecision::log;
    return log(x) / log(Float50(2));
}

inline Float50 log2_value(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2_value: argument must be positive");
    return log2_value(x.convert_to<Float50>());
}

inline Float50 to_float50(const BigRat& x) {
    return boost::multiprecision::numerator(x).convert_to<Float50>() /
           boost::multiprecision::denominator(x).convert_to<Float50>();
}

// A rational with a power-of-two denominator, kept canonical: numerator odd,
// or the exact zero (0, 0). The natural value type for subset densities
// |F| / 2^n and their products.
struct DyadicRational {
    BigInt num;      // canonical: odd unless the value is zero
    unsigned log2den = 0;  // denominator is 2^log2den

    DyadicRational() : num(0), log2den(0) {}
    DyadicRational(BigInt n, unsigned l) : num(std::move(n)), log2den(l) { canonicalize(); }

    void canonicalize() {
        if (num == 0) {
            log2den = 0;
            return;
        }
        unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(num));
        if (tz > log2den) tz = log2den;
        num >>= tz;
        log2den -= tz;
    }

    bool is_zero() const { return num == 0; }

    DyadicRational operator*(const DyadicRational& o) const {
        return DyadicRational(num * o.num, log2den + o.log2den);
    }
    DyadicRational operator+(const DyadicRational& o) const {
        unsigned l = std::max(log2den, o.log2den);
        return DyadicRational((num << (l - log2den)) + (o.num << (l - o.log2den)), l);
    }
    DyadicRational operator-(const DyadicRational& o) const {
        unsigned l = std::max(log2den, o.log2den);
        return DyadicRational((num << (l - log2den)) - (o.num << (l - o.log2den)), l);
    }
    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.num == b.num && a.log2den == b.log2den;
    }
    friend bool operator<(const DyadicRational& a, const DyadicRational& b) {
        unsigned l = std::max(a.log2den, b.log2den);
        return (a.num << (l - a.log2den)) < (b.num << (l - b.log2den));
    }

    BigRat to_rational() const { return BigRat(num, pow2_big(log2den)); }
    double to_double() const { return to_rational().convert_to<double>(); }
    std::string num_str() const { return num.str(); }
};

// Smallest nonnegative integer s with s >= (sqrt(eps)/2) * x for eps = 2e-4,
// i.e. the least s with 20000 * s^2 >= x^2 (exact integer form of
// ceil(x * sqrt(2)/200)).
inline long long ceil_half_sqrt_eps(long long x) {
    if (x <= 0) return 0;
    BigInt xx = BigInt(x) * x;
    long long s = static_cast<long long>(static_cast<double>(x) * 0.0070710678118654755);
    if (s < 0) s = 0;
    while (BigInt(s) * s * 20000 >= xx && s > 0) --s;
    while (BigInt(s) * s * 20000 < xx) ++s;
    return s;
}

// Smallest nonnegative integer w with w^q >= n^p, i.e. ceil(n^{p/q}) computed
// without floating point at the boundary. Used with p/q = 21/40 = 0.525.
inline long long ceil_pow_frac(long long n, unsigned p, unsigned q) {
    if (n <= 0) return 0;
    BigInt target = boost::multiprecision::pow(BigInt(n), p);
    long long w = static_cast<long long>(std::pow(static_cast<double>(n),
                                                  static_cast<double>(p) / q));
    if (w < 1) w = 1;
    while (w > 1 && boost::multiprecision::pow(BigInt(w - 1), q) >= target) --w;
    while (boost::multiprecision::pow(BigInt(w), q) < target) ++w;
    return w;
}

}  // namespace specint
