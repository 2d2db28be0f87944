#pragma once

// Exact arithmetic in Q[sqrt(5)], plus exact sign tests for expressions mixing
// Q[sqrt(5)] with sqrt(eps) = sqrt(2)/100 (eps = 2/10^4). The procedure's
// threshold constant is a = 6 - 2*sqrt(5) - 7/1000, so every "r > a*q" test and
// every comparison against sqrt(eps) can be decided exactly by sign-casing and
// squaring; no floating point is involved on any accept/reject path.

#include "specint/numeric.hpp"

namespace specint {

// Value p + q*sqrt(5) with rational p, q.
struct Surd5 {
    BigRat p;  // rational part
    BigRat q;  // coefficient of sqrt(5)

    Surd5() : p(0), q(0) {}
    Surd5(BigRat rp, BigRat rq) : p(std::move(rp)), q(std::move(rq)) {}
    explicit Surd5(const BigRat& r) : p(r), q(0) {}

    Surd5 operator+(const Surd5& o) const { return {p + o.p, q + o.q}; }
    Surd5 operator-(const Surd5& o) const { return {p - o.p, q - o.q}; }
    Surd5 operator-() const { return {-p, -q}; }
    Surd5 operator*(const Surd5& o) const {
        return {p * o.p + 5 * q * o.q, p * o.q + q * o.p};
    }
    Surd5 operator*(const BigRat& r) const { return {p * r, q * r}; }

    Surd5 pow(unsigned e) const {
        Surd5 r(BigRat(1), BigRat(0));
        Surd5 b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Exact sign: sqrt(5) is irrational, so p + q*sqrt(5) = 0 only at p = q = 0.
    int sign() const {
        int sp = sign_of(p), sq = sign_of(q);
        if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
        if (sp <= 0 && sq <= 0) return -1;
        // opposite signs: |p| vs |q|*sqrt(5)  <=>  p^2 vs 5 q^2
        int cmp = sign_of(p * p - 5 * q * q);  // 0 impossible here (sqrt(5) irrational)
        return sp > 0 ? cmp : -cmp;
    }

    Float50 to_float50() const {
        using boost::multiprecision::sqrt;
        return specint::to_float50(p) + specint::to_float50(q) * sqrt(Float50(5));
    }
    double to_double() const { return to_float50().convert_to<double>(); }
};

inline bool operator>(const Surd5& a, const Surd5& b) { return (a - b).sign() > 0; }
inline bool operator<(const Surd5& a, const Surd5& b) { return (a - b).sign() < 0; }

// eps = 2/10^4 (exact rational).
inline const BigRat& eps_rational() {
    static const BigRat e(2, 10000);
    return e;
}

// a0 = 6 - 2*sqrt(5).
inline Surd5 surd_a0() { return Surd5(BigRat(6), BigRat(-2)); }

// a = a0 - 7/1000 = 5993/1000 - 2*sqrt(5).
inline Surd5 surd_a() { return Surd5(BigRat(5993, 1000), BigRat(-2)); }

// Exact test r > a * q for rationals r, q >= 0 (the case-1/case-2 threshold).
inline bool rational_gt_a_times(const BigRat& r, const BigRat& q) {
    // r - a*q = (r - 5993q/1000) + 2q * sqrt(5)
    return Surd5(r - BigRat(5993, 1000) * q, 2 * q).sign() > 0;
}

// Exact sign of C + sqrt(eps) * D for C, D in Q[sqrt(5)].
// sqrt(eps) = sqrt(2)/100 does not lie in Q[sqrt(5)], so the sign is always
// decidable: case on the signs of C and D, then compare C^2 with eps * D^2.
inline int sign_plus_sqrt_eps_times(const Surd5& C, const Surd5& D) {
    int sc = C.sign(), sd = D.sign();
    if (sd == 0) return sc;
    if (sc == 0) return sd;
    if (sc == sd) return sc;
    Surd5 diff = C * C - (D * D) * eps_rational();
    int s = diff.sign();  // 0 impossible: would force sqrt(eps) into Q[sqrt(5)]
    return s > 0 ? sc : sd;
}

// Exact decision of f(x) > sqrt(eps) for x in Q[sqrt(5)], 0 < x < 4, where
// f(x) = 2 - x/(2 - sqrt(x)). Derivation (valid since 2 - sqrt(x) > 0):
//   f(x) > s  <=>  (2-s)(2-sqrt(x)) > x            [s = sqrt(eps)]
//              <=>  (4 - 2s - x) > (2-s) sqrt(x)
// For the first squaring we need 4 - x > 2s, i.e. u = 4-x satisfies u^2 > 4 eps
// (with u > 0); squaring then yields C + s*D > 0 with
//   C = u^2 + 4 eps - (4+eps) x,   D = 8x - 16,
// both in Q[sqrt(5)], decided exactly.
inline bool f_exceeds_sqrt_eps(const Surd5& x) {
    const BigRat& eps = eps_rational();
    Surd5 four(BigRat(4));
    Surd5 u = four - x;
    if (u.sign() <= 0) return false;
    Surd5 u2_minus_4eps = u * u - Surd5(4 * eps);
    if (u2_minus_4eps.sign() <= 0) return false;
    Surd5 C = u * u + Surd5(4 * eps) - x * (BigRat(4) + eps);
    Surd5 D = x * BigRat(8) - Surd5(BigRat(16));
    return sign_plus_sqrt_eps_times(C, D) > 0;
}

// Exact test 1 - log2(a) > 38/100  <=>  a < 2^{62/100}  <=>  a^50 < 2^31.
inline bool one_minus_log2_a_exceeds_038() {
    Surd5 a50 = surd_a().pow(50);
    return (Surd5(BigRat(BigInt(1) << 31)) - a50).sign() > 0;
}

// Exact test 4/a in (lo, hi) for positive rationals lo < hi (a > 0).
inline bool four_over_a_between(const BigRat& lo, const BigRat& hi) {
    Surd5 a = surd_a();
    bool above = (Surd5(BigRat(4)) - a * lo).sign() > 0;  // 4 > lo*a  <=> 4/a > lo
    bool below = (Surd5(BigRat(4)) - a * hi).sign() < 0;  // 4 < hi*a  <=> 4/a < hi
    return above && below;
}

}  // namespace specint
