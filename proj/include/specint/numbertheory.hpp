#pragma once

// Primality, prime-in-interval queries with exact fractional-power endpoint
// comparisons, the consecutive-binomial gcd condition, and the
// missing-intersection bound pipeline.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specint/numeric.hpp"

namespace specint {

// Deterministic Miller-Rabin for all 64-bit inputs (fixed base set valid far
// beyond 2^64).
inline bool is_prime(uint64_t m) {
    if (m < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                       37ULL}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    uint64_t d = m - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t mod) -> uint64_t {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
    };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t mod) -> uint64_t {
        uint64_t res = 1;
        a %= mod;
        while (e) {
            if (e & 1) res = mulmod(res, a, mod);
            a = mulmod(a, a, mod);
            e >>= 1;
        }
        return res;
    };
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                       37ULL}) {
        uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Simple sieve of Eratosthenes; index i true iff i prime, for 0 <= i <= limit.
inline std::vector<bool> prime_sieve(uint64_t limit) {
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = false;
    if (limit >= 1) sieve[1] = false;
    for (uint64_t i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    return sieve;
}

// Exact test (s - p) < s^{gn/gd}, i.e. (s-p)^{gd} < s^{gn}, with a double
// prefilter away from the boundary.
// Exact test s - p < base^{gn/gd} for p < s, i.e. (s-p)^{gd} < base^{gn}.
// A double-precision log comparison decides clear cases; near-ties fall back
// to exact big-integer powers.
inline bool gap_below_gamma_pow(uint64_t s, uint64_t p, uint64_t base, unsigned gn, unsigned gd) {
    if (p >= s) return false;
    uint64_t d = s - p;
    double lhs = gd * std::log2(static_cast<double>(d));
    double rhs = gn * std::log2(static_cast<double>(base));
    if (lhs < rhs - 1e-6) return true;
    if (lhs > rhs + 1e-6) return false;
    return boost::multiprecision::pow(BigInt(d), gd) <
           boost::multiprecision::pow(BigInt(base), gn);
}

inline bool within_gamma_window(uint64_t s, uint64_t p, unsigned gn, unsigned gd) {
    return gap_below_gamma_pow(s, p, s, gn, gd);
}

// Parse a decimal in (0,1) (e.g. "0.525") into an exact fraction num/den.
struct GammaExponent {
    unsigned num = 21, den = 40;  // defaults to 0.525
};

inline GammaExponent parse_gamma(const std::string& text) {
    size_t dot = text.find('.');
    if (dot == std::string::npos)
        throw std::invalid_argument("gamma must be a decimal in (0,1), e.g. 0.525");
    std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (whole != "0" || frac.empty() || frac.size() > 9)
        throw std::invalid_argument("gamma must be a decimal in (0,1) with <= 9 digits");
    unsigned long num = std::stoul(frac);
    unsigned long den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (num == 0 || num >= den) throw std::invalid_argument("gamma must lie strictly in (0,1)");
    // reduce
    auto g = [](unsigned long a, unsigned long b) {
        while (b) {
            unsigned long t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    unsigned long gg = g(num, den);
    return {static_cast<unsigned>(num / gg), static_cast<unsigned>(den / gg)};
}

// Largest prime p with s - base^gamma < p < s (both ends open), or absent.
// The endpoint comparison is exact: p > s - base^gamma <=> (s-p)^{gd} < base^{gn}.
inline std::optional<uint64_t> prime_in_window(uint64_t s, uint64_t base,
                                               GammaExponent gamma = {}) {
    if (s < 3) throw std::invalid_argument("prime_in_window: s >= 3 required");
    for (uint64_t p = s - 1; p >= 2; --p) {
        if (!gap_below_gamma_pow(s, p, base, gamma.num, gamma.den)) break;  // left end passed
        if (is_prime(p)) return p;
    }
    return std::nullopt;
}

// The short-interval special case base = s: a prime in (s - s^gamma, s).
inline std::optional<uint64_t> prime_in_interval(uint64_t s, GammaExponent gamma = {}) {
    return prime_in_window(s, s, gamma);
}

// gcd of the t consecutive binomials C(k-1, k-t-1), ..., C(k-t, k-t-1).
struct GcdCondition {
    bool holds = false;
    BigInt gcd_value;
};

inline GcdCondition fw_gcd_condition(long long k, long long t) {
    if (t < 1 || k <= 2 * t)
        throw std::invalid_argument("fw_gcd_condition: require t >= 1 and k > 2t");
    BigInt g = 0;
    for (long long i = 1; i <= t; ++i) {
        g = boost::multiprecision::gcd(g, binomial(k - i, k - t - 1));
        if (g == 1) break;
    }
    return {g > 1, g};
}

// ---------------------------------------------------------------------------
// Missing-intersection bound pipeline: bound the size of a family of subsets
// of an n-element set in which no two members (nor any member's own size)
// intersect in exactly t elements. The decomposition by member size k:
//   k <= 2t:            each term <= C(n, 2t)
//   2t < k <= (n+t)/2:  pick the largest prime p in (k-t-n^gamma, k-t); then
//                       t_k = k - p lies in (t, t+n^gamma) and the term is
//                       <= C(n, p-1), itself <= C(n, floor((n-t)/2))
//   k >  (n+t)/2:       each term <= C(n, floor((n+t)/2))
// Total: n * C(n, floor((n+t)/2)).
// The window width is n^gamma, not (k-t)^gamma: the conclusion only needs
// t_k < t + n^gamma, and since k - t <= n the short-interval prime result
// implies this window is eventually nonempty a fortiori. (At desk scale the
// difference matters: (s - s^gamma, s) is empty at s = 29, which the instance
// n=100, t=19 hits at k=48, while (s - 100^gamma, s) contains 23.)
// ---------------------------------------------------------------------------

struct MisintPerK {
    long long k = 0;
    bool prime_found = false;
    uint64_t p = 0;        // the chosen prime
    long long t_k = 0;     // k - p
    Float50 term_log2;     // log2 C(n, p-1)
    bool term_capped = true;  // term <= C(n, floor((n-t)/2))
};

struct MisintReport {
    long long n = 0, t = 0;
    GammaExponent gamma;
    BigRat eps;
    std::vector<MisintPerK> per_k;
    bool all_primes_found = true;
    bool all_t_k_in_range = true;   // t <= t_k <= t + ceil(n^gamma)
    BigInt first_range_cap;         // C(n, 2t)
    BigInt middle_cap;              // C(n, floor((n-t)/2))
    BigInt final_cap_floor;         // C(n, floor((n+t)/2))
    BigInt final_cap_ceil;          // C(n, ceil((n+t)/2))
    BigInt total_bound;             // n * C(n, floor((n+t)/2))
    Float50 total_bound_log2;
};

inline MisintReport misint_bound(long long n, long long t, const BigRat& eps = BigRat(15, 100),
                                 GammaExponent gamma = {}) {
    // hypothesis: eps*n < t < n/5 (syntactic check; asymptotic validity is not
    // certified at finite n)
    if (!(BigRat(t) > eps * n && 5 * t < n))
        throw std::invalid_argument("misint_bound: hypothesis eps*n < t < n/5 violated");
    MisintReport rep;
    rep.n = n;
    rep.t = t;
    rep.gamma = gamma;
    rep.eps = eps;
    rep.first_range_cap = binomial(n, 2 * t);
    rep.middle_cap = binomial(n, (n - t) / 2);
    rep.final_cap_floor = binomial(n, (n + t) / 2);
    rep.final_cap_ceil = binomial(n, (n + t + 1) / 2);
    rep.total_bound = BigInt(n) * rep.final_cap_floor;
    rep.total_bound_log2 = log2_value(rep.total_bound);

    long long tk_cap = t + ceil_pow_frac(n, gamma.num, gamma.den);
    for (long long k = 2 * t + 1; 2 * k <= n + t; ++k) {
        MisintPerK row;
        row.k = k;
        uint64_t s = static_cast<uint64_t>(k - t);
        std::optional<uint64_t> p;
        if (s >= 3) p = prime_in_window(s, static_cast<uint64_t>(n), gamma);
        if (p) {
            row.prime_found = true;
            row.p = *p;
            row.t_k = k - static_cast<long long>(*p);
            BigInt term = binomial(n, static_cast<long long>(*p) - 1);
            row.term_log2 = term > 0 ? log2_value(term) : Float50(0);
            row.term_capped = term <= rep.middle_cap;
            if (!(t <= row.t_k && row.t_k <= tk_cap)) rep.all_t_k_in_range = false;
            if (!row.term_capped) rep.all_t_k_in_range = false;
        } else {
            rep.all_primes_found = false;
        }
        rep.per_k.push_back(row);
    }
    return rep;
}

// Sweep: for each s in [lo, hi], does the open interval (s - s^gamma, s)
// contain a prime? Returns the exceptional s (expected to be rare and small).
struct BhpSweepResult {
    uint64_t lo = 0, hi = 0;
    std::vector<uint64_t> failures;
};

inline BhpSweepResult bhp_sweep(uint64_t lo, uint64_t hi, GammaExponent gamma = {}) {
    if (lo < 3 || hi < lo) throw std::invalid_argument("bhp_sweep: require 3 <= lo <= hi");
    BhpSweepResult res;
    res.lo = lo;
    res.hi = hi;
    std::vector<bool> sieve = prime_sieve(hi);
    uint64_t last_prime = 0;
    for (uint64_t s = 2; s <= hi; ++s) {
        if (s >= lo) {
            // the largest prime strictly below s is the only candidate that
            // can witness the interval
            bool ok = last_prime >= 2 && within_gamma_window(s, last_prime, gamma.num, gamma.den);
            if (!ok) res.failures.push_back(s);
        }
        if (sieve[s]) last_prime = s;
    }
    return res;
}

}  // namespace specint
