#pragma once

// Named extremal families and pairs, with certification helpers and closed-form
// counts. Constructors materialize; certification is a separate call because
// pairwise certification is quadratic and some instances are produced at sizes
// where only the closed-form count is wanted.

#include <stdexcept>
#include <string>
#include <vector>

#include "specint/family.hpp"
#include "specint/intset.hpp"
#include "specint/numeric.hpp"

namespace specint {

// All unions of the fixed disjoint pairs {0,1}, {2,3}, ..., {n-2,n-1}.
// Size 2^{n/2}; every pairwise intersection (diagonal included) is even.
inline Family eventown(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("eventown: n must be even");
    if (n > 24) throw std::invalid_argument("eventown: n too large to materialize");
    int half = n / 2;
    std::vector<Mask> sets;
    sets.reserve(size_t(1) << half);
    for (Mask pick = 0; pick < (Mask(1) << half); ++pick) {
        Mask m = 0;
        for (int i = 0; i < half; ++i)
            if ((pick >> i) & 1) m |= Mask(3) << (2 * i);
        sets.push_back(m);
    }
    return Family(GroundSet(n), std::move(sets));
}

// The large-set family on V = {0..n-1} whose pairwise intersections all
// exceed t: when n+t is odd, all A with |A| >= (n+t+1)/2; when n+t is even,
// all A with |A n (V \ {0})| >= (n+t)/2 (deleted point fixed to element 0).
inline Family katona_family(int n, int t) {
    if (!(0 <= t && t < n)) throw std::invalid_argument("katona_family: require 0 <= t < n");
    if (n > 20) throw std::invalid_argument("katona_family: n too large to materialize");
    std::vector<Mask> sets;
    Mask full = GroundSet(n).full_mask();
    if ((n + t) % 2 == 1) {
        int thresh = (n + t + 1) / 2;
        for (Mask m = 0;; ++m) {
            if (std::popcount(m) >= thresh) sets.push_back(m);
            if (m == full) break;
        }
    } else {
        int thresh = (n + t) / 2;
        for (Mask m = 0;; ++m) {
            if (std::popcount(m & ~Mask(1)) >= thresh) sets.push_back(m);
            if (m == full) break;
        }
    }
    return Family(GroundSet(n), std::move(sets));
}

// Closed-form |katona_family(n, t)|.
inline BigInt katona_count(int n, int t) {
    if (!(0 <= t && t < n)) throw std::invalid_argument("katona_count: require 0 <= t < n");
    BigInt total = 0;
    if ((n + t) % 2 == 1) {
        for (int k = (n + t + 1) / 2; k <= n; ++k) total += binomial(n, k);
    } else {
        // element 0 is free, the other n-1 elements contribute >= (n+t)/2
        for (int k = (n + t) / 2; k <= n - 1; ++k) total += 2 * binomial(n - 1, k);
    }
    return total;
}

// katona_family(n, t) plus every set of size < t: no pairwise intersection
// (diagonal included) equals t.
inline Family frankl_family(int n, int t) {
    Family big = katona_family(n, t);
    std::vector<Mask> sets(big.sets().begin(), big.sets().end());
    Mask full = GroundSet(n).full_mask();
    for (Mask m = 0;; ++m) {
        if (std::popcount(m) < t) sets.push_back(m);
        if (m == full) break;
    }
    return Family(GroundSet(n), std::move(sets));
}

inline BigInt frankl_count(int n, int t) {
    return katona_count(n, t) + binomial_prefix(n, t - 1);
}

// The doubling pair: A = all subsets of V, B = all sets of size <= d-1, with
// M = {0..n} minus {d, 2d, ..., n}. Cross intersections have size <= d-1 < d,
// hence always lie in M; l(M) = d. Requires d | n.
struct RemarkPair {
    FamilyPair pair;
    IntSet M;
    int d = 0;
};

inline RemarkPair remark_pair(int n, int d) {
    if (d < 1 || n < 1 || n % d != 0)
        throw std::invalid_argument("remark_pair: require d >= 1 and d | n");
    if (n > 16) throw std::invalid_argument("remark_pair: n too large to materialize");
    RemarkPair r;
    r.d = d;
    r.pair.a = Family::power_set(GroundSet(n));
    std::vector<Mask> small;
    Mask full = GroundSet(n).full_mask();
    for (Mask m = 0;; ++m) {
        if (std::popcount(m) <= d - 1) small.push_back(m);
        if (m == full) break;
    }
    r.pair.b = Family(GroundSet(n), std::move(small));
    r.M = IntSet::range(n);
    for (int k = d; k <= n; k += d) r.M.erase(k);
    return r;
}

// log2(|A| |B|) = n + log2(sum_{i <= d-1} C(n, i)) for the doubling pair,
// computable without materializing (used at n far beyond desk scale).
inline Float50 remark_log_law(long long n, long long d) {
    if (d < 1 || n < 1) throw std::invalid_argument("remark_log_law: require n, d >= 1");
    return Float50(n) + log2_value(binomial_prefix(n, d - 1));
}

// The two-interval allowed set M = {0..t} u {t+width..n} with
// width = ceil(n^{21/40}): sizes strictly between t and t+width are omitted.
struct IntervalOmitSpec {
    int n = 0, t = 0;
    long long width = 0;      // ceil(n^{0.525})
    IntSet M;
    IntSet excluded;          // integers s with t < s < t+width
    int l_of_M = 0;
};

inline IntervalOmitSpec interval_omit_spec(int n, int t) {
    if (n < 1 || t < 0 || t > n)
        throw std::invalid_argument("interval_omit_spec: require n >= 1, 0 <= t <= n");
    IntervalOmitSpec spec;
    spec.n = n;
    spec.t = t;
    spec.width = ceil_pow_frac(n, 21, 40);
    spec.M = IntSet::range(n);
    for (long long s = t + 1; s < t + spec.width && s <= n; ++s) {
        spec.M.erase(static_cast<int>(s));
        spec.excluded.insert(static_cast<int>(s));
    }
    spec.l_of_M = spec.M.length_l();
    return spec;
}

}  // namespace specint
