#pragma once

// The recursive height function on finite integer sets.
//
//   h(empty) = 0
//   h(L) = 1 + max over candidates M of  min{ h(L n M), h(L n (M-1)) }
//
// where the candidate space is restricted to M subset of L u (L+1) with
// 1 <= |M| <= |L| and M != L. Any unrestricted M induces the same pair
// (L n M, L n (M-1)) as its trace on L u (L+1) without increasing |M|, so the
// restriction loses nothing (tested against an unrestricted oracle). At
// M = L+1 the second branch would self-reference L; monotonicity of h under
// subsets resolves the min to h(L n (L+1)), which is what we compute.
//
// Sets are represented as 64-bit masks (element i = bit i), so elements must
// lie in {0..62} (the shifted set L+1 needs one spare bit). Work grows like
// ~5^|L|; arguments with |L| > 14 are refused by default.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <bit>

#include "specint/family.hpp"
#include "specint/intset.hpp"
#include "specint/numeric.hpp"

namespace specint {

class HeightMemo {
  public:
    // Keys are absolute-position masks: h is not shift-invariant.
    std::map<uint64_t, int> table;

    HeightMemo() { table[0] = 0; }
};

namespace detail {

inline uint64_t intset_to_mask62(const IntSet& L, const char* who) {
    if (L.empty()) return 0;
    if (L.max() > 62)
        throw std::out_of_range(std::string(who) + ": elements must lie in {0..62}");
    return L.low_word();
}

inline int height_mask(uint64_t L, HeightMemo& memo, int size_limit) {
    if (L == 0) return 0;
    auto it = memo.table.find(L);
    if (it != memo.table.end()) return it->second;
    int card = std::popcount(L);
    if (card > size_limit)
        throw std::invalid_argument("height: |L| = " + std::to_string(card) +
                                    " exceeds the size limit " + std::to_string(size_limit));
    uint64_t shifted = L << 1;  // L+1
    uint64_t U = L | shifted;   // candidate universe L u (L+1)
    int best = -1;
    // Enumerate nonempty M subset of U.
    for (uint64_t M = U;; M = (M - 1) & U) {
        if (M == 0) break;
        if (M != L && std::popcount(M) <= card) {
            int term;
            if (M == shifted) {
                // M = L+1: L n (M-1) = L would self-reference; resolved by
                // monotonicity to the first branch alone.
                term = height_mask(L & shifted, memo, size_limit);
            } else {
                int h1 = height_mask(L & M, memo, size_limit);
                int h2 = height_mask(L & (M >> 1), memo, size_limit);
                term = h1 < h2 ? h1 : h2;
            }
            if (term > best) best = term;
        }
    }
    // A singleton M = {v} with v in L always qualifies, so best >= 0 here.
    int h = 1 + best;
    memo.table[L] = h;
    return h;
}

}  // namespace detail

inline constexpr int height_default_size_limit = 14;

inline int height(const IntSet& L, HeightMemo& memo,
                  int size_limit = height_default_size_limit) {
    return detail::height_mask(detail::intset_to_mask62(L, "height"), memo, size_limit);
}

inline int height(const IntSet& L) {
    HeightMemo memo;
    return height(L, memo);
}

// The two-term formulation: h(L) = 1 + max{ h(L n (L+1)),
// max over M in T(L) of min{h(L n M), h(L n (M-1))} } with T(L) excluding both
// L and L+1. Evaluates that right-hand side (inner h via the memoized
// recursion) and must agree with height(L).
inline int height_original(const IntSet& L, int brute_limit = 10) {
    uint64_t Lm = detail::intset_to_mask62(L, "height_original");
    if (Lm == 0) return 0;
    int card = std::popcount(Lm);
    if (card > brute_limit)
        throw std::invalid_argument("height_original: |L| exceeds the brute-force limit " +
                                    std::to_string(brute_limit));
    HeightMemo memo;
    uint64_t shifted = Lm << 1;
    uint64_t U = Lm | shifted;
    int best = detail::height_mask(Lm & shifted, memo, height_default_size_limit);
    for (uint64_t M = U;; M = (M - 1) & U) {
        if (M == 0) break;
        if (M != Lm && M != shifted && std::popcount(M) <= card) {
            int h1 = detail::height_mask(Lm & M, memo, height_default_size_limit);
            int h2 = detail::height_mask(Lm & (M >> 1), memo, height_default_size_limit);
            int term = h1 < h2 ? h1 : h2;
            if (term > best) best = term;
        }
    }
    return 1 + best;
}

// Oracle variant: maximize over ALL M subset of {0..universe_max} with
// 0 < |M| <= |L|, M != L (no restriction to L u (L+1)). Self-references
// L n (M-1) = L resolve to the first branch, as in the main recursion.
inline int height_unrestricted(const IntSet& L, int universe_max, HeightMemo& memo) {
    uint64_t Lm = detail::intset_to_mask62(L, "height_unrestricted");
    if (Lm == 0) return 0;
    if (universe_max < 0 || universe_max > 62)
        throw std::out_of_range("height_unrestricted: universe_max out of range");
    int card = std::popcount(Lm);
    uint64_t universe = universe_max == 62 ? (~uint64_t(0) >> 1)
                                           : ((uint64_t(1) << (universe_max + 1)) - 1);
    int best = -1;
    for (uint64_t M = universe;; M = (M - 1) & universe) {
        if (M == 0) break;
        if (M != Lm && std::popcount(M) <= card) {
            int term;
            if ((Lm & (M >> 1)) == Lm) {
                term = detail::height_mask(Lm & M, memo, height_default_size_limit);
            } else {
                int h1 = detail::height_mask(Lm & M, memo, height_default_size_limit);
                int h2 = detail::height_mask(Lm & (M >> 1), memo, height_default_size_limit);
                term = h1 < h2 ? h1 : h2;
            }
            if (term > best) best = term;
        }
    }
    return 1 + best;
}

// ---------------------------------------------------------------------------
// Axioms. A height function must satisfy, for all finite L, L':
//   A1: h(L) = 0 iff L empty
//   A2: L' subset of L          implies h(L') <= h(L)
//   A3: L' subset of L-1        implies h(L') <= h(L)
//   A4: for L or L' nonempty, with s = max{h(L), h(L')}:
//       min{ h(L' n L), h(L' n (L-1)) } <= s - 1
// ---------------------------------------------------------------------------

struct AxiomViolation {
    std::string axiom;
    IntSet L, Lp;
    std::string detail;
};

// Exhaustive check over all ordered pairs (L, L') of subsets of {0..N}.
inline std::vector<AxiomViolation> check_axioms(int N, HeightMemo* shared_memo = nullptr) {
    if (N < 0 || N > 20) throw std::invalid_argument("check_axioms: N out of range [0,20]");
    HeightMemo local;
    HeightMemo& memo = shared_memo ? *shared_memo : local;
    std::vector<AxiomViolation> out;
    const uint64_t top = (uint64_t(1) << (N + 1)) - 1;

    std::vector<int> h(top + 1);
    for (uint64_t L = 0; L <= top; ++L)
        h[L] = detail::height_mask(L, memo, height_default_size_limit);

    auto to_intset = [](uint64_t m) { return IntSet::from_low_word(m); };

    for (uint64_t L = 0; L <= top; ++L) {
        // A1
        if ((h[L] == 0) != (L == 0))
            out.push_back({"A1", to_intset(L), IntSet(), "h(L)=0 iff L empty violated"});
        for (uint64_t Lp = 0; Lp <= top; ++Lp) {
            // A2
            if ((Lp & ~L) == 0 && h[Lp] > h[L])
                out.push_back({"A2", to_intset(L), to_intset(Lp), "subset monotonicity"});
            // A3: L' subset of L-1
            if ((Lp & ~(L >> 1)) == 0 && h[Lp] > h[L])
                out.push_back({"A3", to_intset(L), to_intset(Lp), "shift monotonicity"});
            // A4
            if (L != 0 || Lp != 0) {
                int s = std::max(h[L], h[Lp]);
                int h1 = h[Lp & L];
                int h2 = h[Lp & (L >> 1)];
                if (std::min(h1, h2) > s - 1)
                    out.push_back({"A4", to_intset(L), to_intset(Lp),
                                   "min{h(L'nL), h(L'n(L-1))} = " +
                                       std::to_string(std::min(h1, h2)) + " > s-1 = " +
                                       std::to_string(s - 1)});
            }
        }
    }
    return out;
}

// s = max over B in B of h(signature of B against A); 0 iff either side empty.
inline int pair_height(const Family& A, const Family& B, HeightMemo& memo) {
    if (A.is_empty() || B.is_empty()) return 0;
    int best = 0;
    for (Mask b : B.sets()) {
        int h = height(signature(A, b), memo);
        if (h > best) best = h;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Bound formulas.
// ---------------------------------------------------------------------------

struct BoundReport {
    BigInt value;     // exact value when the bound is an integer (else 0)
    Float50 log2;     // log2 of the bound
    std::string formula;
};

// 2^{n+s-1} * C(n, s-1): the pair-product bound at signature height s.
inline BoundReport sgall_bound(int n, int s) {
    if (s < 1 || s > n + 1)
        throw std::invalid_argument("sgall_bound: require 1 <= s <= n+1");
    BigInt v = pow2_big(static_cast<unsigned>(n + s - 1)) * binomial(n, s - 1);
    return {v, log2_value(v), "2^{n+s-1} C(n,s-1)"};
}

// The sharp p2-style bound 1 + log(size)/log(2l/(2l-1)) and the relaxed
// 1 + 2 l log2(size). Logs are base 2 (the base cancels in the sharp form).
struct HeightBounds {
    Float50 sharp;
    Float50 relaxed;
};

inline HeightBounds height_upper_bound(int l, long long size) {
    if (l < 1) throw std::invalid_argument("height_upper_bound: l >= 1 required");
    if (size < 1) throw std::invalid_argument("height_upper_bound: size >= 1 required");
    Float50 ratio = Float50(2 * l) / Float50(2 * l - 1);
    Float50 sz(size);
    HeightBounds b;
    b.sharp = 1 + log2_value(sz) / log2_value(ratio);
    b.relaxed = 1 + Float50(2 * l) * log2_value(sz);
    return b;
}

// Exact form of the p2 inequality (2l/(2l-1))^{h-1} <= size.
inline bool p2_inequality_holds(int l, int h, long long size) {
    if (l < 1 || h < 1) return true;
    // (2l)^{h-1} <= size * (2l-1)^{h-1}
    BigInt lhs = boost::multiprecision::pow(BigInt(2 * l), static_cast<unsigned>(h - 1));
    BigInt rhs = BigInt(size) *
                 boost::multiprecision::pow(BigInt(2 * l - 1), static_cast<unsigned>(h - 1));
    return lhs <= rhs;
}

// Exact form of h <= 1 + 2 l log2(max(n,2)):
//   2^{h-1} <= max(n,2)^{2l}
inline bool height_log_bound_holds(int l, int h, int n) {
    if (h <= 1) return true;
    long long base = std::max(n, 2);
    BigInt rhs = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(2 * l));
    return pow2_big(static_cast<unsigned>(h - 1)) <= rhs;
}

// Witness chain: the sequence of maximizing candidates realizing h(L). Each
// entry records the chosen M and which branch (L n M or L n (M-1)) attained
// the min; replaying the chain decreases h by exactly one per step.
struct HeightChainEntry {
    IntSet M;
    IntSet next;       // the chosen branch set
    int branch;        // 0: L n M, 1: L n (M-1)
    int h_next;
};

struct HeightReport {
    IntSet L;
    int h = 0;
    std::vector<HeightChainEntry> witness_chain;
    BigRat bound_sharp;  // (2l/(2l-1))^{h-1}
};

inline HeightReport height_report(const IntSet& L, HeightMemo& memo) {
    HeightReport rep;
    rep.L = L;
    rep.h = height(L, memo);
    int l = L.length_l();
    if (l >= 1 && rep.h >= 1) {
        BigRat ratio(2 * l, 2 * l - 1);
        rep.bound_sharp = 1;
        for (int i = 0; i < rep.h - 1; ++i) rep.bound_sharp *= ratio;
    } else {
        rep.bound_sharp = 1;
    }
    uint64_t cur = detail::intset_to_mask62(L, "height_report");
    while (cur != 0) {
        int hcur = detail::height_mask(cur, memo, height_default_size_limit);
        uint64_t shifted = cur << 1;
        uint64_t U = cur | shifted;
        int card = std::popcount(cur);
        bool found = false;
        for (uint64_t M = U; M != 0 && !found; M = (M - 1) & U) {
            if (M == cur || std::popcount(M) > card) continue;
            uint64_t b0 = cur & M;
            uint64_t b1 = cur & (M >> 1);
            int term, branch;
            uint64_t next;
            if (M == shifted) {
                term = detail::height_mask(b0, memo, height_default_size_limit);
                branch = 0;
                next = b0;
            } else {
                int h0 = detail::height_mask(b0, memo, height_default_size_limit);
                int h1 = detail::height_mask(b1, memo, height_default_size_limit);
                if (h0 <= h1) {
                    term = h0;
                    branch = 0;
                    next = b0;
                } else {
                    term = h1;
                    branch = 1;
                    next = b1;
                }
            }
            if (term == hcur - 1) {
                rep.witness_chain.push_back({IntSet::from_low_word(M),
                                             IntSet::from_low_word(next), branch, term});
                cur = next;
                found = true;
            }
        }
        if (!found) break;  // unreachable: the maximizer always exists
    }
    return rep;
}

}  // namespace specint
