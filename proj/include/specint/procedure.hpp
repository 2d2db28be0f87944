#pragma once

// The iterative decomposition procedure on a pair of families (F, G) over a
// shrinking ground set, with every accept/reject comparison decided exactly.
//
// State: families F, G on ground {0..m-1}, a forbidden intersection-size set P
// (maintained against the ORIGINAL {0..n} and only ever shifted or unioned),
// and the constants
//   eps = 2/10^4,  a0 = 6 - 2 sqrt(5),  delta = 7/1000,  a = a0 - delta.
//
// For a vertex v the five cases are (densities p(H) = |H| / 2^ground):
//   C1:  p(F1) p(G1)       > a   p(F) p(G)  -> continue (F1, G1),       P <- P-1
//   C2:  p(G0 u G1) p(F0)  > a   p(F) p(G)  -> continue (F0, G0 u G1),  P unchanged
//   C2s: p(F0 u F1) p(G0)  > a   p(F) p(G)  -> continue (F0 u F1, G0),  P unchanged
//   C3:  p(G0 n G1) p(F1)  > eps p(F) p(G)  -> continue (F1, G0 n G1),  P <- (P-1) u P
//   C3s: p(F0 n F1) p(G1)  > eps p(F) p(G)  -> continue (F0 n F1, G1),  P <- (P-1) u P
// where H1/H0 are the link/deletion families re-indexed onto the smaller
// ground set. C2s/C3s are the mirror images of C2/C3 with the roles of F and
// G exchanged (C1 is its own mirror). Both orientations must be tested: on a
// stop state the dichotomy argument needs, for EVERY vertex, either the
// F-side failures (not-C2, not-C3) or the G-side failures (not-C2s, not-C3s)
// to force a small link density, and the one-sided rule provably cannot
// deliver the G-side half. A vertex is classified by the FIRST case that
// holds, in the order C1, C2, C2s, C3, C3s (a-factor cases before eps-factor
// cases; unswapped before mirrored). The run stops when no vertex qualifies,
// a family empties, or the ground set is exhausted.
//
// Because the grounds of both products agree, each test reduces to an exact
// integer/surd comparison:
//   C1:   4 |F1| |G1|        > a |F| |G|
//   C2:   4 |G0 u G1| |F0|   > a |F| |G|
//   C2s:  4 |F0 u F1| |G0|   > a |F| |G|
//   C3:   2*10^4 |G0 n G1| |F1| > |F| |G|
//   C3s:  2*10^4 |F0 n F1| |G1| > |F| |G|

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specint/family.hpp"
#include "specint/intset.hpp"
#include "specint/numeric.hpp"
#include "specint/surd.hpp"

namespace specint {

struct Constants {
    BigRat eps = eps_rational();        // 2/10^4
    Surd5 a0 = surd_a0();               // 6 - 2 sqrt(5)
    BigRat delta = BigRat(7, 1000);
    Surd5 a = surd_a();                 // a0 - delta
};

// f(x) = 2 - x / (2 - sqrt(x)), defined for 0 <= x < 4.
inline Float50 f_value(const Float50& x) {
    if (x < 0 || x >= 4) throw std::domain_error("f_value: require 0 <= x < 4");
    using boost::multiprecision::sqrt;
    if (x == 0) return Float50(2);
    return 2 - x / (2 - sqrt(x));
}

// Numeric values follow the priority order so that "every earlier case
// failed" is a comparison on the enum value.
enum class StepCase : int { None = 0, C1 = 1, C2 = 2, C2S = 3, C3 = 4, C3S = 5, Stop = 9 };

inline const char* to_string(StepCase c) {
    switch (c) {
        case StepCase::C1: return "C1";
        case StepCase::C2: return "C2";
        case StepCase::C2S: return "C2s";
        case StepCase::C3: return "C3";
        case StepCase::C3S: return "C3s";
        case StepCase::Stop: return "STOP";
        default: return "NONE";
    }
}

// True for the cases that advance the chain inequality by the eps factor
// (and replace P by (P-1) u P); the other three advance it by the a factor.
inline bool is_eps_case(StepCase c) { return c == StepCase::C3 || c == StepCase::C3S; }

// Exact comparison artifacts for one vertex: the subset counts entering the
// five tests and each test's outcome.
struct ClassifyArtifacts {
    long long cF = 0, cG = 0;          // |F|, |G|
    long long cF1 = 0, cF0 = 0;        // |F1(v)|, |F0(v)|
    long long cG1 = 0, cG0 = 0;
    long long cG_union = 0;            // |G0 u G1|
    long long cG_inter = 0;            // |G0 n G1|
    long long cF_union = 0;            // |F0 u F1|
    long long cF_inter = 0;            // |F0 n F1|
    bool c1 = false, c2 = false, c2s = false, c3 = false, c3s = false;

    // Outcomes in priority order, for "all earlier cases failed" checks.
    std::array<bool, 5> in_priority_order() const { return {c1, c2, c2s, c3, c3s}; }
};

struct ClassifyResult {
    StepCase chosen = StepCase::None;
    ClassifyArtifacts artifacts;
    Family F_next, G_next;  // successors when chosen != None
    IntSet P_after;
};

inline ClassifyResult classify_step(const Family& F, const Family& G, const IntSet& P, int v,
                                    int original_n) {
    if (F.is_empty() || G.is_empty())
        throw std::invalid_argument("classify_step: families must be nonempty");
    ClassifyResult r;
    ClassifyArtifacts& a = r.artifacts;
    a.cF = static_cast<long long>(F.size());
    a.cG = static_cast<long long>(G.size());

    Family F1 = F.restrict1(v), F0 = F.restrict0(v);
    Family G1 = G.restrict1(v), G0 = G.restrict0(v);
    Family Gu = G0.set_union(G1);
    Family Gi = G0.set_intersection(G1);
    Family Fu = F0.set_union(F1);
    Family Fi = F0.set_intersection(F1);
    a.cF1 = static_cast<long long>(F1.size());
    a.cF0 = static_cast<long long>(F0.size());
    a.cG1 = static_cast<long long>(G1.size());
    a.cG0 = static_cast<long long>(G0.size());
    a.cG_union = static_cast<long long>(Gu.size());
    a.cG_inter = static_cast<long long>(Gi.size());
    a.cF_union = static_cast<long long>(Fu.size());
    a.cF_inter = static_cast<long long>(Fi.size());

    BigRat fg = BigRat(a.cF) * a.cG;
    a.c1 = rational_gt_a_times(BigRat(4) * a.cF1 * a.cG1, fg);
    a.c2 = rational_gt_a_times(BigRat(4) * a.cG_union * a.cF0, fg);
    a.c2s = rational_gt_a_times(BigRat(4) * a.cF_union * a.cG0, fg);
    a.c3 = BigInt(20000) * a.cG_inter * a.cF1 > BigInt(a.cF) * a.cG;
    a.c3s = BigInt(20000) * a.cF_inter * a.cG1 > BigInt(a.cF) * a.cG;

    if (a.c1) {
        r.chosen = StepCase::C1;
        r.F_next = std::move(F1);
        r.G_next = std::move(G1);
        r.P_after = P.shift(-1, original_n);
    } else if (a.c2) {
        r.chosen = StepCase::C2;
        r.F_next = std::move(F0);
        r.G_next = std::move(Gu);
        r.P_after = P;
    } else if (a.c2s) {
        r.chosen = StepCase::C2S;
        r.F_next = std::move(Fu);
        r.G_next = std::move(G0);
        r.P_after = P;
    } else if (a.c3) {
        r.chosen = StepCase::C3;
        r.F_next = std::move(F1);
        r.G_next = std::move(Gi);
        r.P_after = P.shift(-1, original_n).set_union(P);
    } else if (a.c3s) {
        r.chosen = StepCase::C3S;
        r.F_next = std::move(Fi);
        r.G_next = std::move(G1);
        r.P_after = P.shift(-1, original_n).set_union(P);
    }
    return r;
}

struct StepRecord {
    int index = 0;   // 0-based step number
    int vertex = 0;  // vertex chosen within the CURRENT ground set
    StepCase step_case = StepCase::None;
    IntSet P_before, P_after;
    DyadicRational pF, pG;            // densities before the step
    DyadicRational pF_after, pG_after;
    ClassifyArtifacts artifacts;
};

// Exact test p(H1(v)) < sqrt(eps) p(H)  <=>  2*10^4 |H1|^2 < |H|^2.
inline bool link_below_sqrt_eps(long long h1, long long h) {
    return BigInt(20000) * h1 * h1 < BigInt(h) * h;
}

// sigma(m) = 4 log2(sqrt(eps) m)/m + (sqrt(eps)/2) log2(2e / sqrt(eps)).
inline double sigma_value(long long m) {
    if (m <= 0) throw std::domain_error("sigma_value: m >= 1 required");
    const double sqrt_eps = std::sqrt(2.0e-4);
    const double e = 2.718281828459045235360287471352662498;
    return 4.0 * std::log2(sqrt_eps * static_cast<double>(m)) / static_cast<double>(m) +
           0.5 * sqrt_eps * std::log2(2.0 * e / sqrt_eps);
}

struct StoppedStateReport {
    int remaining_ground = 0;  // m = |V| at the stop state
    IntSet W_F, W_G;           // partition of the remaining ground set
    int x = 0, y = 0;          // |W_F|, |W_G|
    long long s = 0, t = 0;    // ceil(sqrt(eps)/2 * x), ceil(sqrt(eps)/2 * y)
    bool claim_ok = true;      // every v: link density small on the F or the G side
    BigInt edges_F, edges_G;   // sum over S of |S n W| on each side
    bool edge_ok_F = true, edge_ok_G = true;
    BigInt counting_bound_F, counting_bound_G;  // (s+1) C(x,<=s) 2^{m-x} etc.
    bool counting_claim_ok = true;
    std::optional<double> sigma;  // absent when m = 0
};

// Analyze a state where no vertex admits any case: classify each remaining
// vertex into W_F = {v : p(F1(v)) < sqrt(eps) p(F)} and W_G = rest; check that
// on W_G the G-side link is small (the stop-state dichotomy), the edge-count
// inequality sum_{S in H} |S n W| < (sqrt(eps)/2) |W| |H| on each side, and the
// counting bound |H| <= (s+1) * sum_{i<=s} C(|W|, i) * 2^{m-|W|}.
inline StoppedStateReport stopped_state_analysis(const Family& F, const Family& G) {
    if (F.is_empty() || G.is_empty())
        throw std::invalid_argument("stopped_state_analysis: families must be nonempty");
    if (F.n() != G.n())
        throw std::invalid_argument("stopped_state_analysis: ground sets differ");
    StoppedStateReport rep;
    int m = F.n();
    rep.remaining_ground = m;
    long long cF = static_cast<long long>(F.size());
    long long cG = static_cast<long long>(G.size());

    for (int v = 0; v < m; ++v) {
        long long f1 = 0, g1 = 0;
        for (Mask s : F.sets())
            if ((s >> v) & 1) ++f1;
        for (Mask s : G.sets())
            if ((s >> v) & 1) ++g1;
        if (link_below_sqrt_eps(f1, cF)) {
            rep.W_F.insert(v);
        } else {
            rep.W_G.insert(v);
            if (!link_below_sqrt_eps(g1, cG)) rep.claim_ok = false;
        }
    }
    rep.x = rep.W_F.size();
    rep.y = rep.W_G.size();
    rep.s = ceil_half_sqrt_eps(rep.x);
    rep.t = ceil_half_sqrt_eps(rep.y);

    auto count_edges = [](const Family& H, const IntSet& W) {
        uint64_t wmask = W.low_word();
        BigInt e = 0;
        for (Mask s : H.sets()) e += std::popcount(s & wmask);
        return e;
    };
    rep.edges_F = count_edges(F, rep.W_F);
    rep.edges_G = count_edges(G, rep.W_G);
    // E < (sqrt(eps)/2) x |H|  <=>  2*10^4 E^2 < x^2 |H|^2 (strict needs x > 0)
    if (rep.x > 0)
        rep.edge_ok_F = BigInt(20000) * rep.edges_F * rep.edges_F <
                        BigInt(rep.x) * rep.x * cF * cF;
    else
        rep.edge_ok_F = rep.edges_F == 0;
    if (rep.y > 0)
        rep.edge_ok_G = BigInt(20000) * rep.edges_G * rep.edges_G <
                        BigInt(rep.y) * rep.y * cG * cG;
    else
        rep.edge_ok_G = rep.edges_G == 0;

    rep.counting_bound_F = BigInt(rep.s + 1) * binomial_prefix(rep.x, rep.s) *
                           pow2_big(static_cast<unsigned>(m - rep.x));
    rep.counting_bound_G = BigInt(rep.t + 1) * binomial_prefix(rep.y, rep.t) *
                           pow2_big(static_cast<unsigned>(m - rep.y));
    rep.counting_claim_ok =
        BigInt(cF) <= rep.counting_bound_F && BigInt(cG) <= rep.counting_bound_G;

    if (m > 0) rep.sigma = sigma_value(m);
    return rep;
}

enum class StopReason { NoneApply, FamilyEmpty, GroundExhausted };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::NoneApply: return "no_case_applies";
        case StopReason::FamilyEmpty: return "family_empty";
        default: return "ground_exhausted";
    }
}

enum class Strategy { First, Greedy };

inline Strategy parse_strategy(const std::string& s) {
    if (s == "first") return Strategy::First;
    if (s == "greedy") return Strategy::Greedy;
    throw std::invalid_argument("strategy must be 'first' or 'greedy'");
}

struct ProcedureTrace {
    int n0 = 0;                  // initial ground size
    IntSet M, P0;                // allowed sizes and initial forbidden set
    Strategy strategy = Strategy::First;
    Family A0, B0;               // initial pair
    std::vector<StepRecord> steps;
    Family F_final, G_final;
    StopReason stop_reason = StopReason::NoneApply;
    std::optional<StoppedStateReport> stop_state;

    // Number of eps-factor steps (C3 or C3s); each replaces P by (P-1) u P,
    // so this count is bounded by l(M).
    int c3_count() const {
        int c = 0;
        for (const auto& s : steps)
            if (is_eps_case(s.step_case)) ++c;
        return c;
    }
};

// Run the procedure. Precondition: (A, B) is a cross-M-intersecting pair and
// both families are nonempty.
inline ProcedureTrace run_procedure(const FamilyPair& pair, const IntSet& M, Strategy strategy) {
    const Family& A = pair.a;
    const Family& B = pair.b;
    if (A.is_empty() || B.is_empty())
        throw std::invalid_argument("run_procedure: both families must be nonempty");
    if (!(A.ground() == B.ground()))
        throw std::invalid_argument("run_procedure: ground sets differ");
    int n0 = A.n();
    if (auto chk = is_intersecting_pair(A, B, M); !chk.ok)
        throw std::invalid_argument(
            "run_procedure: pair is not M-intersecting (witness intersection size " +
            std::to_string(chk.intersection_size) + ")");

    ProcedureTrace tr;
    tr.n0 = n0;
    tr.M = M;
    tr.P0 = M.complement(n0);
    tr.strategy = strategy;
    tr.A0 = A;
    tr.B0 = B;

    Family F = A, G = B;
    IntSet P = tr.P0;
    int index = 0;
    for (;;) {
        if (F.is_empty() || G.is_empty()) {
            tr.stop_reason = StopReason::FamilyEmpty;
            break;
        }
        int m = F.n();
        if (m == 0) {
            tr.stop_reason = StopReason::GroundExhausted;
            break;
        }
        std::optional<ClassifyResult> chosen;
        int chosen_v = -1;
        if (strategy == Strategy::First) {
            for (int v = 0; v < m; ++v) {
                ClassifyResult c = classify_step(F, G, P, v, n0);
                if (c.chosen != StepCase::None) {
                    chosen = std::move(c);
                    chosen_v = v;
                    break;
                }
            }
        } else {
            BigInt best_gain = -1;
            for (int v = 0; v < m; ++v) {
                ClassifyResult c = classify_step(F, G, P, v, n0);
                if (c.chosen != StepCase::None) {
                    BigInt gain = BigInt(c.F_next.size()) * BigInt(c.G_next.size());
                    if (gain > best_gain) {  // strict: ties keep the lowest v
                        best_gain = gain;
                        chosen = std::move(c);
                        chosen_v = v;
                    }
                }
            }
        }
        if (!chosen) {
            tr.stop_reason = StopReason::NoneApply;
            break;
        }
        StepRecord rec;
        rec.index = index++;
        rec.vertex = chosen_v;
        rec.step_case = chosen->chosen;
        rec.P_before = P;
        rec.P_after = chosen->P_after;
        rec.pF = F.density();
        rec.pG = G.density();
        rec.pF_after = chosen->F_next.density();
        rec.pG_after = chosen->G_next.density();
        rec.artifacts = chosen->artifacts;
        tr.steps.push_back(rec);
        F = std::move(chosen->F_next);
        G = std::move(chosen->G_next);
        P = chosen->P_after;
    }
    tr.F_final = F;
    tr.G_final = G;
    if (!F.is_empty() && !G.is_empty()) tr.stop_state = stopped_state_analysis(F, G);
    return tr;
}

// Re-verify a trace from its raw initial families: every step's case recomputes
// identically (with all earlier-priority cases failing), P evolves correctly,
// the remaining pair stays P-omitting, the number of eps-factor steps (C3 or
// C3s) is at most l(M), the exact chain inequality
//   p(F_i) p(G_i) > a^{i-j} eps^j p(A) p(B)   (j = #eps-steps among the first i)
// holds at every step, and on a no-case stop state the dichotomy and counting
// claims hold. Returns human-readable violations (expected empty).
inline std::vector<std::string> verify_trace(const ProcedureTrace& tr) {
    std::vector<std::string> bad;
    const auto vio = [&bad](const std::string& s) { bad.push_back(s); };

    Family F = tr.A0, G = tr.B0;
    IntSet P = tr.M.complement(tr.n0);
    if (!(P == tr.P0)) vio("initial P does not match complement of M");

    BigRat pA_pB = tr.A0.density().to_rational() * tr.B0.density().to_rational();
    int eps_seen = 0;
    const Surd5 a = surd_a();
    const BigRat eps = eps_rational();
    constexpr size_t omit_budget = size_t(1) << 20;

    for (size_t i = 0; i < tr.steps.size(); ++i) {
        const StepRecord& st = tr.steps[i];
        if (F.is_empty() || G.is_empty()) {
            vio("step " + std::to_string(i) + ": family empty before step");
            break;
        }
        if (st.vertex < 0 || st.vertex >= F.n()) {
            vio("step " + std::to_string(i) + ": vertex out of range");
            break;
        }
        if (!(st.P_before == P))
            vio("step " + std::to_string(i) + ": recorded P_before mismatch");
        ClassifyResult c = classify_step(F, G, P, st.vertex, tr.n0);
        if (c.chosen != st.step_case)
            vio("step " + std::to_string(i) + ": case mismatch (recorded " +
                to_string(st.step_case) + ", recomputed " + to_string(c.chosen) + ")");
        if (c.chosen == StepCase::None) break;
        // case-priority: every earlier-priority test must have failed
        {
            auto flags = c.artifacts.in_priority_order();
            int rank = static_cast<int>(c.chosen) - 1;  // C1 -> 0 ... C3s -> 4
            for (int k = 0; k < rank; ++k)
                if (flags[static_cast<size_t>(k)])
                    vio("step " + std::to_string(i) + ": case " +
                        to_string(static_cast<StepCase>(k + 1)) + " also held but " +
                        to_string(c.chosen) + " recorded");
        }
        if (!(st.P_after == c.P_after))
            vio("step " + std::to_string(i) + ": recorded P_after mismatch");
        if (!(st.pF == F.density()) || !(st.pG == G.density()))
            vio("step " + std::to_string(i) + ": recorded densities mismatch");
        if (is_eps_case(st.step_case)) ++eps_seen;

        F = std::move(c.F_next);
        G = std::move(c.G_next);
        P = c.P_after;
        if (!(st.pF_after == F.density()) || !(st.pG_after == G.density()))
            vio("step " + std::to_string(i) + ": recorded successor densities mismatch");

        // invariant: the evolved pair omits the evolved P
        if (F.size() * G.size() <= omit_budget) {
            if (auto chk = is_omitting_pair(F, G, P); !chk.ok)
                vio("step " + std::to_string(i) + ": pair fails to omit P (size " +
                    std::to_string(chk.intersection_size) + " occurs)");
        }

        // exact chain inequality at step i+1
        if (!F.is_empty() && !G.is_empty()) {
            BigRat lhs = F.density().to_rational() * G.density().to_rational();
            unsigned steps_done = static_cast<unsigned>(i + 1);
            BigRat eps_pow = 1;
            for (int k = 0; k < eps_seen; ++k) eps_pow *= eps;
            Surd5 rhs = a.pow(steps_done - static_cast<unsigned>(eps_seen)) *
                        (eps_pow * pA_pB);
            if (!((Surd5(lhs) - rhs).sign() > 0))
                vio("step " + std::to_string(i) + ": chain inequality fails");
        } else {
            vio("step " + std::to_string(i) + ": a family emptied mid-run");
            break;
        }
    }

    if (!(F == tr.F_final) || !(G == tr.G_final))
        vio("final families do not match the replay");

    int l = tr.M.length_l();
    if (tr.c3_count() > l)
        vio("eps-factor cases fired " + std::to_string(tr.c3_count()) +
            " times, exceeding l(M) = " + std::to_string(l));

    if (tr.stop_reason == StopReason::NoneApply) {
        if (F.is_empty() || G.is_empty()) {
            vio("stop reason no_case_applies but a family is empty");
        } else {
            // genuineness: no vertex admits any case
            for (int v = 0; v < F.n(); ++v) {
                ClassifyResult c = classify_step(F, G, P, v, tr.n0);
                if (c.chosen != StepCase::None) {
                    vio("stop state not genuine: vertex " + std::to_string(v) +
                        " admits case " + to_string(c.chosen));
                    break;
                }
            }
            // stop-state dichotomy and counting claims
            StoppedStateReport rep = stopped_state_analysis(F, G);
            if (!rep.claim_ok)
                vio("stop-state dichotomy fails: some vertex has large link density on "
                    "both sides");
            if (!rep.edge_ok_F || !rep.edge_ok_G) vio("stop-state edge-count inequality fails");
            if (!rep.counting_claim_ok) vio("stop-state counting claim fails");
            if (tr.stop_state) {
                if (!(tr.stop_state->W_F == rep.W_F) || !(tr.stop_state->W_G == rep.W_G))
                    vio("recorded stop-state partition mismatch");
            }
        }
    }
    return bad;
}

// ---------------------------------------------------------------------------
// Closed-form size bounds (reported in log2 space).
// ---------------------------------------------------------------------------

struct TwoBounds {
    Float50 first_log2;   // n log2(2.631) + (4l+10) log2(10)
    Float50 second_log2;  // n + 2 l (log2 n)^2
    Float50 min_log2;
};

// Bounds on the pair product |A||B| for a P-omitting pair with l(M) = l.
inline TwoBounds pair_product_bounds(int n, int l) {
    if (n < 1 || l < 0) throw std::invalid_argument("pair_product_bounds: n >= 1, l >= 0");
    Float50 log2_2631 = log2_value(Float50(2631) / 1000);
    Float50 log2_10 = log2_value(Float50(10));
    Float50 ln = log2_value(Float50(n));
    TwoBounds b;
    b.first_log2 = Float50(n) * log2_2631 + Float50(4 * l + 10) * log2_10;
    b.second_log2 = Float50(n) + Float50(2 * l) * ln * ln;
    b.min_log2 = std::min(b.first_log2, b.second_log2);
    return b;
}

// Single-family bounds: exactly half of the pair exponents (square-root
// relation, since |A|^2 <= |A||A|).
inline TwoBounds single_family_bounds(int n, int l) {
    TwoBounds b = pair_product_bounds(n, l);
    b.first_log2 /= 2;
    b.second_log2 /= 2;
    b.min_log2 = std::min(b.first_log2, b.second_log2);
    return b;
}

// ---------------------------------------------------------------------------
// Constants identities.
// ---------------------------------------------------------------------------

struct ConstantsReport {
    double f_a0;                 // f(6 - 2 sqrt 5), expected 0 to ~1e-12
    bool f_a0_ok = false;
    double f_a;                  // f(a)
    double sqrt_eps;
    bool f_a_exceeds_float = false;
    bool f_a_exceeds_exact = false;
    double four_over_a;
    bool four_over_a_ok = false;   // in (2.630, 2.631), exact
    double one_minus_log2_a;
    bool log_bound_ok = false;     // 1 - log2 a > 0.38, exact
    double sigma_max;
    long long sigma_argmax = 0;
    bool sigma_ok = false;         // max over 1 <= m <= 10^6 below 0.1
    bool all_ok = false;
};

inline ConstantsReport constants_report() {
    ConstantsReport r;
    Surd5 a = surd_a();
    Float50 fa0 = f_value(surd_a0().to_float50());
    r.f_a0 = fa0.convert_to<double>();
    r.f_a0_ok = boost::multiprecision::abs(fa0) < Float50("1e-12");

    Float50 fa = f_value(a.to_float50());
    r.f_a = fa.convert_to<double>();
    Float50 se = boost::multiprecision::sqrt(Float50(2) / 10000);
    r.sqrt_eps = se.convert_to<double>();
    r.f_a_exceeds_float = fa > se;
    r.f_a_exceeds_exact = f_exceeds_sqrt_eps(a);

    r.four_over_a = (Float50(4) / a.to_float50()).convert_to<double>();
    r.four_over_a_ok = four_over_a_between(BigRat(2630, 1000), BigRat(2631, 1000));

    r.one_minus_log2_a = (1 - log2_value(a.to_float50())).convert_to<double>();
    r.log_bound_ok = one_minus_log2_a_exceeds_038();

    r.sigma_max = -1e300;
    for (long long m = 1; m <= 1000000; ++m) {
        double s = sigma_value(m);
        if (s > r.sigma_max) {
            r.sigma_max = s;
            r.sigma_argmax = m;
        }
    }
    r.sigma_ok = r.sigma_max < 0.1;

    r.all_ok = r.f_a0_ok && r.f_a_exceeds_float && r.f_a_exceeds_exact && r.four_over_a_ok &&
               r.log_bound_ok && r.sigma_ok;
    return r;
}

}  // namespace specint
