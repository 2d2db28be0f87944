// Height recursion, axioms, the p2 inequality, pair heights and the
// 2^{n+s-1} C(n,s-1) product bound.

#include <catch2/catch_amalgamated.hpp>

#include "specint/family.hpp"
#include "specint/height.hpp"
#include "specint/rng.hpp"

using namespace specint;

TEST_CASE("height of small canonical sets") {
    CHECK(height(IntSet()) == 0);
    CHECK(height(IntSet::of({0})) == 1);
    CHECK(height(IntSet::of({4})) == 1);
    CHECK(height(IntSet::of({0, 1})) == 2);
    CHECK(height(IntSet::of({0, 1, 2, 3})) == 4);
    CHECK(height(IntSet::of({0, 2})) == 2);
}

TEST_CASE("height agrees with the two-term original recursion") {
    HeightMemo memo;
    for (uint64_t m = 0; m < (uint64_t(1) << 10); ++m) {
        IntSet L = IntSet::from_low_word(m);
        CHECK(height(L, memo) == height_original(L));
    }
}

TEST_CASE("height is monotone under taking subsets") {
    HeightMemo memo;
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        uint64_t m = rng.below(uint64_t(1) << 11);
        uint64_t sub = m & rng.below(uint64_t(1) << 11);
        CHECK(height(IntSet::from_low_word(sub), memo) <= height(IntSet::from_low_word(m), memo));
    }
}

TEST_CASE("axioms hold over the full {0..5} double sweep") {
    auto violations = check_axioms(5);
    for (const auto& v : violations)
        UNSCOPED_INFO("axiom " << v.axiom << " at L=" << format_intset(v.L)
                               << " L'=" << format_intset(v.Lp) << ": " << v.detail);
    CHECK(violations.empty());
}

TEST_CASE("p2: (2l/(2l-1))^{h-1} <= |W| and h <= |W| over subsets of {0..7}") {
    HeightMemo memo;
    for (uint64_t m = 1; m < (uint64_t(1) << 8); ++m) {
        IntSet W = IntSet::from_low_word(m);
        int h = height(W, memo);
        int l = W.length_l();
        CHECK(h <= W.size());
        CHECK(p2_inequality_holds(l, h, W.size()));
    }
}

TEST_CASE("height_upper_bound dominates the true height") {
    HeightMemo memo;
    const Float50 slack("1e-20");  // float round-off on an exact inequality
    for (uint64_t m = 1; m < (uint64_t(1) << 9); ++m) {
        IntSet W = IntSet::from_low_word(m);
        HeightBounds hb = height_upper_bound(std::max(W.length_l(), 1), W.size());
        Float50 h(height(W, memo));
        CHECK(h <= hb.sharp + slack);
        CHECK(h <= hb.relaxed + slack);
        CHECK(hb.sharp <= hb.relaxed + slack);
    }
}

TEST_CASE("pair_height bounds max signature height on both sides") {
    HeightMemo memo;
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4;
        std::vector<Mask> av, bv;
        for (Mask m = 0; m < 16; ++m) {
            if (rng.chance(0.5)) av.push_back(m);
            if (rng.chance(0.5)) bv.push_back(m);
        }
        if (av.empty()) av.push_back(1);
        if (bv.empty()) bv.push_back(2);
        Family A(GroundSet(n), av), B(GroundSet(n), bv);
        int s = pair_height(A, B, memo);
        int observed = 0;
        for (Mask b : B.sets()) {
            int h = height(signature(A, b), memo);
            CHECK(h <= s);
            observed = std::max(observed, h);
        }
        CHECK(s == observed);  // the max is attained, nothing more
    }
}

TEST_CASE("sgall_bound evaluates 2^{n+s-1} C(n,s-1) exactly") {
    BoundReport b = sgall_bound(5, 2);
    CHECK(b.value == BigInt(64) * 5);  // 2^6 * C(5,1)
    CHECK_THROWS_AS(sgall_bound(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(sgall_bound(5, 7), std::invalid_argument);
}

TEST_CASE("random pairs satisfy the Sgall product bound") {
    HeightMemo memo;
    Rng rng(20260818);
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Mask> av, bv;
            const Mask top = Mask(1) << n;
            for (Mask m = 0; m < top; ++m) {
                if (rng.chance(0.5)) av.push_back(m);
                if (rng.chance(0.5)) bv.push_back(m);
            }
            if (av.empty()) av.push_back(0);
            if (bv.empty()) bv.push_back(0);
            Family A(GroundSet(n), av), B(GroundSet(n), bv);
            int s = std::max(pair_height(A, B, memo), 1);
            BigInt product = BigInt(static_cast<long long>(A.size())) *
                             static_cast<long long>(B.size());
            CHECK(product <= sgall_bound(n, s).value);
        }
    }
}

TEST_CASE("height_report returns a witness chain consistent with h") {
    HeightMemo memo;
    IntSet L = IntSet::of({0, 1, 5});
    HeightReport rep = height_report(L, memo);
    CHECK(rep.h == height(L));
    CHECK(rep.witness_chain.size() == static_cast<size_t>(rep.h));
    // each chain entry drops height by exactly one
    int expect = rep.h;
    for (const auto& e : rep.witness_chain) {
        CHECK(e.h_next == expect - 1);
        expect = e.h_next;
    }
}
