// Core value types: IntSet, Family, densities, restrictions, the family file
// format and the IntSet literal grammar.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specint/family.hpp"
#include "specint/intset.hpp"
#include "specint/rng.hpp"

using namespace specint;

TEST_CASE("length_l measures the longest run of consecutive members") {
    CHECK(IntSet().length_l() == 0);
    CHECK(IntSet::of({3}).length_l() == 1);
    CHECK(IntSet::of({0, 1, 2, 5, 6}).length_l() == 3);
    CHECK(IntSet::of({0, 2, 4, 6}).length_l() == 1);
    CHECK(IntSet::range(9).length_l() == 10);
    // runs at the top of the supported universe still close properly
    IntSet top;
    for (int i = 120; i <= 127; ++i) top.insert(i);
    CHECK(top.length_l() == 8);
}

TEST_CASE("length_l <= l exactly when the complement is (l+1)-syndetic") {
    const int N = 11;
    for (uint64_t m = 0; m < (uint64_t(1) << (N + 1)); m += 7) {  // strided sweep
        IntSet M = IntSet::from_low_word(m);
        IntSet P = M.complement(N);
        int l = M.length_l();
        for (int cand = 1; cand <= N + 1; ++cand)
            CHECK((l <= cand - 1) == P.is_syndetic(cand, N));
    }
}

TEST_CASE("shift drops values leaving the universe") {
    IntSet s = IntSet::of({0, 1, 7});
    CHECK(s.shift(-1, 7) == IntSet::of({0, 6}));
    CHECK(s.shift(3, 7) == IntSet::of({3, 4}));  // 7+3 = 10 falls off
    CHECK(s.shift(0, 7) == s);
}

TEST_CASE("complement and subset_of behave as finite-universe set algebra") {
    IntSet m = IntSet::of({0, 2, 4});
    IntSet p = m.complement(5);
    CHECK(p == IntSet::of({1, 3, 5}));
    CHECK(m.set_union(p) == IntSet::range(5));
    CHECK(m.set_intersection(p).empty());
    CHECK(IntSet::of({0, 2}).subset_of(m));
    CHECK_FALSE(m.subset_of(IntSet::of({0, 2})));
}

TEST_CASE("IntSet literal grammar round-trips") {
    // braces, intervals, keywords, unions, complement
    CHECK(parse_intset("{0,1,5}", 8) == IntSet::of({0, 1, 5}));
    CHECK(parse_intset("[2..4]", 8) == IntSet::interval(2, 4));
    CHECK(parse_intset("evens", 6) == IntSet::of({0, 2, 4, 6}));
    CHECK(parse_intset("odds", 6) == IntSet::of({1, 3, 5}));
    CHECK(parse_intset("all", 3) == IntSet::range(3));
    CHECK(parse_intset("none", 3) == IntSet());
    CHECK(parse_intset("{0} u [2..3]", 5) == IntSet::of({0, 2, 3}));
    CHECK(parse_intset("complement {0}", 3) == IntSet::of({1, 2, 3}));

    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntSet s;
        for (int x = 0; x <= 10; ++x)
            if (rng.chance(0.4)) s.insert(x);
        CHECK(parse_intset(format_intset(s), 10) == s);
    }
    CHECK_THROWS_AS(parse_intset("{0,99}", 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_intset("[5..2]", 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_intset("wibble", 8), std::invalid_argument);
}

TEST_CASE("restrict1/restrict0 partition a family and reindex the ground set") {
    // F over {0..3}: {}, {1}, {1,3}, {0,2,3}
    Family F(GroundSet(4), {0b0000, 0b0010, 0b1010, 0b1101});
    Family F1 = F.restrict1(1), F0 = F.restrict0(1);
    CHECK(F1.n() == 3);
    CHECK(F0.n() == 3);
    CHECK(F1.size() + F0.size() == F.size());
    // members of F1 are members containing 1, with coordinate 1 spliced out
    CHECK(F1 == Family(GroundSet(3), {0b000, 0b100}));
    // {0,2,3} loses nothing but its coordinates above 1 shift down
    CHECK(F0 == Family(GroundSet(3), {0b000, 0b111}));
    // splice preserves sizes minus the dropped coordinate
    for (Mask m : F1.sets()) CHECK(std::popcount(m) <= 3);
}

TEST_CASE("density is exact and restriction halves the denominator") {
    Family F(GroundSet(4), {1, 2, 3});
    DyadicRational d = F.density();
    CHECK(d.num_str() == "3");
    CHECK(d.log2den == 4);
    // one member avoids element 0, so the restriction has density 1/8 exactly
    CHECK(F.restrict0(0).density().log2den == 3);
    // 2/8 canonicalizes to 1/4
    CHECK(F.restrict1(0).density().log2den == 2);
    CHECK(Family::power_set(GroundSet(5)).density().to_rational() == BigRat(1));
}

TEST_CASE("signature collects intersection sizes against a fixed set") {
    Family A(GroundSet(4), {0b0011, 0b1100, 0b1111});
    CHECK(signature(A, 0b0011) == IntSet::of({0, 2}));
    CHECK(signature(A, 0b1111) == IntSet::of({2, 4}));
}

TEST_CASE("diagonal rule distinguishes family from pair checks") {
    // sets of odd size with pairwise even intersections cannot pass the
    // diagonal rule for M = evens
    Family F(GroundSet(4), {0b0001, 0b0010});
    IntSet evens = parse_intset("evens", 4);
    CHECK_FALSE(is_intersecting_family(F, evens, true).ok);
    CHECK(is_intersecting_family(F, evens, false).ok);  // cross |S n T| = 0 only
    auto chk = is_intersecting_family(F, evens, true);
    CHECK(chk.intersection_size == 1);  // witness: a diagonal pair of size 1
}

TEST_CASE("intersecting-pair check is a cross-only predicate") {
    Family A(GroundSet(3), {0b111});
    Family B(GroundSet(3), {0b001, 0b011});
    CHECK(is_intersecting_pair(A, B, IntSet::of({1, 2})).ok);
    CHECK_FALSE(is_intersecting_pair(A, B, IntSet::of({1})).ok);
}

TEST_CASE("intersection predicates are invariant under ground permutations") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5;
        std::vector<Mask> sets;
        for (Mask m = 0; m < 32; ++m)
            if (rng.chance(0.3)) sets.push_back(m);
        if (sets.empty()) sets.push_back(7);
        Family F(GroundSet(n), sets);
        IntSet M;
        for (int x = 0; x <= n; ++x)
            if (rng.chance(0.5)) M.insert(x);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<Mask> permuted;
        for (Mask m : sets) {
            Mask pm = 0;
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1) pm |= Mask(1) << perm[size_t(i)];
            permuted.push_back(pm);
        }
        Family PF(GroundSet(n), std::move(permuted));
        CHECK(is_intersecting_family(F, M, true).ok ==
              is_intersecting_family(PF, M, true).ok);
    }
}

TEST_CASE("family files round-trip bit-identically") {
    Family F(GroundSet(6), {0, 0b000001, 0b101010, 0b111111});
    std::string text = family_to_string(F);
    std::istringstream is(text);
    Family G = read_family(is);
    CHECK(F == G);
    CHECK(family_to_string(G) == text);

    SECTION("comments and blank lines are ignored") {
        std::istringstream noisy(
            "# a family\n\nn=3\n# members follow\n-\n0,2\n  1  # trailing comment\n");
        Family H = read_family(noisy);
        CHECK(H == Family(GroundSet(3), {0b000, 0b101, 0b010}));
    }
    SECTION("malformed inputs are rejected with line context") {
        std::istringstream no_header("0,1\n");
        CHECK_THROWS_AS(read_family(no_header), std::invalid_argument);
        std::istringstream out_of_range("n=3\n0,7\n");
        CHECK_THROWS_AS(read_family(out_of_range), std::invalid_argument);
        std::istringstream descending("n=3\n2,1\n");
        CHECK_THROWS_AS(read_family(descending), std::invalid_argument);
    }
}

TEST_CASE("family canonical order is numeric on masks and deduplicated") {
    Family F(GroundSet(3), {5, 1, 5, 3});
    CHECK(F.size() == 3);
    CHECK(std::is_sorted(F.sets().begin(), F.sets().end()));
}
