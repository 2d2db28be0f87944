// Decomposition procedure: exact case tests, trace replay/audit, stop-state
// analysis, golden regression trace, and the closed-form bounds.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "specint/constructions.hpp"
#include "specint/procedure.hpp"
#include "specint/report.hpp"
#include "specint/verify.hpp"

using namespace specint;

namespace {

FamilyPair eventown_pair(int n) {
    Family ev = eventown(n);
    return {ev, ev};
}

}  // namespace

TEST_CASE("f(x) = 2 - x/(2 - sqrt x) on its domain") {
    CHECK(f_value(Float50(0)) == 2);
    CHECK(boost::multiprecision::abs(f_value(Float50(1)) - 1) < Float50("1e-40"));
    CHECK_THROWS_AS(f_value(Float50(4)), std::domain_error);
    CHECK_THROWS_AS(f_value(Float50(-1)), std::domain_error);
    // f(a0) = 0 is the defining identity of a0 = 6 - 2 sqrt 5
    CHECK(boost::multiprecision::abs(f_value(surd_a0().to_float50())) < Float50("1e-45"));
}

TEST_CASE("constants report certifies every identity") {
    ConstantsReport r = constants_report();
    CHECK(r.all_ok);
    CHECK(r.f_a_exceeds_exact);
    CHECK(r.four_over_a > 2.630);
    CHECK(r.four_over_a < 2.631);
    CHECK(r.one_minus_log2_a > 0.38);
    CHECK(r.sigma_max < 0.1);
}

TEST_CASE("classify_step computes exact counts on the Eventown pair") {
    FamilyPair p = eventown_pair(8);
    IntSet P0 = parse_intset("odds", 8);
    ClassifyResult c = classify_step(p.a, p.b, P0, 0, 8);
    const ClassifyArtifacts& a = c.artifacts;
    CHECK(a.cF == 16);
    CHECK(a.cF1 == 8);
    CHECK(a.cF0 == 8);
    CHECK(a.cG_union == 16);  // the two halves differ in the spliced coordinate
    CHECK(a.cG_inter == 0);
    CHECK(a.cF_union == 16);
    CHECK(a.cF_inter == 0);
    // 4*8*8 = 256 is NOT > a*256 ~ 389.3, while 4*16*8 = 512 is
    CHECK_FALSE(a.c1);
    CHECK(a.c2);
    CHECK(c.chosen == StepCase::C2);
    CHECK(c.P_after == P0);  // C2 leaves the forbidden set untouched
    CHECK(c.F_next.n() == 7);
}

TEST_CASE("the Eventown(8) run is eight C2 steps to an exhausted ground set") {
    for (Strategy strat : {Strategy::First, Strategy::Greedy}) {
        ProcedureTrace tr = run_procedure(eventown_pair(8), parse_intset("evens", 8), strat);
        REQUIRE(tr.steps.size() == 8);
        for (const auto& s : tr.steps) {
            CHECK(s.step_case == StepCase::C2);
            CHECK(s.vertex == 0);
        }
        CHECK(tr.stop_reason == StopReason::GroundExhausted);
        CHECK(tr.F_final.size() == 1);
        CHECK(tr.G_final.size() == 1);
        CHECK(tr.c3_count() == 0);
        CHECK(verify_trace(tr).empty());
    }
}

TEST_CASE("traces replay deterministically") {
    auto rp = [](uint64_t seed) {
        Rng rng(seed);
        for (;;) {
            auto p = detail::random_cross_pair(6, rng);
            if (p) return *p;
        }
    };
    auto pair = rp(99);
    ProcedureTrace t1 = run_procedure(pair.pair, pair.M, Strategy::Greedy);
    ProcedureTrace t2 = run_procedure(pair.pair, pair.M, Strategy::Greedy);
    CHECK(trace_to_json(t1).dump() == trace_to_json(t2).dump());
}

TEST_CASE("seeded random pairs audit clean and cover the case palette") {
    Rng rng(20260818);
    long long hist[6] = {0, 0, 0, 0, 0, 0};
    int made = 0;
    while (made < 80) {
        int n = 3 + static_cast<int>(rng.below(6));
        auto rp = detail::random_cross_pair(n, rng);
        if (!rp) continue;
        Strategy strat = (made % 2 == 0) ? Strategy::First : Strategy::Greedy;
        ProcedureTrace tr = run_procedure(rp->pair, rp->M, strat);
        auto bad = verify_trace(tr);
        for (const auto& v : bad) UNSCOPED_INFO("pair #" << made << ": " << v);
        CHECK(bad.empty());
        CHECK(tr.c3_count() <= tr.M.length_l());
        for (const auto& s : tr.steps) ++hist[static_cast<int>(s.step_case)];
        ++made;
    }
    // the sweep must exercise the main cases, including a mirrored one
    CHECK(hist[static_cast<int>(StepCase::C1)] > 0);
    CHECK(hist[static_cast<int>(StepCase::C2)] > 0);
    CHECK(hist[static_cast<int>(StepCase::C2S)] > 0);
    CHECK(hist[static_cast<int>(StepCase::C3)] > 0);
}

TEST_CASE("verify_trace flags tampered traces") {
    ProcedureTrace tr = run_procedure(eventown_pair(6), parse_intset("evens", 6), Strategy::First);
    REQUIRE(verify_trace(tr).empty());

    SECTION("wrong case recorded") {
        ProcedureTrace bad = tr;
        bad.steps[2].step_case = StepCase::C1;
        CHECK_FALSE(verify_trace(bad).empty());
    }
    SECTION("wrong P evolution") {
        ProcedureTrace bad = tr;
        bad.steps[1].P_after = IntSet::of({0});
        CHECK_FALSE(verify_trace(bad).empty());
    }
    SECTION("tampered density") {
        ProcedureTrace bad = tr;
        bad.steps[0].pF = DyadicRational{BigInt(1), 6};
        CHECK_FALSE(verify_trace(bad).empty());
    }
    SECTION("truncated run") {
        ProcedureTrace bad = tr;
        bad.steps.pop_back();
        CHECK_FALSE(verify_trace(bad).empty());
    }
}

TEST_CASE("stopped_state_analysis flags a state that is not a genuine stop") {
    // On the full power set every vertex has link density exactly 1/2 on both
    // sides, far above sqrt(eps): the dichotomy must fail.
    Family P2 = Family::power_set(GroundSet(3));
    StoppedStateReport rep = stopped_state_analysis(P2, P2);
    CHECK_FALSE(rep.claim_ok);
    CHECK(rep.W_F.empty());  // no vertex has a small F-side link
    CHECK(rep.x == 0);
    CHECK(rep.y == 3);
}

TEST_CASE("stopped_state_analysis on the singleton-empty-set state is vacuous") {
    Family single(GroundSet(4), {0});
    StoppedStateReport rep = stopped_state_analysis(single, single);
    CHECK(rep.claim_ok);
    CHECK(rep.x == 4);  // every link is empty, hence below sqrt(eps)
    CHECK(rep.edge_ok_F);
    CHECK(rep.edge_ok_G);
    CHECK(rep.counting_claim_ok);
    CHECK(rep.s == ceil_half_sqrt_eps(4));
}

TEST_CASE("golden Eventown(8) trace is stable") {
    std::ifstream is(std::string(SPECINT_TEST_DATA) + "/eventown8_first_trace.json");
    REQUIRE(is);
    std::stringstream buf;
    buf << is.rdbuf();
    Json golden = Json::parse(buf.str());

    ProcedureTrace tr = run_procedure(eventown_pair(8), parse_intset("evens", 8),
                                      Strategy::First);
    CHECK(verify_trace(tr).empty());
    CHECK(trace_to_json(tr) == golden);
}

TEST_CASE("pair_product_bounds matches the two closed forms") {
    TwoBounds b = pair_product_bounds(100, 1);
    // n log2(2.631) + 14 log2(10) ~ 139.55 + 46.51
    CHECK(static_cast<double>(b.first_log2) == Catch::Approx(186.068).margin(0.01));
    CHECK(static_cast<double>(b.second_log2) ==
          Catch::Approx(100 + 2 * std::pow(std::log2(100.0), 2)).margin(1e-6));
    CHECK(b.min_log2 == std::min(b.first_log2, b.second_log2));

    TwoBounds s = single_family_bounds(100, 1);
    CHECK(static_cast<double>(s.first_log2) ==
          Catch::Approx(static_cast<double>(b.first_log2) / 2).margin(1e-9));

    CHECK_THROWS_AS(pair_product_bounds(0, 1), std::invalid_argument);
}

TEST_CASE("with l = ceil(0.15 n), both pair bounds eventually exceed 4^n") {
    // the bounds turn trivial when the omitted structure is too rich
    bool found = false;
    for (int n = 1; n <= 4000 && !found; n += 50) {
        int l = static_cast<int>((15 * n + 99) / 100);
        TwoBounds b = pair_product_bounds(n, l);
        if (b.first_log2 > 2 * n && b.second_log2 > 2 * n) found = true;
    }
    CHECK(found);
}
