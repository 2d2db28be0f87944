// Number theory: deterministic primality against a sieve, exact gamma-window
// endpoints, prime-in-interval examples, gcd conditions, the missing-
// intersection bound pipeline, and the short-prime-gap sweep.

#include <catch2/catch_amalgamated.hpp>

#include "specint/numbertheory.hpp"

using namespace specint;

TEST_CASE("is_prime agrees with a sieve up to 10^5") {
    auto sieve = prime_sieve(100000);
    for (uint64_t m = 0; m <= 100000; ++m) {
        if (is_prime(m) != sieve[m]) {
            INFO("m=" << m);
            CHECK(is_prime(m) == sieve[m]);
        }
    }
    SUCCEED("sieve comparison complete");
}

TEST_CASE("is_prime handles adversarial composites and large primes") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));    // Carmichael
    CHECK_FALSE(is_prime(2047));   // strong pseudoprime base 2
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime bases 2,3,5,7
    CHECK(is_prime(4294967311ULL));        // first prime above 2^32
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
}

TEST_CASE("gamma parsing is exact") {
    GammaExponent g = parse_gamma("0.525");
    CHECK(g.num == 21);
    CHECK(g.den == 40);
    GammaExponent h = parse_gamma("0.5");
    CHECK(h.num == 1);
    CHECK(h.den == 2);
    CHECK_THROWS_AS(parse_gamma("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gamma("0."), std::invalid_argument);
    CHECK_THROWS_AS(parse_gamma("0.0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gamma("52"), std::invalid_argument);
}

TEST_CASE("gamma window endpoints are open and exact") {
    // gamma = 1/2 at s = 2^40: the window is (s - 2^20, s), both ends open
    uint64_t s = uint64_t(1) << 40;
    uint64_t w = uint64_t(1) << 20;
    CHECK_FALSE(within_gamma_window(s, s, 1, 2));          // p = s excluded
    CHECK_FALSE(within_gamma_window(s, s - w, 1, 2));      // p = s - s^gamma excluded
    CHECK(within_gamma_window(s, s - w + 1, 1, 2));        // just inside
    CHECK(within_gamma_window(s, s - 1, 1, 2));
}

TEST_CASE("prime_in_interval finds the expected primes") {
    CHECK(prime_in_interval(100) == 97);
    CHECK(prime_in_interval(30) == 29);
    // the four known failures below 10^6 at gamma = 0.525
    for (uint64_t s : {11ULL, 29ULL, 126ULL, 127ULL})
        CHECK_FALSE(prime_in_interval(s).has_value());
    CHECK_THROWS_AS(prime_in_interval(2), std::invalid_argument);
}

TEST_CASE("fw gcd condition on known cases") {
    GcdCondition c52 = fw_gcd_condition(5, 2);
    CHECK(c52.holds);
    CHECK(c52.gcd_value == 3);  // gcd(C(4,2), C(3,2)) = gcd(6,3)

    // t = 1 always holds: the single binomial C(k-1, k-2) = k-1 > 1
    CHECK(fw_gcd_condition(7, 1).gcd_value == 6);

    GcdCondition c93 = fw_gcd_condition(9, 3);
    CHECK_FALSE(c93.holds);  // gcd(56, 21, 6) = 1
    CHECK(c93.gcd_value == 1);
    CHECK_FALSE(fw_gcd_condition(10, 4).holds);

    CHECK_THROWS_AS(fw_gcd_condition(4, 2), std::invalid_argument);  // k <= 2t
    CHECK_THROWS_AS(fw_gcd_condition(5, 0), std::invalid_argument);
}

TEST_CASE("misint bound pipeline at n=100, t=19") {
    MisintReport rep = misint_bound(100, 19);
    CHECK(rep.all_primes_found);
    CHECK(rep.all_t_k_in_range);
    CHECK(rep.per_k.size() == 21);  // k = 39..59
    CHECK(rep.per_k.front().k == 39);
    CHECK(rep.per_k.back().k == 59);
    for (const auto& row : rep.per_k) {
        CHECK(row.prime_found);
        CHECK(row.t_k >= 19);
        CHECK(row.t_k <= 19 + 12);  // t + ceil(100^0.525)
        CHECK(row.term_capped);
    }
    // k = 39: s = 20, largest prime in (20 - 20^0.525, 20) is 19
    CHECK(rep.per_k.front().p == 19);
    CHECK(rep.per_k.front().t_k == 20);
    CHECK(rep.total_bound == BigInt(100) * binomial(100, 59));
    CHECK(rep.middle_cap == binomial(100, 40));
    CHECK(rep.first_range_cap == binomial(100, 38));

    // hypothesis eps*n < t < n/5 is enforced
    CHECK_THROWS_AS(misint_bound(100, 15), std::invalid_argument);
    CHECK_THROWS_AS(misint_bound(100, 20), std::invalid_argument);
}

TEST_CASE("bhp sweep reports exactly the known small failures") {
    BhpSweepResult res = bhp_sweep(10, 2000);
    CHECK(res.failures == std::vector<uint64_t>{11, 29, 126, 127});
    // gamma = 0.6 widens the window enough to clear all of them
    BhpSweepResult wide = bhp_sweep(10, 2000, parse_gamma("0.6"));
    CHECK(wide.failures.empty());
    CHECK_THROWS_AS(bhp_sweep(2, 1), std::invalid_argument);
}
