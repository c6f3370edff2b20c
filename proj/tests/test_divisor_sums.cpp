#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "planepart/divisor_sums.hpp"

using namespace planepart;

TEST_CASE("sigma2 reference values", "[sigma2]") {
    Sigma2Table t(12);
    const std::uint64_t expected[] = {1, 5, 10, 21, 26};
    for (std::size_t n = 1; n <= 5; ++n) REQUIRE(t(n) == expected[n - 1]);
    // 12: divisors 1,2,3,4,6,12 -> 1+4+9+16+36+144
    REQUIRE(t(12) == 210);

    Sigma2Table one(1);
    REQUIRE(one.size() == 1);
    REQUIRE(one(1) == 1);
}

TEST_CASE("sigma2 rejects N = 0", "[sigma2]") {
    REQUIRE_THROWS_AS(Sigma2Table(0), std::invalid_argument);
}

TEST_CASE("sieve equals trial division up to 10^4", "[sigma2]") {
    const std::size_t top = 10000;
    Sigma2Table t(top);
    for (std::size_t n = 1; n <= top; ++n) REQUIRE(t(n) == oracles::sigma2_trial_division(n));
}

TEST_CASE("sigma2 is multiplicative on coprime pairs", "[sigma2]") {
    Sigma2Table t(2500);
    for (std::size_t m = 2; m <= 50; ++m)
        for (std::size_t n = m + 1; n <= 50; ++n) {
            if (std::gcd(m, n) != 1) continue;
            REQUIRE(t(m * n) == t(m) * t(n));
        }
}

TEST_CASE("primes get 1 + p^2", "[sigma2]") {
    Sigma2Table t(100);
    for (std::size_t p : {2, 3, 5, 7, 11, 13, 97})
        REQUIRE(t(p) == 1 + static_cast<std::uint64_t>(p) * p);
}

TEST_CASE("even-index log-concavity of sigma2(n)/n", "[sigma2]") {
    Sigma2Table t(11);

    SECTION("n = 2 by hand: 5^2*1*3 = 75 > 2^2*1*10 = 40") {
        IneqReport r = check_sigma2_even_logconcave(t, 2);
        REQUIRE(r.entries().size() == 1);
        REQUIRE(r.entries()[0].verdict == Verdict::HOLDS);
        REQUIRE(mpz_class(t(2)) * t(2) * 1 * 3 == 75);
        REQUIRE(mpz_class(2) * 2 * t(1) * t(3) == 40);
    }

    SECTION("all even n in [2, 10] hold") {
        IneqReport r = check_sigma2_even_logconcave(t, 10);
        REQUIRE(r.entries().size() == 5);
        REQUIRE(r.all_hold());
    }
}

TEST_CASE("exact bound n^2 <= sigma2(n) < 2n^2", "[sigma2]") {
    Sigma2Table t(100000);
    IneqReport r = check_sigma2_upper_bound(t, 100000);
    REQUIRE(r.all_hold());
    // spot values: sigma2(4) = 21 in [16, 32), sigma2(6) = 50 in [36, 72)
    REQUIRE(t(4) == 21);
    REQUIRE(t(6) == 50);
}

TEST_CASE("even log-concavity holds through 10^5 with exact comparisons", "[sigma2]") {
    Sigma2Table t(100001);
    IneqReport r = check_sigma2_even_logconcave(t, 100000);
    REQUIRE(r.all_hold());
}

TEST_CASE("sha256 of a prefix is independent of the table size", "[sigma2]") {
    Sigma2Table small(10), big(50);
    REQUIRE(small.sha256_hex() == big.sha256_hex(10));
    REQUIRE(small.sha256_hex() != big.sha256_hex());
}
