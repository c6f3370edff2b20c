#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "planepart/ball.hpp"
#include "planepart/ball_pp.hpp"
#include "planepart/plane_partitions.hpp"

using namespace planepart;

namespace {

// deterministic rational generator for containment properties
mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 999983);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("ring operations contain the exact rational result", "[ball]") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 500; ++i) {
        mpq_class a = random_rational(rng), b = random_rational(rng);
        Ball ba = Ball::from_mpq(a, 64), bb = Ball::from_mpq(b, 64);
        REQUIRE((ba + bb).contains(mpq_class(a + b)));
        REQUIRE((ba - bb).contains(mpq_class(a - b)));
        REQUIRE((ba * bb).contains(mpq_class(a * b)));
        if (b != 0 && !(Ball::from_mpq(b, 64).contains(mpq_class(0))))
            REQUIRE((ba / bb).contains(mpq_class(a / b)));
    }
}

TEST_CASE("transcendental enclosures nest across precision", "[ball]") {
    // a tighter (higher-precision) enclosure must stay inside a looser one
    for (unsigned long v : {2ul, 3ul, 7ul, 1000003ul}) {
        Ball lo = Ball::from_ui(v, 64).log();
        Ball hi = Ball::from_ui(v, 256).log();
        REQUIRE(mpfr_cmp(lo.lower().get(), hi.lower().get()) <= 0);
        REQUIRE(mpfr_cmp(lo.upper().get(), hi.upper().get()) >= 0);
        Ball e1 = Ball::from_ui(v, 64).sqrt();
        Ball e2 = Ball::from_ui(v, 256).sqrt();
        REQUIRE(mpfr_cmp(e1.lower().get(), e2.lower().get()) <= 0);
        REQUIRE(mpfr_cmp(e1.upper().get(), e2.upper().get()) >= 0);
    }
}

TEST_CASE("exp/log/root agree with exact checks", "[ball]") {
    Ball four = Ball::from_ui(4, 128);
    REQUIRE(four.sqrt().contains(mpq_class(2)));
    REQUIRE(Ball::from_ui(27, 128).rootn(3).contains(mpq_class(3)));
    Ball e = Ball::from_ui(1, 128).exp();
    REQUIRE(e.log().contains(mpq_class(1)));
    Ball x = Ball::from_mpq(mpq_class(9, 4), 128);
    REQUIRE(x.pow_q(mpq_class(1, 2)).contains(mpq_class(3, 2)));
    REQUIRE(x.pow_q(mpq_class(-1, 2)).contains(mpq_class(2, 3)));
}

TEST_CASE("comparisons require full-interval separation", "[ball]") {
    Ball a = Ball::from_ui(1, 64), b = Ball::from_ui(2, 64);
    REQUIRE(certainly_less(a, b));
    REQUIRE_FALSE(certainly_less(b, a));
    Ball wide = Ball::from_ui(1, 64);
    BigFloat extra(kRadiusPrec);
    mpfr_set_ui(extra.get(), 3, MPFR_RNDN);
    wide.widen(extra);  // [-2, 4] overlaps both
    REQUIRE_FALSE(certainly_less(wide, b));
    REQUIRE_FALSE(certainly_less(b, wide));
}

TEST_CASE("ball pp table contains the exact values", "[ball]") {
    SECTION("first eleven values at 64 bits") {
        BallPPTable t = pp_ball(10, 64);
        PPTable e = pp_exact(10);
        REQUIRE(balls_contain_exact(t, e, 10));
        REQUIRE_FALSE(t.degraded());
    }
    SECTION("n = 0 is exact") {
        BallPPTable t = pp_ball(0, 64);
        REQUIRE(t(0).is_exact());
        REQUIRE(t(0).contains(mpz_class(1)));
    }
    SECTION("n = 2000 at 192 bits contains pp_exact(2000)") {
        BallPPTable t = pp_ball(2000, 192);
        PPTable e = pp_exact(2000);
        REQUIRE(t(2000).contains(e(2000)));
        REQUIRE(balls_contain_exact(t, e, 2000));
        REQUIRE_FALSE(t.degraded());
        REQUIRE(t(2000).relative_radius_below(96));
    }
}

TEST_CASE("ball pp rejects tiny precision", "[ball]") {
    REQUIRE_THROWS_AS(pp_ball(10, 32), std::invalid_argument);
}
