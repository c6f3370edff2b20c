#pragma once

// Wright's growth law for pp(n),
//
//   pp(n) ~ C2 * n^(-25/36) * exp(C1 * n^(2/3)),
//   C1 = 3 zeta(3)^(1/3) / 2^(2/3),
//   C2 = zeta(3)^(7/36) * 2^(25/36) * e^{zeta'(-1)} / sqrt(12 pi),
//
// and the two expansion inequalities behind eventual log-concavity.  All
// evaluation is ball arithmetic; a verdict is only HOLDS/FAILS when the
// whole enclosure decides it.
//
// zeta'(-1) = 1/12 - ln A (Glaisher-Kinkelin).  ln A comes from the
// Euler-Maclaurin expansion of sum k ln k with a rigorous tail bound, and
// is cross-checked against the functional-equation route
//   zeta'(-1) = (1 - gamma - ln 2pi + zeta'(2)/zeta(2)) / 12
// with zeta'(2) from the accelerated alternating series eta'(2); the
// distance between the two routes is folded into the returned radius.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/ball.hpp"
#include "planepart/integers.hpp"
#include "planepart/report.hpp"

namespace planepart {

namespace asym_detail {

// B_0..B_top (exact) via sum_{k=0..n} C(n+1,k) B_k = 0.
inline std::vector<mpq_class> bernoulli_numbers(unsigned long top) {
    std::vector<mpq_class> B(top + 1);
    B[0] = 1;
    for (unsigned long n = 1; n <= top; ++n) {
        mpq_class s = 0;
        for (unsigned long k = 0; k < n; ++k) s += mpq_class(binomial_ui(n + 1, k)) * B[k];
        B[n] = -s / mpq_class(n + 1);
        B[n].canonicalize();
    }
    return B;
}

// ln A by Euler-Maclaurin:
//   ln A = sum_{k<=n} k ln k - (n^2/2 + n/2 + 1/12) ln n + n^2/4
//          + sum_{j=2..m} B_{2j} (2j-3)!/(2j)! * n^(2-2j)  +  tail,
//   |tail| <= 4 (2m-4)!/(2pi)^(2m) * n^(3-2m).
inline Ball log_glaisher(mpfr_prec_t prec) {
    const unsigned long n = 256, m = 16;
    Ball s(prec);
    for (unsigned long k = 2; k <= n; ++k)
        s = s + Ball::from_ui(k, prec).log().mul_ui(k);

    Ball ln_n = Ball::from_ui(n, prec).log();
    mpq_class pre(mpz_class(n) * n * 6 + mpz_class(n) * 6 + 1, 12);  // n^2/2 + n/2 + 1/12
    pre.canonicalize();
    s = s - Ball::from_mpq(pre, prec) * ln_n;
    mpq_class quarter(mpz_class(n) * n, 4);
    quarter.canonicalize();
    s = s + Ball::from_mpq(quarter, prec);

    auto B = bernoulli_numbers(2 * m);
    for (unsigned long j = 2; j <= m; ++j) {
        mpz_class npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, 2 * j - 2);
        mpq_class ratio(factorial(2 * j - 3), factorial(2 * j));
        ratio.canonicalize();
        mpq_class c = B[2 * j] * ratio / mpq_class(npow);
        c.canonicalize();
        s = s + Ball::from_mpq(c, prec);
    }

    // tail bound, evaluated upward
    Ball two_pi = Ball::pi(prec).mul_ui(2);
    Ball tail = Ball::from_mpz(factorial(2 * m - 4), prec).mul_ui(4) /
                two_pi.pow_q(mpq_class(2 * m));
    mpz_class npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, 2 * m - 3);
    tail = tail / Ball::from_mpz(npow, prec);
    s.widen(tail.upper());
    return s;
}

// eta'(2) = sum_{k>=1} (-1)^k ln(k)/k^2, accelerated (Cohen-Rodriguez
// Villegas-Zagier).  The accelerated sum runs over a_j = ln(j+1)/(j+1)^2
// with alternating signs starting positive, which is -eta'(2).
inline Ball eta_prime_2(mpfr_prec_t prec, unsigned long terms) {
    Ball d = (Ball::from_ui(3, prec) + Ball::from_ui(8, prec).sqrt()).pow_q(mpq_class(terms));
    d = (d + Ball::from_ui(1, prec) / d).div_ui(2);
    Ball b = Ball::from_si(-1, prec);
    Ball c = -d;
    Ball s(prec);
    for (unsigned long k = 0; k < terms; ++k) {
        c = b - c;
        // a_k = ln(k+1)/(k+1)^2, first term (k=0) is zero
        if (k > 0) {
            Ball a = Ball::from_ui(k + 1, prec).log().div_ui((k + 1) * (k + 1));
            s = s + c * a;
        }
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        mpq_class f(2 * (mpz_class(k) + terms) * (mpz_class(k) - terms),
                    mpz_class(2 * k + 1) * (k + 1));
        f.canonicalize();
        b = b * Ball::from_mpq(f, prec);
    }
    Ball r = -(s / d);
    // the acceleration error decays like (3+sqrt 8)^-terms; widen by it
    Ball err = Ball::from_ui(1, prec) / (Ball::from_ui(3, prec) + Ball::from_ui(8, prec).sqrt())
                                            .pow_q(mpq_class(terms));
    r.widen(err.upper());
    return r;
}

}  // namespace asym_detail

struct WrightConstants {
    long digits = 0;
    Ball zeta3;
    Ball zeta_prime_minus1;
    Ball C1;
    Ball C2;
    mpq_class r{-25, 36};

    WrightConstants() : zeta3(64), zeta_prime_minus1(64), C1(64), C2(64) {}
};

inline WrightConstants wright_constants(long digits = 64) {
    if (digits < 16) throw std::invalid_argument("constants need >= 16 digits");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;

    WrightConstants c;
    c.digits = digits;
    c.zeta3 = Ball::zeta_ui(3, prec);

    Ball ln_a = asym_detail::log_glaisher(prec);
    Ball primary = Ball::from_mpq(mpq_class(1, 12), prec) - ln_a;

    // independent route for the cross-check
    const unsigned long terms = static_cast<unsigned long>(digits * 1.31) + 16;
    Ball etap2 = asym_detail::eta_prime_2(prec, terms);
    Ball zeta2 = Ball::zeta_ui(2, prec);
    Ball ln2(prec);
    {
        Ball two = Ball::from_ui(2, prec);
        ln2 = two.log();
    }
    Ball zetap2 = etap2.mul_ui(2) - ln2 * zeta2;
    Ball two_pi_ln = Ball::pi(prec).mul_ui(2).log();
    Ball secondary =
        (Ball::from_ui(1, prec) - Ball::euler_gamma(prec) - two_pi_ln + zetap2 / zeta2).div_ui(12);

    // widen the primary enclosure to cover the disagreement
    Ball diff = primary - secondary;
    c.zeta_prime_minus1 = primary;
    c.zeta_prime_minus1.widen(diff.abs_upper());

    c.C1 = c.zeta3.pow_q(mpq_class(1, 3)).mul_ui(3) / Ball::from_ui(2, prec).pow_q(mpq_class(2, 3));
    c.C2 = c.zeta3.pow_q(mpq_class(7, 36)) * Ball::from_ui(2, prec).pow_q(mpq_class(25, 36)) *
           c.zeta_prime_minus1.exp() / Ball::pi(prec).mul_ui(12).sqrt();
    return c;
}

struct WrightEstimate {
    unsigned long n = 0;
    Ball estimate;
    WrightConstants constants;

    WrightEstimate() : estimate(64) {}
};

inline Ball wright_value(unsigned long n, const WrightConstants& c) {
    if (n < 1) throw std::invalid_argument("wright estimate needs n >= 1");
    const mpfr_prec_t prec = c.C1.prec();
    Ball bn = Ball::from_ui(n, prec);
    return c.C2 * bn.pow_q(mpq_class(-25, 36)) * (c.C1 * bn.pow_q(mpq_class(2, 3))).exp();
}

inline WrightEstimate wright_estimate(unsigned long n, long digits = 64) {
    WrightEstimate w;
    w.n = n;
    w.constants = wright_constants(digits);
    w.estimate = wright_value(n, w.constants);
    return w;
}

// ---------------------------------------------------------------------------
// sampling grids and the two expansion checks
// ---------------------------------------------------------------------------

// Deterministic log-uniform grid, 64 points per decade, deduplicated.
inline std::vector<unsigned long> log_uniform_samples(unsigned long lo, unsigned long hi,
                                                      unsigned long per_decade = 64) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("bad sample range");
    std::vector<unsigned long> out;
    BigFloat e(96), v(96);
    const double lg_lo = std::log10(static_cast<double>(lo));
    const double lg_hi = std::log10(static_cast<double>(hi));
    const long i_lo = static_cast<long>(std::floor(lg_lo * per_decade));
    const long i_hi = static_cast<long>(std::ceil(lg_hi * per_decade)) + 1;
    for (long i = i_lo; i <= i_hi; ++i) {
        mpfr_set_si(e.get(), i, MPFR_RNDN);
        mpfr_div_ui(e.get(), e.get(), per_decade, MPFR_RNDN);
        mpfr_exp10(v.get(), e.get(), MPFR_RNDN);
        unsigned long n = mpfr_get_ui(v.get(), MPFR_RNDN);
        if (n < lo || n > hi) continue;
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    if (out.empty() || out.front() != lo) out.insert(out.begin(), lo);
    if (out.back() != hi) out.push_back(hi);
    return out;
}

struct KonkavSample {
    unsigned long n;
    Ball residual;

    KonkavSample() : residual(64) {}
};

struct KonkavReport {
    mpq_class s;
    std::vector<KonkavSample> samples;
    // sup of |residual| upper bounds per decade, ascending decades
    std::vector<std::pair<long, BigFloat>> decade_sup;
};

// R_n = (2n^s - (n+1)^s - (n-1)^s - (1-s)s n^(s-2)) * n^(3-s).
inline Ball konkav_residual(unsigned long n, const mpq_class& s_in, mpfr_prec_t prec) {
    if (n < 2) throw std::invalid_argument("residual needs n >= 2");
    mpq_class s = s_in;
    s.canonicalize();
    Ball bn = Ball::from_ui(n, prec);
    Ball lhs = bn.pow_q(s).mul_ui(2) - Ball::from_ui(n + 1, prec).pow_q(s) -
               Ball::from_ui(n - 1, prec).pow_q(s);
    mpq_class c = (1 - s) * s;
    c.canonicalize();
    Ball main = Ball::from_mpq(c, prec) * bn.pow_q(s - 2);
    return (lhs - main) * bn.pow_q(3 - s);
}

inline KonkavReport expansion_check_konkav(const mpq_class& s, unsigned long n_lo,
                                           unsigned long n_hi, mpfr_prec_t prec = 192) {
    if (n_lo < 10 || n_hi > 1000000 || n_lo > n_hi)
        throw std::invalid_argument("range must sit inside [10, 10^6]");
    KonkavReport rep;
    rep.s = s;
    for (unsigned long n : log_uniform_samples(n_lo, n_hi)) {
        KonkavSample smp;
        smp.n = n;
        smp.residual = konkav_residual(n, s, prec);
        rep.samples.push_back(std::move(smp));
    }
    // per-decade sup of |R_n|
    long decade = -1;
    for (const auto& smp : rep.samples) {
        long d = 0;
        for (unsigned long v = smp.n; v >= 10; v /= 10) ++d;
        BigFloat a = smp.residual.abs_upper();
        if (d != decade) {
            rep.decade_sup.emplace_back(d, a);
            decade = d;
        } else if (mpfr_cmp(a.get(), rep.decade_sup.back().second.get()) > 0) {
            rep.decade_sup.back().second = a;
        }
    }
    return rep;
}

struct CorollarySample {
    unsigned long n;
    Ball lower, middle, upper;
    Verdict verdict = Verdict::UNCERTAIN;

    CorollarySample() : lower(64), middle(64), upper(64) {}
};

struct CorollaryReport {
    std::vector<CorollarySample> samples;
    // least sampled n from which both bounds hold through the end (0 = never)
    unsigned long holds_from = 0;
};

// 1 + (C1/9) n^(-4/3)  <  exp(2 C1 n^(2/3) - C1 (n+1)^(2/3) - C1 (n-1)^(2/3))
//                      <  1 + (4 C1/9) n^(-4/3)
inline CorollaryReport expansion_check_corollary(const Ball& C1, unsigned long n_lo,
                                                 unsigned long n_hi, mpfr_prec_t prec = 192) {
    if (!C1.certainly_positive()) throw std::invalid_argument("C1 must be positive");
    CorollaryReport rep;
    Ball one = Ball::from_ui(1, prec);
    for (unsigned long n : log_uniform_samples(n_lo, n_hi)) {
        CorollarySample s;
        s.n = n;
        Ball bn = Ball::from_ui(n, prec);
        Ball nm43 = bn.pow_q(mpq_class(-4, 3));
        s.lower = one + C1 * nm43.div_ui(9);
        s.upper = one + C1 * nm43.mul_ui(4).div_ui(9);
        Ball expo = (C1 * bn.pow_q(mpq_class(2, 3))).mul_ui(2) -
                    C1 * Ball::from_ui(n + 1, prec).pow_q(mpq_class(2, 3)) -
                    C1 * Ball::from_ui(n - 1, prec).pow_q(mpq_class(2, 3));
        s.middle = expo.exp();
        const bool lower_ok = certainly_less(s.lower, s.middle);
        const bool upper_ok = certainly_less(s.middle, s.upper);
        const bool lower_bad = certainly_less(s.middle, s.lower);
        const bool upper_bad = certainly_less(s.upper, s.middle);
        if (lower_ok && upper_ok)
            s.verdict = Verdict::HOLDS;
        else if (lower_bad || upper_bad)
            s.verdict = Verdict::FAILS;
        else
            s.verdict = Verdict::UNCERTAIN;
        rep.samples.push_back(std::move(s));
    }
    unsigned long from = 0;
    bool active = false;
    for (const auto& s : rep.samples) {
        if (s.verdict == Verdict::HOLDS) {
            if (!active) {
                from = s.n;
                active = true;
            }
        } else {
            active = false;
            from = 0;
        }
    }
    rep.holds_from = from;
    return rep;
}

}  // namespace planepart
