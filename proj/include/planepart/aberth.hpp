#pragma once

// Simultaneous complex root finding (Aberth-Ehrlich) over MPFR, with
// Newton polish and an a-posteriori inclusion radius n*|p(z)/p'(z)| per
// root.  Real/complex classification compares |Im z| against that radius;
// the Sturm engine cross-validates the counts in the test suite.

#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "planepart/ball.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/int_poly.hpp"
#include "planepart/sturm.hpp"

namespace planepart {

namespace mpc_detail {

struct Cx {
    BigFloat re, im;
    explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

inline void cx_set(Cx& r, const Cx& a) {
    mpfr_set(r.re.get(), a.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), a.im.get(), MPFR_RNDN);
}
inline void cx_sub(Cx& r, const Cx& a, const Cx& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}
inline void cx_add(Cx& r, const Cx& a, const Cx& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}
// r = a * b; r must not alias a or b
inline void cx_mul(Cx& r, const Cx& a, const Cx& b, BigFloat& t1, BigFloat& t2) {
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
}
// r = a / b
inline void cx_div(Cx& r, const Cx& a, const Cx& b, BigFloat& t1, BigFloat& t2, BigFloat& den) {
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(t1.get(), t1.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    BigFloat t3(t2.prec());
    mpfr_mul(t3.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t2.get(), t2.get(), t3.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t2.get(), den.get(), MPFR_RNDN);
    mpfr_set(r.re.get(), t1.get(), MPFR_RNDN);
}
inline void cx_abs(BigFloat& r, const Cx& a) {
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
}

// Horner evaluation of an integer polynomial at z.
inline void horner(Cx& out, const std::vector<BigFloat>& coeffs, const Cx& z, Cx& t,
                   BigFloat& t1, BigFloat& t2) {
    mpfr_set(out.re.get(), coeffs.back().get(), MPFR_RNDN);
    mpfr_set_zero(out.im.get(), 1);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        cx_mul(t, out, z, t1, t2);
        mpfr_add(out.re.get(), t.re.get(), coeffs[i].get(), MPFR_RNDN);
        mpfr_set(out.im.get(), t.im.get(), MPFR_RNDN);
    }
}

}  // namespace mpc_detail

struct AberthResult {
    std::vector<ComplexRootEstimate> roots;
    bool converged = false;
    mpfr_prec_t precision_bits = 0;
};

// All complex roots of a polynomial with no repeated roots and nonzero
// constant term.  Deterministic: starting points are roots of unity (with a
// fixed angular offset) scaled by the geometric mean of the Cauchy and
// Lagrange upper root bounds.
inline AberthResult aberth_simple_roots(const IntPoly& q, mpfr_prec_t prec,
                                        int max_iter = 400) {
    using namespace mpc_detail;
    const long n = q.degree();
    if (n < 1) throw std::invalid_argument("aberth needs degree >= 1");
    AberthResult result;
    result.precision_bits = prec;
    if (q.coeffs().front() == 0)
        throw std::invalid_argument("aberth expects a nonzero constant term (deflate first)");

    std::vector<BigFloat> pc, dc;
    pc.reserve(n + 1);
    for (const auto& c : q.coeffs()) {
        BigFloat f(prec);
        mpfr_set_z(f.get(), c.get_mpz_t(), MPFR_RNDN);
        pc.push_back(std::move(f));
    }
    IntPoly dq = q.derivative();
    dc.reserve(n);
    for (const auto& c : dq.coeffs()) {
        BigFloat f(prec);
        mpfr_set_z(f.get(), c.get_mpz_t(), MPFR_RNDN);
        dc.push_back(std::move(f));
    }

    // Root-magnitude annulus at low precision, Fujiwara-type on both sides:
    //   |z| <= 2 max_i |c_{n-i}/c_n|^(1/i),  |z| >= 1/(2 max_i |c_i/c_0|^(1/i)).
    // (A plain Cauchy bound is useless here: the defect polynomials have a
    // nearly-cancelling leading coefficient, putting it ~1e30 too high.)
    BigFloat upper(kRadiusPrec), lower(kRadiusPrec), t(kRadiusPrec);
    mpfr_set_ui(upper.get(), 0, MPFR_RNDN);
    mpfr_set_ui(lower.get(), 0, MPFR_RNDN);
    for (long i = 0; i < n; ++i) {
        mpfr_div(t.get(), pc[i].get(), pc[n].get(), MPFR_RNDU);
        mpfr_abs(t.get(), t.get(), MPFR_RNDU);
        mpfr_rootn_ui(t.get(), t.get(), static_cast<unsigned long>(n - i), MPFR_RNDU);
        mpfr_max(upper.get(), upper.get(), t.get(), MPFR_RNDU);
    }
    for (long i = 1; i <= n; ++i) {
        mpfr_div(t.get(), pc[i].get(), pc[0].get(), MPFR_RNDU);
        mpfr_abs(t.get(), t.get(), MPFR_RNDU);
        mpfr_rootn_ui(t.get(), t.get(), static_cast<unsigned long>(i), MPFR_RNDU);
        mpfr_max(lower.get(), lower.get(), t.get(), MPFR_RNDU);
    }
    mpfr_mul_2ui(upper.get(), upper.get(), 1, MPFR_RNDU);
    mpfr_mul_2ui(lower.get(), lower.get(), 1, MPFR_RNDU);
    mpfr_ui_div(lower.get(), 1, lower.get(), MPFR_RNDD);
    BigFloat radius(prec);
    mpfr_mul(radius.get(), upper.get(), lower.get(), MPFR_RNDN);
    mpfr_sqrt(radius.get(), radius.get(), MPFR_RNDN);

    // Starting points.
    std::vector<Cx> z;
    z.reserve(n);
    BigFloat angle(prec), pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (long i = 0; i < n; ++i) {
        Cx zi(prec);
        // theta = 2 pi i / n + 1/(2n)  (offset breaks real-axis symmetry)
        mpfr_mul_si(angle.get(), pi.get(), 2 * i, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_si(t.get(), t.get(), 2 * n, MPFR_RNDN);
        mpfr_add(angle.get(), angle.get(), t.get(), MPFR_RNDN);
        mpfr_sin_cos(zi.im.get(), zi.re.get(), angle.get(), MPFR_RNDN);
        mpfr_mul(zi.re.get(), zi.re.get(), radius.get(), MPFR_RNDN);
        mpfr_mul(zi.im.get(), zi.im.get(), radius.get(), MPFR_RNDN);
        z.push_back(std::move(zi));
    }

    Cx pv(prec), dv(prec), nw(prec), s(prec), diff(prec), tmp(prec), corr(prec);
    BigFloat t1(prec), t2(prec), den(prec), wabs(kRadiusPrec), zabs(kRadiusPrec),
        rel(kRadiusPrec), sweep_max(kRadiusPrec), best(kRadiusPrec);

    // Converged when every relative step drops below 2^-(prec-8), or when
    // the steps stagnate at the evaluation noise floor (ill-conditioned
    // coefficients put that floor above the fast-path threshold).
    bool converged = false;
    int stagnant = 0;
    mpfr_set_inf(best.get(), 1);
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        mpfr_set_zero(sweep_max.get(), 1);
        for (long i = 0; i < n; ++i) {
            horner(pv, pc, z[i], tmp, t1, t2);
            if (mpfr_zero_p(pv.re.get()) && mpfr_zero_p(pv.im.get())) continue;
            horner(dv, dc, z[i], tmp, t1, t2);
            if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) {
                // landed on a critical point: nudge and try again next sweep
                mpfr_nextabove(z[i].re.get());
                mpfr_set_inf(sweep_max.get(), 1);
                continue;
            }
            cx_div(nw, pv, dv, t1, t2, den);  // Newton step p/p'
            // s = sum_{j != i} 1/(z_i - z_j)
            mpfr_set_zero(s.re.get(), 1);
            mpfr_set_zero(s.im.get(), 1);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                cx_sub(diff, z[i], z[j]);
                mpfr_set_ui(tmp.re.get(), 1, MPFR_RNDN);
                mpfr_set_zero(tmp.im.get(), 1);
                cx_div(corr, tmp, diff, t1, t2, den);
                cx_add(s, s, corr);
            }
            // w = nw / (1 - nw*s)
            cx_mul(tmp, nw, s, t1, t2);
            mpfr_ui_sub(tmp.re.get(), 1, tmp.re.get(), MPFR_RNDN);
            mpfr_neg(tmp.im.get(), tmp.im.get(), MPFR_RNDN);
            cx_div(corr, nw, tmp, t1, t2, den);
            cx_sub(z[i], z[i], corr);

            cx_abs(wabs, corr);
            cx_abs(zabs, z[i]);
            if (mpfr_cmp_ui(zabs.get(), 1) < 0) mpfr_set_ui(zabs.get(), 1, MPFR_RNDN);
            mpfr_div(rel.get(), wabs.get(), zabs.get(), MPFR_RNDU);
            mpfr_max(sweep_max.get(), sweep_max.get(), rel.get(), MPFR_RNDU);
        }
        mpfr_mul_2si(rel.get(), sweep_max.get(), (long)(prec - 8), MPFR_RNDN);
        if (mpfr_cmp_ui(rel.get(), 1) <= 0) {
            converged = true;
            break;
        }
        // stagnation at the noise floor: tiny steps, no further improvement
        mpfr_mul_2si(rel.get(), sweep_max.get(), 32, MPFR_RNDN);
        const bool tiny = mpfr_cmp_ui(rel.get(), 1) <= 0;
        if (tiny && mpfr_cmp(sweep_max.get(), best.get()) >= 0) {
            if (++stagnant >= 10) {
                converged = true;
                break;
            }
        } else {
            stagnant = 0;
        }
        if (mpfr_cmp(sweep_max.get(), best.get()) < 0)
            mpfr_set(best.get(), sweep_max.get(), MPFR_RNDN);
    }

    // Newton polish + inclusion radius n*|p/p'| (doubled for slack).
    result.roots.reserve(n);
    for (long i = 0; i < n; ++i) {
        for (int step = 0; step < 2; ++step) {
            horner(pv, pc, z[i], tmp, t1, t2);
            horner(dv, dc, z[i], tmp, t1, t2);
            if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) break;
            cx_div(nw, pv, dv, t1, t2, den);
            cx_sub(z[i], z[i], nw);
        }
        horner(pv, pc, z[i], tmp, t1, t2);
        horner(dv, dc, z[i], tmp, t1, t2);
        ComplexRootEstimate est{BigFloat(prec), BigFloat(prec), BigFloat(kRadiusPrec), false};
        mpfr_set(est.re.get(), z[i].re.get(), MPFR_RNDN);
        mpfr_set(est.im.get(), z[i].im.get(), MPFR_RNDN);
        cx_abs(t1, pv);
        cx_abs(t2, dv);
        if (mpfr_zero_p(t2.get())) {
            mpfr_set_inf(est.residual.get(), 1);
        } else {
            mpfr_div(t1.get(), t1.get(), t2.get(), MPFR_RNDU);
            mpfr_mul_ui(est.residual.get(), t1.get(), 2 * (unsigned long)n, MPFR_RNDU);
        }
        // classify: imaginary part indistinguishable from zero at this radius
        BigFloat imabs(kRadiusPrec);
        mpfr_abs(imabs.get(), est.im.get(), MPFR_RNDU);
        est.classified_real = mpfr_cmp(imabs.get(), est.residual.get()) <= 0;
        result.roots.push_back(std::move(est));
    }
    result.converged = converged;
    return result;
}

namespace mpc_detail {

// Classification is trustworthy when |Im z| is far from the inclusion
// radius on either side; anything within a factor of 8 is ambiguous.
inline bool classification_ambiguous(const ComplexRootEstimate& r) {
    if (mpfr_inf_p(r.residual.get())) return true;
    if (mpfr_zero_p(r.residual.get())) return false;
    BigFloat imabs(kRadiusPrec), lo(kRadiusPrec), hi(kRadiusPrec);
    mpfr_abs(imabs.get(), r.im.get(), MPFR_RNDN);
    mpfr_mul_2si(lo.get(), r.residual.get(), -3, MPFR_RNDN);
    mpfr_mul_2si(hi.get(), r.residual.get(), 3, MPFR_RNDN);
    return mpfr_cmp(imabs.get(), lo.get()) > 0 && mpfr_cmp(imabs.get(), hi.get()) < 0;
}

}  // namespace mpc_detail

// Complete root set of an exact polynomial: multiplicity-aware (square-free
// decomposition first), zero roots deflated exactly, count always equals the
// degree.  The precision escalates by doubling up to max_prec while the
// iteration has not converged or any real-vs-complex classification is
// ambiguous; if the ceiling is reached in that state, the summary is
// flagged uncertain.
inline RootSummary aberth_complex_roots(const ExactPoly& p, mpfr_prec_t prec = 128,
                                        mpfr_prec_t max_prec = 1024) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("root finding needs degree >= 1");
    RootSummary out;
    out.degree = p.degree();

    IntPoly ip = IntPoly::from_exact(p);
    const std::size_t zero_mult = ip.valuation();
    IntPoly deflated = ip.deflated_at_zero();

    for (std::size_t i = 0; i < zero_mult; ++i) {
        ComplexRootEstimate zero{BigFloat(prec), BigFloat(prec), BigFloat(kRadiusPrec), true};
        out.complex_roots.push_back(std::move(zero));  // exact root at the origin
    }

    if (max_prec < prec) max_prec = prec;
    if (deflated.degree() >= 1) {
        auto factors = squarefree_decomposition(deflated);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() < 1) continue;
            AberthResult r;
            bool good = false;
            for (mpfr_prec_t pr = prec; pr <= max_prec; pr *= 2) {
                r = aberth_simple_roots(factors[i], pr);
                if (!r.converged) continue;
                good = true;
                for (const auto& root : r.roots)
                    if (mpc_detail::classification_ambiguous(root)) good = false;
                if (good) break;
            }
            if (!good) out.uncertain = true;
            for (auto& root : r.roots)
                for (std::size_t m = 0; m <= i; ++m) out.complex_roots.push_back(root);
        }
    }
    return out;
}

// The roots with positive real part (the figure data): classification and
// residuals as in aberth_complex_roots; conjugate pairs are both kept.
inline RootSummary positive_real_part_roots(const ExactPoly& p, mpfr_prec_t prec = 128) {
    RootSummary all = aberth_complex_roots(p, prec);
    RootSummary out;
    out.degree = all.degree;
    out.uncertain = all.uncertain;
    for (auto& r : all.complex_roots)
        if (r.re.sgn() > 0) out.complex_roots.push_back(std::move(r));
    return out;
}

}  // namespace planepart
