#pragma once

// The inequality polynomials and every verification sweep:
//   P_{a,b}(x) = P_a(x) P_b(x) - P_{a+b}(x)          (BO defect)
//   Delta_{a,b}(x) = P_{a-1}(x) P_{b+1}(x) - P_a(x) P_b(x)
//   Delta_{a+1,a-1}(x) = P_a(x)^2 - P_{a-1}(x) P_{a+1}(x)   (Turan defect)
// plus the L/R decomposition of the BO defect and the closed-form
// final-step bound polynomials in a.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/ball_pp.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/integers.hpp"
#include "planepart/plane_partitions.hpp"
#include "planepart/poly_family.hpp"
#include "planepart/report.hpp"
#include "planepart/sturm.hpp"

namespace planepart {

// P_a P_b - P_{a+b}; symmetric in (a, b), positive leading coefficient.
inline ExactPoly bo_poly(const PolyFamily& fam, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bo_poly needs a, b >= 1");
    if (fam.size() < a + b) throw std::invalid_argument("family too small for bo_poly");
    return fam.at(a) * fam.at(b) - fam.at(a + b);
}

// Delta_{a,b} = P_{a-1} P_{b+1} - P_a P_b.
inline ExactPoly cft_poly(const PolyFamily& fam, std::size_t a, std::size_t b) {
    if (a < 1) throw std::invalid_argument("cft_poly needs a >= 1");
    if (fam.size() < std::max(a, b + 1)) throw std::invalid_argument("family too small for cft_poly");
    return fam.at(a - 1) * fam.at(b + 1) - fam.at(a) * fam.at(b);
}

// P_a^2 - P_{a-1} P_{a+1} = Delta_{a+1,a-1}; degree 2a.
inline ExactPoly turan_poly(const PolyFamily& fam, std::size_t a) {
    if (a < 1) throw std::invalid_argument("turan_poly needs a >= 1");
    if (fam.size() < a + 1) throw std::invalid_argument("family too small for turan_poly");
    return fam.at(a) * fam.at(a) - fam.at(a - 1) * fam.at(a + 1);
}

// J^{d,n}(X) = sum_{k=0..d} C(d,k) alpha(n+k) X^k for a sequence alpha
// indexed from 0.  For d = 2, all roots real <=> alpha(n+1)^2 >= alpha(n) alpha(n+2).
inline ExactPoly jensen_poly(const std::vector<mpq_class>& alpha, std::size_t d, std::size_t n) {
    if (d < 1) throw std::invalid_argument("jensen degree must be >= 1");
    if (alpha.size() < n + d + 1)
        throw std::invalid_argument("alpha covers [0," + std::to_string(alpha.size() ? alpha.size() - 1 : 0) +
                                    "], need up to " + std::to_string(n + d));
    ExactPoly out;
    for (std::size_t k = 0; k <= d; ++k) {
        mpq_class c = mpq_class(binomial_ui(static_cast<unsigned long>(d), static_cast<unsigned long>(k))) *
                      alpha[n + k];
        c.canonicalize();
        out += ExactPoly::constant(c).shifted_up(k);
    }
    return out;
}

inline std::vector<mpq_class> pp_as_rationals(const PPTable& t) {
    std::vector<mpq_class> v;
    v.reserve(t.size() + 1);
    for (std::size_t n = 0; n <= t.size(); ++n) v.emplace_back(t(n));
    return v;
}

// ---------------------------------------------------------------------------
// pp sweeps
// ---------------------------------------------------------------------------

// pp(a)pp(b) > pp(a+b) over b <= a, sum_min <= a+b <= sum_max, plus a scan
// of the small region b >= 2, a+b < 12 whose failing set the claim excludes.
inline IneqReport verify_bo_pp(const PPTable& t, std::size_t sum_min, std::size_t sum_max) {
    if (sum_min < 4 || sum_min > sum_max) throw std::invalid_argument("bad BO sum range");
    if (t.size() < sum_max) throw std::invalid_argument("pp table too small");
    IneqReport report(ReportKind::BO_PP,
                      "pp(a)pp(b) vs pp(a+b), 2 <= b <= a, " + std::to_string(sum_min) +
                          " <= a+b <= " + std::to_string(sum_max) + "; plus scan a+b < 12");
    auto judge = [&](std::size_t a, std::size_t b) {
        mpz_class lhs = t(a) * t(b);
        const int c = cmp(lhs, t(a + b));
        if (c > 0)
            report.add(static_cast<long>(a), static_cast<long>(b), Verdict::HOLDS);
        else if (c == 0)
            report.add(static_cast<long>(a), static_cast<long>(b), Verdict::EQUALITY, to_string(lhs));
        else
            report.add(static_cast<long>(a), static_cast<long>(b), Verdict::FAILS,
                       to_string(mpz_class(lhs - t(a + b))));
    };
    for (std::size_t s = 4; s < 12 && s <= t.size(); ++s)
        for (std::size_t b = 2; 2 * b <= s; ++b) judge(s - b, b);
    for (std::size_t s = std::max<std::size_t>(sum_min, 12); s <= sum_max; ++s)
        for (std::size_t b = 2; 2 * b <= s; ++b) judge(s - b, b);
    return report;
}

// The failing pairs (a, b), b <= a, found below sum 12.
inline std::vector<std::pair<long, long>> bo_pp_failing_pairs(const IneqReport& r) {
    std::vector<std::pair<long, long>> out;
    for (const auto& e : r.entries())
        if (e.verdict != Verdict::HOLDS && e.i + e.j < 12) out.emplace_back(e.i, e.j);
    return out;
}

// pp(n)^2 vs pp(n-1) pp(n+1), exact backend.
inline IneqReport verify_logconcave_pp(const PPTable& t, std::size_t n_min, std::size_t n_max) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("bad log-concavity range");
    if (t.size() < n_max + 1) throw std::invalid_argument("pp table too small");
    IneqReport report(ReportKind::LOGCONCAVE_PP,
                      "pp(n)^2 vs pp(n-1)pp(n+1), " + std::to_string(n_min) + " <= n <= " +
                          std::to_string(n_max) + " (exact)");
    for (std::size_t n = n_min; n <= n_max; ++n) {
        mpz_class lhs = t(n) * t(n), rhs = t(n - 1) * t(n + 1);
        const int c = cmp(lhs, rhs);
        if (c > 0)
            report.add(static_cast<long>(n), Verdict::HOLDS);
        else if (c == 0)
            report.add(static_cast<long>(n), Verdict::EQUALITY, to_string(lhs));
        else
            report.add(static_cast<long>(n), Verdict::FAILS, to_string(mpz_class(lhs - rhs)));
    }
    return report;
}

// Ball backend: UNCERTAIN whenever the enclosures overlap.
inline IneqReport verify_logconcave_pp(const BallPPTable& t, std::size_t n_min, std::size_t n_max) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("bad log-concavity range");
    if (t.size() < n_max + 1) throw std::invalid_argument("ball pp table too small");
    IneqReport report(ReportKind::LOGCONCAVE_PP,
                      "pp(n)^2 vs pp(n-1)pp(n+1), " + std::to_string(n_min) + " <= n <= " +
                          std::to_string(n_max) + " (ball, " +
                          std::to_string(t.precision_bits()) + " bits)");
    for (std::size_t n = n_min; n <= n_max; ++n) {
        Ball lhs = t(n) * t(n), rhs = t(n - 1) * t(n + 1);
        if (certainly_less(rhs, lhs))
            report.add(static_cast<long>(n), Verdict::HOLDS);
        else if (certainly_less(lhs, rhs))
            report.add(static_cast<long>(n), Verdict::FAILS, (lhs - rhs).interval_string(10));
        else
            report.add(static_cast<long>(n), Verdict::UNCERTAIN, (lhs - rhs).interval_string(10));
    }
    return report;
}

// Sign of P_{a,b}(x_probe) over b <= a, sum_min <= a+b <= sum_max.
inline IneqReport verify_bo_poly(const PolyFamily& fam, const mpq_class& x_probe,
                                 std::size_t sum_min, std::size_t sum_max,
                                 std::size_t b_min = 1) {
    if (x_probe <= 0) throw std::invalid_argument("probe must be positive");
    if (sum_min < 2 || sum_min > sum_max) throw std::invalid_argument("bad sum range");
    if (fam.size() < sum_max) throw std::invalid_argument("family too small");
    IneqReport report(ReportKind::BO_POLY,
                      "P_a(x)P_b(x) vs P_{a+b}(x) at x = " + to_string(x_probe) + ", " +
                          std::to_string(sum_min) + " <= a+b <= " + std::to_string(sum_max));
    // Evaluate each P_n once; the sweep is then pure rational arithmetic.
    std::vector<mpq_class> val(sum_max + 1);
    for (std::size_t n = 0; n <= sum_max; ++n) val[n] = fam.at(n).eval(x_probe);
    for (std::size_t s = sum_min; s <= sum_max; ++s) {
        for (std::size_t b = b_min; 2 * b <= s; ++b) {
            const std::size_t a = s - b;
            mpq_class d = val[a] * val[b] - val[s];
            const int c = sign(d);
            if (c > 0)
                report.add(static_cast<long>(a), static_cast<long>(b), Verdict::HOLDS);
            else if (c == 0)
                report.add(static_cast<long>(a), static_cast<long>(b), Verdict::EQUALITY, "0");
            else
                report.add(static_cast<long>(a), static_cast<long>(b), Verdict::FAILS, to_string(d));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// the L/R decomposition of the BO defect
// ---------------------------------------------------------------------------

// Parts of the induction decomposition of the BO defect; the exact
// reconstruction is
//     x * (L + R1 + R2 + R31 + R32 + R33) = P_{a,b}(x),
// asserted on construction (the unscaled sum reproduces the defect divided
// by x; at x = 1 both readings coincide).
struct DecompositionBreakdown {
    long a = 0, b = 0, A = 0, B = 0;
    mpq_class x;
    long k0 = 0;
    mpq_class L, R1, R2, R31, R32, R33;
    mpq_class bo_value;  // P_{a,b}(x)

    mpq_class parts_sum() const { return L + R1 + R2 + R31 + R32 + R33; }

    // Observed part bounds (reported, not asserted: the derivation behind
    // them rests on induction hypotheses that are not re-proved here).
    bool L_above_neg_4abPb = false;
    bool R1_above_half_bound = false;
    bool R2_positive = false;
    bool R31_zero = false;
    bool R32_zero = false;
    bool R33_positive = false;
};

inline DecompositionBreakdown decomposition_eval(const PolyFamily& fam, long a, long b, long A,
                                                 long B, const mpq_class& x,
                                                 const Sigma2Table& sigma) {
    if (!(A >= 1 && A <= b && b <= a && B >= 2))
        throw std::invalid_argument("decomposition needs 1 <= A <= b <= a and B >= 2");
    if (fam.size() < static_cast<std::size_t>(a + b))
        throw std::invalid_argument("family too small for decomposition");
    if (sigma.size() < static_cast<std::size_t>(a + b))
        throw std::invalid_argument("sigma2 table too small for decomposition");
    if (x == 0) throw std::invalid_argument("decomposition probe must be nonzero");
    const long k0 = a - std::max(B - b, A) + 1;
    if (k0 < 2)
        throw std::invalid_argument("decomposition split needs k0 >= 2 (a >= max(B-b, A) + 1)");

    std::vector<mpq_class> val(a + b + 1);
    for (long n = 0; n <= a + b; ++n) val[n] = fam.at(n).eval(x);

    DecompositionBreakdown d;
    d.a = a; d.b = b; d.A = A; d.B = B; d.x = x; d.k0 = k0;
    d.bo_value = val[a] * val[b] - val[a + b];

    for (long k = 1; k <= b; ++k) {
        mpq_class w(sigma(k + a), static_cast<unsigned long>(a + b));
        w.canonicalize();
        d.L -= w * val[b - k];
    }

    auto f_k = [&](long k) {
        mpq_class t = val[a - k] * val[b] / a - val[a + b - k] / mpq_class(a + b);
        t *= mpz_class(static_cast<unsigned long>(sigma(k)));
        return t;
    };
    d.R1 = f_k(1);
    for (long k = 2; k <= k0 - 1; ++k) d.R2 += f_k(k);
    for (long k = k0; k <= a - A; ++k) d.R31 += f_k(k);
    for (long k = a - A + 1; k <= a - 1; ++k) d.R32 += f_k(k);
    d.R33 = f_k(a);

    if (x * d.parts_sum() != d.bo_value)
        throw std::logic_error("decomposition identity violated");

    mpq_class half_bound(b, 2 * a * a);
    half_bound.canonicalize();
    d.L_above_neg_4abPb = d.L > mpq_class(-4 * a * b) * val[b];
    d.R1_above_half_bound = d.R1 > half_bound * val[a - 1] * val[b];
    d.R2_positive = d.R2 > 0;
    d.R31_zero = (d.R31 == 0);
    d.R32_zero = (d.R32 == 0);
    d.R33_positive = d.R33 > 0;
    return d;
}

// ---------------------------------------------------------------------------
// clamped defect sums (the induction seed tables)
// ---------------------------------------------------------------------------

// sum_{k=1..11-b} (P_k(x)P_b(x) - P_{k+b}(x))_-  for b = 1..b_max,
// where v_- = min(v, 0).
inline std::vector<mpq_class> minimal_sums_table(const PolyFamily& fam, const mpq_class& x,
                                                 std::size_t b_max = 10) {
    if (b_max < 1 || b_max > 10) throw std::invalid_argument("b_max must be in [1,10]");
    if (fam.size() < 11) throw std::invalid_argument("family must cover index 11");
    std::vector<mpq_class> val(12);
    for (std::size_t n = 0; n <= 11; ++n) val[n] = fam.at(n).eval(x);
    std::vector<mpq_class> out;
    out.reserve(b_max);
    for (std::size_t b = 1; b <= b_max; ++b) {
        mpq_class s = 0;
        for (std::size_t k = 1; k + b <= 11; ++k) {
            mpq_class v = val[k] * val[b] - val[k + b];
            if (v < 0) s += v;
        }
        out.push_back(s);
    }
    return out;
}

// sum_{k=2..11-b} (pp(k)pp(b) - pp(k+b))_-  for b = 2..b_max.  The clamp
// matches the companion polynomial table and the printed values.
inline std::vector<mpz_class> pp_sums_table(const PPTable& t, std::size_t b_max = 9) {
    if (b_max < 2 || b_max > 9) throw std::invalid_argument("b_max must be in [2,9]");
    if (t.size() < 11) throw std::invalid_argument("pp table must cover index 11");
    std::vector<mpz_class> out;
    out.reserve(b_max - 1);
    for (std::size_t b = 2; b <= b_max; ++b) {
        mpz_class s = 0;
        for (std::size_t k = 2; k + b <= 11; ++k) {
            mpz_class v = t(k) * t(b) - t(k + b);
            if (v < 0) s += v;
        }
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// final-step bound polynomials in the variable a
// ---------------------------------------------------------------------------

enum class FinalStepKind { GRAD7, X2FINAL, PP_FINAL };

inline const char* to_string(FinalStepKind k) {
    switch (k) {
        case FinalStepKind::GRAD7: return "grad7";
        case FinalStepKind::X2FINAL: return "x2final";
        case FinalStepKind::PP_FINAL: return "pp-final";
    }
    return "?";
}

struct FinalStepResult {
    FinalStepKind kind;
    ExactPoly poly;                   // polynomial in a
    long positive_from = 0;           // least integer from which positive onward
    bool tail_certified = false;      // no real roots above, checked 50 integers, lc > 0
};

namespace detail {

// binomial(a + shift, m) as an exact polynomial in a.
inline ExactPoly binomial_poly(long shift, unsigned long m) {
    ExactPoly p = ExactPoly::constant(1);
    for (unsigned long i = 0; i < m; ++i)
        p *= (ExactPoly::x() + ExactPoly::constant(mpq_class(shift - static_cast<long>(i))));
    return p * mpq_class(mpz_class(1), factorial(m));
}

}  // namespace detail

inline ExactPoly final_step_poly_raw(FinalStepKind kind) {
    ExactPoly p;
    const ExactPoly cube = ExactPoly::x() * ExactPoly::x() * ExactPoly::x();
    switch (kind) {
        case FinalStepKind::GRAD7:
            p = cube * mpq_class(-8);
            for (unsigned long l = 1; l <= 5; ++l) {
                mpq_class c(mpz_class(1), factorial(l));
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), 5, l);
                p += detail::binomial_poly(static_cast<long>(l) - 2, 2 * l - 1) * (c * mpq_class(pw));
            }
            break;
        case FinalStepKind::X2FINAL:
            p = cube * mpq_class(-1290);
            for (unsigned long l = 1; l <= 8; ++l) {
                mpq_class c(mpz_class(1), factorial(l));
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), 2, l);
                p += detail::binomial_poly(static_cast<long>(l) - 2, 2 * l - 1) * (c * mpq_class(pw));
            }
            break;
        case FinalStepKind::PP_FINAL:
            p = cube * mpq_class(-76);
            for (unsigned long l = 1; l <= 3; ++l)
                p += detail::binomial_poly(static_cast<long>(l) - 2, 2 * l - 1) *
                     mpq_class(mpz_class(1), factorial(l));
            break;
    }
    return p;
}

// Builds the bound polynomial and certifies the positivity threshold: the
// largest real root is enclosed, the 50 integers above it are evaluated
// exactly, the leading coefficient is checked, and a Sturm count confirms
// the root-free tail.
inline FinalStepResult final_step_poly(FinalStepKind kind) {
    FinalStepResult r{kind, final_step_poly_raw(kind), 0, false};

    auto top = largest_real_root(r.poly, mpq_class(1, 1024));
    long from = 1;
    if (top) {
        // least integer strictly above the largest real root
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), top->hi.get_num().get_mpz_t(), top->hi.get_den().get_mpz_t());
        from = static_cast<long>(fl.get_si()) + 1;
    }
    r.positive_from = from;

    bool ok = sign(r.poly.leading_coefficient()) > 0;
    for (long a = from; a < from + 50 && ok; ++a)
        ok = sign(r.poly.eval(mpq_class(a))) > 0;
    if (ok) {
        // no real roots strictly above the largest-root enclosure
        SturmChain chain(squarefree_part(IntPoly::from_exact(r.poly)));
        ok = chain.count_above(top ? top->hi : mpq_class(0)) == 0;
    }
    r.tail_certified = ok;
    return r;
}

// ---------------------------------------------------------------------------
// coefficient sign scan of the Turan defect
// ---------------------------------------------------------------------------

// For every a <= a_max: HOLDS when Delta_{a+1,a-1} has only non-negative
// coefficients and a strictly positive x^2 coefficient; the expectation that
// this holds is an even-a statement, odd-a rows are observations.
inline IneqReport even_a_coefficient_scan(const PolyFamily& fam, std::size_t a_max) {
    if (fam.size() < a_max + 1) throw std::invalid_argument("family too small for scan");
    IneqReport report(ReportKind::TURAN_POLY,
                      "coefficients of Delta_{a+1,a-1}, 2 <= a <= " + std::to_string(a_max));
    for (std::size_t a = 2; a <= a_max; ++a) {
        ExactPoly d = turan_poly(fam, a);
        mpq_class min_coeff = 0;
        bool any_negative = false;
        for (std::size_t m = 0; m <= static_cast<std::size_t>(d.degree()); ++m) {
            mpq_class c = d.coefficient(m);
            if (c < min_coeff) min_coeff = c;
            if (sign(c) < 0) any_negative = true;
        }
        const bool b2_positive = sign(d.coefficient(2)) > 0;
        if (!any_negative && b2_positive)
            report.add(static_cast<long>(a), Verdict::HOLDS);
        else
            report.add(static_cast<long>(a), Verdict::FAILS,
                       any_negative ? to_string(min_coeff) : std::string("B_{2a,2} = ") + to_string(d.coefficient(2)));
    }
    return report;
}

}  // namespace planepart
