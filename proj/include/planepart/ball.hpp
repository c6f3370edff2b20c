#pragma once

// Midpoint-radius interval arithmetic over MPFR.
//
// Contract: after every operation the true value of the expression lies in
// [mid - rad, mid + rad].  Midpoints are computed at the working precision
// with round-to-nearest; radii are maintained at a fixed small precision
// with every radius operation rounded upward, and one ulp of the midpoint
// is added whenever MPFR reports the midpoint rounding as inexact.
// Monotone transcendental functions (exp, log, sqrt, n-th root) are
// evaluated at the interval endpoints with directed rounding.

#include <mpfr.h>

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace planepart {

constexpr mpfr_prec_t kRadiusPrec = 64;

// Thin RAII value wrapper around mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sgn() const { return mpfr_sgn(v_); }

    std::string to_string(int digits = 20) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "?";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

class Ball {
public:
    explicit Ball(mpfr_prec_t prec = 64) : mid_(check_prec(prec)), rad_(kRadiusPrec) {}

    static Ball from_ui(unsigned long v, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_ui(b.mid_.get(), v, MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    static Ball from_si(long v, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_si(b.mid_.get(), v, MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_z(b.mid_.get(), v.get_mpz_t(), MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    static Ball from_mpq(const mpq_class& v, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_set_q(b.mid_.get(), v.get_mpq_t(), MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    static Ball pi(mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_const_pi(b.mid_.get(), MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    static Ball euler_gamma(mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_const_euler(b.mid_.get(), MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }
    // Riemann zeta at a non-negative integer argument.
    static Ball zeta_ui(unsigned long s, mpfr_prec_t prec) {
        Ball b(prec);
        int t = mpfr_zeta_ui(b.mid_.get(), s, MPFR_RNDN);
        b.bump_ulp_if(t);
        return b;
    }

    mpfr_prec_t prec() const { return mid_.prec(); }
    const BigFloat& mid() const { return mid_; }
    const BigFloat& rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_.get()); }

    BigFloat lower() const {
        BigFloat lo(prec());
        mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
        return lo;
    }
    BigFloat upper() const {
        BigFloat hi(prec());
        mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
        return hi;
    }

    // Widen the radius by an externally-derived error bound (upward).
    void widen(const BigFloat& extra) {
        if (extra.sgn() < 0) throw std::invalid_argument("negative widening");
        mpfr_add(rad_.get(), rad_.get(), extra.get(), MPFR_RNDU);
    }

    // max(|lower|, |upper|), rounded up.
    BigFloat abs_upper() const {
        BigFloat a1(kRadiusPrec), a2(kRadiusPrec);
        mpfr_abs(a1.get(), lower().get(), MPFR_RNDU);
        mpfr_abs(a2.get(), upper().get(), MPFR_RNDU);
        mpfr_max(a1.get(), a1.get(), a2.get(), MPFR_RNDU);
        return a1;
    }

    // ---- ring operations ------------------------------------------------

    friend Ball operator+(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec(), b.prec()));
        int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
        mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }
    friend Ball operator-(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec(), b.prec()));
        int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
        mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }
    friend Ball operator-(const Ball& a) {
        Ball r = a;
        mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);  // exact
        return r;
    }

    friend Ball operator*(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec(), b.prec()));
        int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
        // |a||rb| + |b||ra| + ra rb, all upward
        BigFloat t1(kRadiusPrec), t2(kRadiusPrec);
        mpfr_mul(t1.get(), a.mid_.get(), b.rad_.get(), MPFR_RNDU);
        mpfr_abs(t1.get(), t1.get(), MPFR_RNDU);
        mpfr_mul(t2.get(), b.mid_.get(), a.rad_.get(), MPFR_RNDU);
        mpfr_abs(t2.get(), t2.get(), MPFR_RNDU);
        mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDU);
        mpfr_mul(t2.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
        mpfr_add(r.rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }

    // Division; requires 0 outside of b.
    friend Ball operator/(const Ball& a, const Ball& b) {
        BigFloat babs(kRadiusPrec);
        mpfr_abs(babs.get(), b.mid_.get(), MPFR_RNDD);
        if (mpfr_cmp(babs.get(), b.rad_.get()) <= 0)
            throw std::domain_error("ball division by interval containing zero");
        Ball r(std::max(a.prec(), b.prec()));
        int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
        // (|a| rb + |b| ra) / (|b| (|b| - rb)), numerator up, denominator down
        BigFloat num(kRadiusPrec), t1(kRadiusPrec), den(kRadiusPrec);
        mpfr_mul(num.get(), a.mid_.get(), b.rad_.get(), MPFR_RNDU);
        mpfr_abs(num.get(), num.get(), MPFR_RNDU);
        mpfr_mul(t1.get(), b.mid_.get(), a.rad_.get(), MPFR_RNDU);
        mpfr_abs(t1.get(), t1.get(), MPFR_RNDU);
        mpfr_add(num.get(), num.get(), t1.get(), MPFR_RNDU);
        mpfr_sub(t1.get(), babs.get(), b.rad_.get(), MPFR_RNDD);
        mpfr_mul(den.get(), babs.get(), t1.get(), MPFR_RNDD);
        mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }

    Ball mul_ui(unsigned long k) const {
        Ball r(prec());
        int t = mpfr_mul_ui(r.mid_.get(), mid_.get(), k, MPFR_RNDN);
        mpfr_mul_ui(r.rad_.get(), rad_.get(), k, MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }
    Ball div_ui(unsigned long k) const {
        Ball r(prec());
        int t = mpfr_div_ui(r.mid_.get(), mid_.get(), k, MPFR_RNDN);
        mpfr_div_ui(r.rad_.get(), rad_.get(), k, MPFR_RNDU);
        r.bump_ulp_if(t);
        return r;
    }

    // this += x * k, allocation-free (hot path of the recurrence tables).
    // tmid must carry the working precision, trad the radius precision.
    void addmul_ui_inplace(const Ball& x, unsigned long k, BigFloat& tmid, BigFloat& trad) {
        int t1 = mpfr_mul_ui(tmid.get(), x.mid_.get(), k, MPFR_RNDN);
        if (t1 != 0 && !mpfr_zero_p(tmid.get())) {
            // the product's rounding error lives at the product's exponent
            mpfr_set_ui_2exp(trad.get(), 1, mpfr_get_exp(tmid.get()) - tmid.prec(), MPFR_RNDU);
            mpfr_add(rad_.get(), rad_.get(), trad.get(), MPFR_RNDU);
        }
        int t2 = mpfr_add(mid_.get(), mid_.get(), tmid.get(), MPFR_RNDN);
        mpfr_mul_ui(trad.get(), x.rad_.get(), k, MPFR_RNDU);
        mpfr_add(rad_.get(), rad_.get(), trad.get(), MPFR_RNDU);
        bump_ulp_if(t2);
    }
    void div_ui_inplace(unsigned long k) {
        int t = mpfr_div_ui(mid_.get(), mid_.get(), k, MPFR_RNDN);
        mpfr_div_ui(rad_.get(), rad_.get(), k, MPFR_RNDU);
        bump_ulp_if(t);
    }

    // ---- monotone transcendental functions (endpoint evaluation) --------

    Ball exp() const { return monotone(mpfr_exp); }
    Ball log() const {
        require_lower_positive("log");
        return monotone(mpfr_log);
    }
    Ball sqrt() const {
        require_lower_nonnegative("sqrt");
        return monotone(mpfr_sqrt);
    }
    Ball rootn(unsigned long n) const {
        require_lower_nonnegative("rootn");
        BigFloat lo = lower(), hi = upper();
        BigFloat flo(prec()), fhi(prec());
        mpfr_rootn_ui(flo.get(), lo.get(), n, MPFR_RNDD);
        mpfr_rootn_ui(fhi.get(), hi.get(), n, MPFR_RNDU);
        return from_endpoints(flo, fhi, prec());
    }

    // x^(p/q) for x with positive lower bound, via exp((p/q) log x).
    Ball pow_q(const mpq_class& e) const {
        require_lower_positive("pow");
        Ball ex = from_mpq(mpq_class(e), prec());
        return (ex * log()).exp();
    }

    // ---- queries ---------------------------------------------------------

    bool contains(const mpq_class& q) const {
        return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
    }
    bool contains(const mpz_class& z) const {
        return mpfr_cmp_z(lower().get(), z.get_mpz_t()) <= 0 &&
               mpfr_cmp_z(upper().get(), z.get_mpz_t()) >= 0;
    }
    bool certainly_positive() const { return lower().sgn() > 0; }
    bool certainly_negative() const { return upper().sgn() < 0; }
    friend bool certainly_less(const Ball& a, const Ball& b) {
        return mpfr_cmp(a.upper().get(), b.lower().get()) < 0;
    }

    // rad <= |mid| * 2^-k  (false for a zero midpoint with nonzero radius)
    bool relative_radius_below(long k) const {
        if (mpfr_zero_p(rad_.get())) return true;
        if (mpfr_zero_p(mid_.get())) return false;
        BigFloat bound(kRadiusPrec);
        mpfr_abs(bound.get(), mid_.get(), MPFR_RNDD);
        mpfr_mul_2si(bound.get(), bound.get(), -k, MPFR_RNDD);
        return mpfr_cmp(rad_.get(), bound.get()) <= 0;
    }

    std::string to_string(int digits = 20) const {
        if (is_exact()) return mid_.to_string(digits);
        return mid_.to_string(digits) + " +/- " + rad_.to_string(3);
    }
    std::string interval_string(int digits = 20) const {
        return "[" + lower().to_string(digits) + ", " + upper().to_string(digits) + "]";
    }
    double to_double() const { return mid_.to_double(); }

private:
    static mpfr_prec_t check_prec(mpfr_prec_t p) {
        if (p < 2) throw std::invalid_argument("ball precision too small");
        return p;
    }

    void require_lower_positive(const char* what) const {
        if (lower().sgn() <= 0) throw std::domain_error(std::string(what) + " of non-positive ball");
    }
    void require_lower_nonnegative(const char* what) const {
        if (lower().sgn() < 0) throw std::domain_error(std::string(what) + " of negative ball");
    }

    template <typename F>
    Ball monotone(F f) const {
        BigFloat lo = lower(), hi = upper();
        BigFloat flo(prec()), fhi(prec());
        f(flo.get(), lo.get(), MPFR_RNDD);
        f(fhi.get(), hi.get(), MPFR_RNDU);
        return from_endpoints(flo, fhi, prec());
    }

    // The radius is measured from the already-rounded midpoint, so the
    // midpoint rounding is covered without an extra ulp.
    static Ball from_endpoints(const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec) {
        Ball r(prec);
        mpfr_add(r.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
        mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
        BigFloat d1(kRadiusPrec), d2(kRadiusPrec);
        mpfr_sub(d1.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
        mpfr_sub(d2.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
        mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
        return r;
    }

    // Add one ulp of the midpoint to the radius when a rounding happened.
    void bump_ulp_if(int ternary) {
        if (ternary == 0) return;
        if (mpfr_zero_p(mid_.get())) {
            // inexact and rounded to zero cannot occur in our exponent range
            throw std::logic_error("ball midpoint underflow");
        }
        BigFloat ulp(kRadiusPrec);
        mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - prec(), MPFR_RNDU);
        mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
    }

    BigFloat mid_;
    BigFloat rad_;
};

}  // namespace planepart
