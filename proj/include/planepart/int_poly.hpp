#pragma once

// Primitive integer polynomials: the exact substrate for Sturm chains and
// square-free decomposition.  A rational polynomial and its primitive
// integer part have the same roots, so every root question is answered here
// with integer arithmetic only.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planepart/exact_poly.hpp"
#include "planepart/integers.hpp"

namespace planepart {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly from_exact(const ExactPoly& p) {
        IntPoly r(std::vector<mpz_class>(p.numerators()));
        return r.primitive_part();
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.back(); }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // Divide by the (positive) content; the sign of the polynomial is kept.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        mpz_class g = content();
        if (g == 1) return *this;
        IntPoly r = *this;
        for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return r;
    }

    IntPoly negated() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        IntPoly r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * (unsigned long)i;
        r.trim();
        return r;
    }

    // Exact value * den^degree at num/den (den > 0): enough for signs and
    // avoids rational arithmetic entirely.
    mpz_class scaled_value(const mpz_class& num, const mpz_class& den) const {
        if (is_zero()) return 0;
        mpz_class acc = c_.back(), dp = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            dp *= den;
            acc *= num;
            acc += c_[i] * dp;
        }
        return acc;
    }

    int sign_at(const mpq_class& x) const {
        return sgn_of(scaled_value(mpz_class(x.get_num()), mpz_class(x.get_den())));
    }
    int sign_at_pos_inf() const { return is_zero() ? 0 : sgn_of(c_.back()); }
    int sign_at_neg_inf() const {
        if (is_zero()) return 0;
        int s = sgn_of(c_.back());
        return (degree() % 2 == 0) ? s : -s;
    }

    // Number of trailing zero coefficients = multiplicity of the root x = 0.
    std::size_t valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v] == 0) ++v;
        return v;
    }
    IntPoly deflated_at_zero() const {
        const std::size_t v = valuation();
        if (v == 0 || is_zero()) return *this;
        return IntPoly(std::vector<mpz_class>(c_.begin() + v, c_.end()));
    }

    // Smallest power of two strictly above every |root| (Cauchy bound).
    mpz_class root_bound_pow2() const {
        if (degree() < 1) return 1;
        mpz_class m = 0, q;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            mpz_class a = abs(c_[i]);
            mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), c_.back().get_mpz_t());
            mpz_abs(q.get_mpz_t(), q.get_mpz_t());
            if (q > m) m = q;
        }
        m += 2;  // >= 1 + max|c_i/c_n|
        mpz_class b = 1;
        while (b < m) b <<= 1;
        return b;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    static int sgn_of(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Pseudo-remainder of f by g with the sign of the true remainder of
// (positive multiple of f) by g; the result is what a Sturm step may negate.
inline IntPoly prem_signed(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
    if (f.degree() < g.degree()) return f;
    std::vector<mpz_class> r(f.coeffs());
    const std::vector<mpz_class>& d = g.coeffs();
    const mpz_class& lg = g.leading();
    const long delta = f.degree() - g.degree();
    long mults = 0;  // how many times r got scaled by lg
    while (static_cast<long>(r.size()) - 1 >= g.degree() && !r.empty()) {
        if (r.back() == 0) {
            r.pop_back();
            continue;
        }
        mpz_class top = r.back();
        const std::size_t shift = r.size() - d.size();
        for (auto& x : r) x *= lg;
        ++mults;
        for (std::size_t i = 0; i < d.size(); ++i)
            mpz_submul(r[shift + i].get_mpz_t(), top.get_mpz_t(), d[i].get_mpz_t());
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    // r now equals lg^mults * f mod g, with mults <= delta + 1.
    IntPoly out{std::move(r)};
    const bool flip = (sgn(lg) < 0) && (mults % 2 == 1);
    return flip ? out.negated() : out;
}

// Exact quotient of integer polynomials; requires g | f in Z[x].
inline IntPoly divexact_poly(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<mpz_class> r(f.coeffs());
    std::vector<mpz_class> q(f.degree() - g.degree() + 1, mpz_class(0));
    const std::vector<mpz_class>& d = g.coeffs();
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        mpz_class& top = r[k + g.degree()];
        if (top == 0) continue;
        mpz_class qk = checked_exact_div(top, g.leading(), "polynomial division");
        q[k] = qk;
        for (std::size_t i = 0; i < d.size(); ++i)
            mpz_submul(r[k + i].get_mpz_t(), qk.get_mpz_t(), d[i].get_mpz_t());
    }
    for (const auto& x : r)
        if (x != 0) throw std::logic_error("inexact polynomial division (remainder)");
    return IntPoly(std::move(q));
}

// Primitive-PRS gcd; result primitive with positive leading coefficient.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return (b.is_zero() || sgn(b.leading()) > 0) ? b : b.negated();
    if (b.is_zero()) return sgn(a.leading()) > 0 ? a : a.negated();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = prem_signed(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return sgn(a.leading()) > 0 ? a : a.negated();
}

inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divexact_poly(p, g).primitive_part();
}

// Square-free decomposition (Tobey-Horowitz): factors[i] is the primitive
// product of the irreducible factors of multiplicity exactly i+1.
// Constant factors are dropped; sum over i of (i+1)*deg(factors[i]) = deg p.
inline std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.degree() < 1) return out;

    std::vector<IntPoly> T{p.primitive_part()};  // T[i] = gcd tower
    while (T.back().degree() > 0)
        T.push_back(poly_gcd(T.back(), T.back().derivative()));

    std::vector<IntPoly> W;  // W[i] = distinct factors of multiplicity > i
    for (std::size_t i = 0; i + 1 < T.size(); ++i)
        W.push_back(divexact_poly(T[i], T[i + 1]).primitive_part());

    for (std::size_t i = 0; i < W.size(); ++i) {
        IntPoly e = (i + 1 < W.size()) ? divexact_poly(W[i], W[i + 1]).primitive_part() : W[i];
        // constant placeholder when no factor has multiplicity i+1
        out.push_back(e.degree() >= 1 ? e : IntPoly({mpz_class(1)}));
    }
    while (!out.empty() && out.back().degree() < 1) out.pop_back();
    return out;
}

// Descartes' rule: sign variations of the coefficient sequence bound the
// number of positive roots (with multiplicity) from above.
inline long descartes_positive_bound(const IntPoly& p) {
    long var = 0;
    int last = 0;
    for (const auto& x : p.coeffs()) {
        const int s = mpz_sgn(x.get_mpz_t());
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace planepart
