#pragma once

// Dense univariate polynomial with exact rational coefficients, stored as
// integer numerators over one shared positive denominator.  Nothing here
// reduces automatically: the polynomial family keeps its canonical n!
// denominators, and printing reduces per coefficient instead.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planepart/integers.hpp"

namespace planepart {

class ExactPoly {
public:
    ExactPoly() : den_(1) {}

    ExactPoly(std::vector<mpz_class> numerators, mpz_class denominator)
        : num_(std::move(numerators)), den_(std::move(denominator)) {
        if (sgn(den_) <= 0) throw std::invalid_argument("denominator must be positive");
        trim();
    }

    static ExactPoly zero() { return ExactPoly(); }
    static ExactPoly constant(const mpq_class& c) {
        return ExactPoly({mpz_class(c.get_num())}, mpz_class(c.get_den()));
    }
    static ExactPoly x() { return ExactPoly({0, 1}, 1); }

    bool is_zero() const { return num_.empty(); }
    long degree() const { return static_cast<long>(num_.size()) - 1; }  // -1 for zero
    const mpz_class& denominator() const { return den_; }
    const std::vector<mpz_class>& numerators() const { return num_; }

    mpq_class coefficient(std::size_t m) const {
        if (m >= num_.size()) return mpq_class(0);
        mpq_class q(num_[m], den_);
        q.canonicalize();
        return q;
    }
    mpq_class leading_coefficient() const {
        return is_zero() ? mpq_class(0) : coefficient(num_.size() - 1);
    }

    // ---- arithmetic -------------------------------------------------------

    friend ExactPoly operator-(const ExactPoly& p) {
        ExactPoly r = p;
        for (auto& c : r.num_) c = -c;
        return r;
    }

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) { return combine(a, b, 1); }
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return combine(a, b, -1); }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        ExactPoly r;
        r.num_ = mul_vectors(a.num_, b.num_);
        r.den_ = a.den_ * b.den_;
        r.trim();
        return r;
    }

    ExactPoly& operator+=(const ExactPoly& o) { return *this = *this + o; }
    ExactPoly& operator-=(const ExactPoly& o) { return *this = *this - o; }
    ExactPoly& operator*=(const ExactPoly& o) { return *this = *this * o; }

    friend ExactPoly operator*(const ExactPoly& p, const mpq_class& s) {
        if (s == 0) return zero();
        ExactPoly r = p;
        for (auto& c : r.num_) c *= s.get_num();
        r.den_ *= s.get_den();
        r.fix_sign();
        return r;
    }
    friend ExactPoly operator*(const mpq_class& s, const ExactPoly& p) { return p * s; }

    // p(x) * x^k
    ExactPoly shifted_up(std::size_t k) const {
        if (is_zero()) return zero();
        ExactPoly r;
        r.num_.assign(num_.size() + k, mpz_class(0));
        for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i + k] = num_[i];
        r.den_ = den_;
        return r;
    }

    ExactPoly derivative() const {
        if (num_.size() <= 1) return zero();
        ExactPoly r;
        r.num_.resize(num_.size() - 1);
        for (std::size_t i = 1; i < num_.size(); ++i) r.num_[i - 1] = num_[i] * (unsigned long)i;
        r.den_ = den_;
        r.trim();
        return r;
    }

    mpq_class eval(const mpq_class& x) const {
        if (is_zero()) return mpq_class(0);
        mpq_class acc(num_.back());
        for (std::size_t i = num_.size() - 1; i-- > 0;) {
            acc *= x;
            acc += mpq_class(num_[i]);
        }
        acc /= mpq_class(den_);
        acc.canonicalize();
        return acc;
    }
    mpq_class eval_one() const {
        mpz_class s = 0;
        for (const auto& c : num_) s += c;
        mpq_class q(s, den_);
        q.canonicalize();
        return q;
    }

    // Same rational function, smallest denominator.
    ExactPoly normalized() const {
        if (is_zero()) return zero();
        mpz_class g = den_;
        for (const auto& c : num_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) return *this;
        }
        ExactPoly r = *this;
        for (auto& c : r.num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.den_.get_mpz_t(), r.den_.get_mpz_t(), g.get_mpz_t());
        return r;
    }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        if (a.num_.size() != b.num_.size()) return false;
        for (std::size_t i = 0; i < a.num_.size(); ++i)
            if (a.num_[i] * b.den_ != b.num_[i] * a.den_) return false;
        return true;
    }
    friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }

    // "1/2*x^2 + 5/2*x" with each coefficient reduced individually.
    std::string pretty(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = num_.size(); i-- > 0;) {
            if (num_[i] == 0) continue;
            mpq_class c = coefficient(i);
            const bool neg = sgn(c) < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            mpq_class a = abs(c);
            const bool unit = (a == 1);
            if (i == 0) {
                out += to_string(a);
            } else {
                if (!unit) out += to_string(a) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    static ExactPoly combine(const ExactPoly& a, const ExactPoly& b, int bsign) {
        ExactPoly r;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
        mpz_class fa = l / a.den_, fb = l / b.den_;
        if (bsign < 0) fb = -fb;
        r.num_.assign(std::max(a.num_.size(), b.num_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.num_.size(); ++i) r.num_[i] = a.num_[i] * fa;
        for (std::size_t i = 0; i < b.num_.size(); ++i) r.num_[i] += b.num_[i] * fb;
        r.den_ = l;
        r.trim();
        return r;
    }

    // Schoolbook below the crossover, Karatsuba above.
    static constexpr std::size_t kKaratsubaDegree = 512;

    static std::vector<mpz_class> mul_vectors(const std::vector<mpz_class>& a,
                                              const std::vector<mpz_class>& b) {
        if (a.size() <= kKaratsubaDegree + 1 && b.size() <= kKaratsubaDegree + 1)
            return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<mpz_class> mul_school(const std::vector<mpz_class>& a,
                                             const std::vector<mpz_class>& b) {
        std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0)
                    mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        return out;
    }

    static std::vector<mpz_class> mul_karatsuba(const std::vector<mpz_class>& a,
                                                const std::vector<mpz_class>& b) {
        const std::size_t h = std::max(a.size(), b.size()) / 2;
        if (a.size() <= h || b.size() <= h) return mul_school(a, b);
        std::vector<mpz_class> a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
        std::vector<mpz_class> b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
        auto z0 = mul_vectors(a0, b0);
        auto z2 = mul_vectors(a1, b1);
        std::vector<mpz_class> sa(std::max(a0.size(), a1.size()), mpz_class(0));
        std::vector<mpz_class> sb(std::max(b0.size(), b1.size()), mpz_class(0));
        for (std::size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
        for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
        for (std::size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
        for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
        auto z1 = mul_vectors(sa, sb);
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
        for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
        return out;
    }

    void trim() {
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
        if (num_.empty()) den_ = 1;
    }
    void fix_sign() {
        if (sgn(den_) < 0) {
            den_ = -den_;
            for (auto& c : num_) c = -c;
        }
    }

    std::vector<mpz_class> num_;  // num_[m] / den_ is the coefficient of x^m
    mpz_class den_;
};

}  // namespace planepart
