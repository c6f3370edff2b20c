#pragma once

// Small helpers on top of gmpxx shared by the whole library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace planepart {

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// n(n-1)...(n-k+1), the falling factorial with k integer factors; ff(n,0) = 1.
inline mpz_class falling_factorial(const mpz_class& n, unsigned long k) {
    mpz_class r = 1;
    mpz_class f = n;
    for (unsigned long i = 0; i < k; ++i) {
        r *= f;
        f -= 1;
    }
    return r;
}

inline mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class num = falling_factorial(n, k);
    mpz_class den = factorial(k);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline mpz_class binomial_ui(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline int sign(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign(const mpq_class& v) { return mpq_sgn(v.get_mpq_t()); }

// Exact quotient; throws if the division leaves a remainder.
inline mpz_class checked_exact_div(const mpz_class& num, const mpz_class& den,
                                   const char* what) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error(std::string("inexact division in ") + what);
    return q;
}

inline mpq_class make_rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

inline std::string to_string(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace planepart
