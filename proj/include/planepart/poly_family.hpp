#pragma once

// The polynomial family P_0 = 1,
//
//     P_n(x) = (x/n) sum_{k=1..n} sigma_2(k) P_{n-k}(x),
//
// which specializes to plane partitions at x = 1.  Writing
// P_n = (1/n!) sum_m A_{n,m} x^m, the recurrence becomes integer-only:
//
//     A_{n,m} = sum_{k=1..n} sigma_2(k) * (n-1)!/(n-k)! * A_{n-k,m-1},
//
// so the family is generated without a single rational reduction.  The
// stored denominators stay exactly n!.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/divisor_sums.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/integers.hpp"
#include "planepart/plane_partitions.hpp"
#include "planepart/report.hpp"

namespace planepart {

inline std::uint64_t estimate_family_bytes(std::size_t n_max) {
    // ~n^2/2 coefficients; A_{n,m} <= n! * pp(n), so ~n log2 n bits each.
    long double n = static_cast<long double>(n_max) + 1;
    long double bits = n * std::log2(n > 2 ? n : 2.0L);
    return (std::uint64_t)(n * n / 2 * (bits / 8 + 24));
}

class PolyFamily {
public:
    std::size_t size() const { return polys_.empty() ? 0 : polys_.size() - 1; }  // largest index

    const ExactPoly& at(std::size_t n) const {
        if (n >= polys_.size()) throw std::out_of_range("family index " + std::to_string(n));
        return polys_[n];
    }
    const ExactPoly& operator[](std::size_t n) const { return at(n); }

    friend PolyFamily generate_family(std::size_t, const Sigma2Table&, const ResourceCaps&);

private:
    std::vector<ExactPoly> polys_;
};

inline PolyFamily generate_family(std::size_t n_max, const Sigma2Table& sigma,
                                  const ResourceCaps& caps = {}) {
    if (n_max > 0 && sigma.size() < n_max)
        throw std::invalid_argument("sigma2 table smaller than N");
    if (estimate_family_bytes(n_max) > caps.memory_bytes)
        throw resource_error("estimated family footprint exceeds memory cap");

    // A[n] holds the numerators of P_n over n!.
    std::vector<std::vector<mpz_class>> A(n_max + 1);
    A[0] = {mpz_class(1)};
    mpz_class w, ff;
    for (std::size_t n = 1; n <= n_max; ++n) {
        A[n].assign(n + 1, mpz_class(0));
        ff = 1;  // (n-1)!/(n-k)! for the current k
        for (std::size_t k = 1; k <= n; ++k) {
            w = ff;
            w *= static_cast<unsigned long>(sigma(k));
            const auto& prev = A[n - k];
            for (std::size_t m = 1; m < prev.size() + 1 && m <= n; ++m)
                if (prev[m - 1] != 0)
                    mpz_addmul(A[n][m].get_mpz_t(), w.get_mpz_t(), prev[m - 1].get_mpz_t());
            ff *= static_cast<unsigned long>(n - k);  // extend to (n-1)!/(n-k-1)!
        }
    }

    PolyFamily fam;
    fam.polys_.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        fam.polys_.emplace_back(std::move(A[n]), factorial(static_cast<unsigned long>(n)));
    return fam;
}

inline PolyFamily generate_family(std::size_t n_max, const ResourceCaps& caps = {}) {
    Sigma2Table sigma(n_max ? n_max : 1);
    return generate_family(n_max, sigma, caps);
}

// P_n'(x) assembled from the recurrence: sum_{k=1..n} sigma_2(k)/k * P_{n-k}.
// Must agree with the formal term-by-term derivative of P_n.
inline ExactPoly derivative_by_recurrence(const PolyFamily& fam, std::size_t n,
                                          const Sigma2Table& sigma) {
    if (n < 1 || n > fam.size()) throw std::invalid_argument("derivative index out of range");
    ExactPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class c(sigma(k), k);
        c.canonicalize();
        acc += fam.at(n - k) * c;
    }
    return acc;
}

// P_n - P_{n-1}; evaluates at 1 to pp(n) - pp(n-1).
inline ExactPoly increment_poly(const PolyFamily& fam, std::size_t n) {
    if (n < 1 || n > fam.size()) throw std::invalid_argument("increment index out of range");
    return fam.at(n) - fam.at(n - 1);
}

// Terms (1/l!) C(n+l-1, 2l-1) for l = 1..m: partial sums of
// sum_l term_l * x^l bound P_n(x) strictly from below for n > 1, x >= 1.
inline std::vector<mpq_class> lower_bound_terms(long n, std::size_t m) {
    if (n <= 1) throw std::invalid_argument("lower bound defined for n > 1");
    if (m < 1) throw std::invalid_argument("need at least one term");
    std::vector<mpq_class> terms;
    terms.reserve(m);
    for (std::size_t l = 1; l <= m; ++l) {
        mpq_class t(binomial(mpz_class(n) + static_cast<long>(l) - 1, 2 * l - 1),
                    factorial(static_cast<unsigned long>(l)));
        t.canonicalize();
        terms.push_back(t);
    }
    return terms;
}

// P_{n+1}(xProbe) > P_n(xProbe) for 1 <= n <= N; the claim is stated for
// x >= 1 only and smaller probes are rejected.
inline IneqReport check_monotone(const PolyFamily& fam, std::size_t n_top,
                                 const mpq_class& x_probe) {
    if (x_probe < 1) throw std::invalid_argument("monotonicity probe needs x >= 1");
    if (fam.size() < n_top + 1) throw std::invalid_argument("family too small");
    IneqReport report(ReportKind::CUSTOM,
                      "P_{n+1}(x) > P_n(x), 1 <= n <= " + std::to_string(n_top) +
                          ", x = " + to_string(x_probe));
    for (std::size_t n = 1; n <= n_top; ++n) {
        mpq_class d = fam.at(n + 1).eval(x_probe) - fam.at(n).eval(x_probe);
        const int s = sign(d);
        if (s > 0)
            report.add(static_cast<long>(n), Verdict::HOLDS);
        else
            report.add(static_cast<long>(n), s == 0 ? Verdict::EQUALITY : Verdict::FAILS,
                       to_string(d));
    }
    return report;
}

}  // namespace planepart
