#pragma once

// sigma_2(n) = sum of d^2 over divisors d of n, built by a divisor sieve,
// plus the elementary facts used everywhere else:
//   n^2 <= sigma_2(n) < 2 n^2,
//   sigma_2(n)/n is log-concave along even n.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "planepart/integers.hpp"
#include "planepart/report.hpp"

namespace planepart {

class Sigma2Table {
public:
    // Sieve sigma_2(1..n_max) in O(N log N) additions.
    explicit Sigma2Table(std::size_t n_max) {
        if (n_max == 0) throw std::invalid_argument("sigma2 table needs N >= 1");
        // 2*n^2 must stay below 2^64 for the uint64 storage to be exact.
        if (n_max > 3000000000ULL) throw std::length_error("sigma2 table too large for exact u64 storage");
        values_.assign(n_max + 1, 0);
        for (std::uint64_t d = 1; d <= n_max; ++d) {
            const std::uint64_t dd = d * d;
            for (std::uint64_t m = d; m <= n_max; m += d) values_[m] += dd;
        }
    }

    std::size_t size() const { return values_.size() - 1; }

    std::uint64_t operator()(std::size_t n) const {
        if (n == 0 || n >= values_.size()) throw std::out_of_range("sigma2 index");
        return values_[n];
    }

    // Canonical SHA-256 of sigma_2(1..n); ties cached pp tables to the
    // sigma_2 values they were built from.
    std::string sha256_hex() const { return sha256_hex(size()); }

    std::string sha256_hex(std::size_t n) const {
        if (n > size()) throw std::out_of_range("sha prefix longer than table");
        std::string text = "planepart-sigma2 v1\nN=" + std::to_string(n) + "\n";
        for (std::size_t i = 1; i <= n; ++i)
            text += std::to_string(values_[i]) + "\n";
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 failure");
        static const char* hex = "0123456789abcdef";
        std::string out;
        out.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(hex[digest[i] >> 4]);
            out.push_back(hex[digest[i] & 0xf]);
        }
        return out;
    }

private:
    std::vector<std::uint64_t> values_;  // values_[n] = sigma_2(n); index 0 unused
};

inline Sigma2Table sigma2_table(std::size_t n_max) { return Sigma2Table(n_max); }

// (sigma_2(n)/n)^2 > sigma_2(n-1)/(n-1) * sigma_2(n+1)/(n+1) for even n,
// checked by clearing denominators: cross-multiplied integer comparison only.
inline IneqReport check_sigma2_even_logconcave(const Sigma2Table& t, std::size_t n_max) {
    if (n_max < 2) throw std::invalid_argument("even log-concavity check needs N >= 2");
    if (t.size() < n_max + 1) throw std::invalid_argument("sigma2 table too small");
    IneqReport report(ReportKind::CUSTOM, "sigma2/n log-concave, even n in [2," + std::to_string(n_max) + "]");
    for (std::size_t n = 2; n <= n_max; n += 2) {
        const mpz_class s = t(n), sm = t(n - 1), sp = t(n + 1);
        mpz_class lhs = s * s * (n - 1) * (n + 1);
        mpz_class rhs = sm * sp * mpz_class(n) * mpz_class(n);
        const int c = cmp(lhs, rhs);
        Verdict v = c > 0 ? Verdict::HOLDS : (c == 0 ? Verdict::EQUALITY : Verdict::FAILS);
        if (v == Verdict::HOLDS)
            report.add(static_cast<long>(n), v);
        else
            report.add(static_cast<long>(n), v, to_string(mpz_class(lhs - rhs)));
    }
    return report;
}

// n^2 <= sigma_2(n) < 2 n^2 for all n <= n_max.
inline IneqReport check_sigma2_upper_bound(const Sigma2Table& t, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("bound check needs N >= 1");
    if (t.size() < n_max) throw std::invalid_argument("sigma2 table too small");
    IneqReport report(ReportKind::CUSTOM, "n^2 <= sigma2(n) < 2n^2, n <= " + std::to_string(n_max));
    for (std::size_t n = 1; n <= n_max; ++n) {
        const mpz_class s = t(n);
        const mpz_class nn = mpz_class(n) * mpz_class(n);
        const bool ok = s >= nn && s < 2 * nn;
        if (ok)
            report.add(static_cast<long>(n), Verdict::HOLDS);
        else
            report.add(static_cast<long>(n), Verdict::FAILS, to_string(s));
    }
    return report;
}

}  // namespace planepart
