#pragma once

// Exact plane-partition counts pp(n) via MacMahon's recurrence
//
//     n * pp(n) = sum_{k=1..n} sigma_2(k) * pp(n-k),
//
// equivalent to the generating function prod (1-q^n)^{-n}.  The division by
// n is checked for zero remainder at every index, so a wrong sigma_2 table
// or an indexing bug surfaces immediately instead of corrupting the table.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/divisor_sums.hpp"
#include "planepart/integers.hpp"
#include "planepart/report.hpp"

namespace planepart {

struct ResourceCaps {
    // pp(n) has ~0.873*n^(2/3) decimal digits; refuse tables whose estimated
    // footprint exceeds the cap instead of thrashing.
    std::uint64_t memory_bytes = 4ULL << 30;
};

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Estimated bytes for the big-integer values of pp(0..N).
inline std::uint64_t estimate_pp_table_bytes(std::size_t n_max) {
    // digits(n) ~ 0.873 n^(2/3); bytes ~ digits * log2(10)/8 + limb overhead.
    long double digits_total = 0.873L * 0.6L * std::pow((long double)n_max, 5.0L / 3.0L);
    return (std::uint64_t)(digits_total * 0.4153L) + 32ULL * (n_max + 1);
}

class PPTable {
public:
    PPTable() = default;

    std::size_t size() const { return values_.empty() ? 0 : values_.size() - 1; }  // largest index N
    bool empty() const { return values_.empty(); }

    const mpz_class& operator()(std::size_t n) const {
        if (n >= values_.size()) throw std::out_of_range("pp index " + std::to_string(n));
        return values_[n];
    }
    const std::vector<mpz_class>& values() const { return values_; }
    const std::string& sigma2_sha() const { return sigma2_sha_; }

    void truncate(std::size_t n_max) {
        if (n_max + 1 < values_.size()) values_.resize(n_max + 1);
    }

    static PPTable from_values(std::vector<mpz_class> values, std::string sigma2_sha) {
        PPTable t;
        t.values_ = std::move(values);
        t.sigma2_sha_ = std::move(sigma2_sha);
        return t;
    }

private:
    std::vector<mpz_class> values_;  // values_[n] = pp(n)
    std::string sigma2_sha_;
};

inline PPTable pp_exact(std::size_t n_max, const Sigma2Table& sigma,
                        const ResourceCaps& caps = {}) {
    if (sigma.size() < n_max) throw std::invalid_argument("sigma2 table smaller than N");
    if (estimate_pp_table_bytes(n_max) > caps.memory_bytes)
        throw resource_error("estimated pp table footprint exceeds memory cap");

    std::vector<mpz_class> pp(n_max + 1);
    pp[0] = 1;
    mpz_class acc;
    for (std::size_t n = 1; n <= n_max; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            mpz_addmul_ui(acc.get_mpz_t(), pp[n - k].get_mpz_t(), sigma(k));
        pp[n] = checked_exact_div(acc, mpz_class(n), "MacMahon recurrence");
    }
    return PPTable::from_values(std::move(pp), sigma.sha256_hex(n_max));
}

inline PPTable pp_exact(std::size_t n_max, const ResourceCaps& caps = {}) {
    Sigma2Table sigma(n_max ? n_max : 1);
    return pp_exact(n_max, sigma, caps);
}

// Re-derive the recurrence at one index from scratch.
inline bool recurrence_holds_at(const PPTable& t, const Sigma2Table& sigma, std::size_t n) {
    if (n < 1 || n > t.size() || sigma.size() < n) return false;
    mpz_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
        mpz_addmul_ui(acc.get_mpz_t(), t(n - k).get_mpz_t(), sigma(k));
    return acc == mpz_class(n) * t(n);
}

inline bool verify_recurrence(const PPTable& t, const Sigma2Table& sigma) {
    if (t.empty() || t(0) != 1) return false;
    for (std::size_t n = 1; n <= t.size(); ++n)
        if (!recurrence_holds_at(t, sigma, n)) return false;
    return true;
}

// pp(2) = 3 pp(1) and pp(n+1) < 3 pp(n) for every other n >= 1.
inline IneqReport check_step_bound(const PPTable& t, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("step bound needs N >= 1");
    if (t.size() < n_max + 1) throw std::invalid_argument("pp table too small");
    IneqReport report(ReportKind::STEP, "pp(n+1) < 3 pp(n), 1 <= n <= " + std::to_string(n_max));
    for (std::size_t n = 1; n <= n_max; ++n) {
        mpz_class lhs = t(n + 1), rhs = 3 * t(n);
        const int c = cmp(lhs, rhs);
        if (c < 0)
            report.add(static_cast<long>(n), Verdict::HOLDS);
        else if (c == 0)
            report.add(static_cast<long>(n), Verdict::EQUALITY, to_string(lhs));
        else
            report.add(static_cast<long>(n), Verdict::FAILS, to_string(mpz_class(lhs - rhs)));
    }
    return report;
}

// ---------------------------------------------------------------------------
// On-disk format (bit-exact, LF endings):
//   # planepart-table v1
//   # N=<n>
//   # sigma2sha=<hex>
//   <pp(0)>
//   ...
//   <pp(N)>
// ---------------------------------------------------------------------------

class CacheError : public std::runtime_error {
public:
    enum class Reason { Io, BadHeader, BadVersion, HashMismatch, SpotCheckFailed };

    CacheError(Reason r, const std::string& msg) : std::runtime_error(msg), reason_(r) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

inline void save_table(const PPTable& t, const std::string& path) {
    if (t.empty()) throw std::invalid_argument("refusing to save an empty table");
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation
    if (!out) throw CacheError(CacheError::Reason::Io, "cannot open for writing: " + path);
    out << "# planepart-table v1\n";
    out << "# N=" << t.size() << "\n";
    out << "# sigma2sha=" << t.sigma2_sha() << "\n";
    for (std::size_t n = 0; n <= t.size(); ++n) out << t(n).get_str() << "\n";
    out.flush();
    if (!out) throw CacheError(CacheError::Reason::Io, "write failure: " + path);
}

inline PPTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError(CacheError::Reason::Io, "cannot open: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw CacheError(CacheError::Reason::BadHeader, "empty file: " + path);
    if (line.rfind("# planepart-table v", 0) != 0)
        throw CacheError(CacheError::Reason::BadHeader, "missing magic line: " + path);
    if (line != "# planepart-table v1")
        throw CacheError(CacheError::Reason::BadVersion, "unsupported version: " + line);

    if (!std::getline(in, line) || line.rfind("# N=", 0) != 0)
        throw CacheError(CacheError::Reason::BadHeader, "missing N line: " + path);
    std::size_t n_max = 0;
    try {
        n_max = std::stoull(line.substr(4));
    } catch (...) {
        throw CacheError(CacheError::Reason::BadHeader, "unparseable N: " + line);
    }

    if (!std::getline(in, line) || line.rfind("# sigma2sha=", 0) != 0)
        throw CacheError(CacheError::Reason::BadHeader, "missing sigma2sha line: " + path);
    const std::string sha = line.substr(12);

    std::vector<mpz_class> values;
    values.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (!std::getline(in, line))
            throw CacheError(CacheError::Reason::BadHeader, "truncated value block: " + path);
        mpz_class v;
        if (v.set_str(line, 10) != 0 || v < 0)
            throw CacheError(CacheError::Reason::BadHeader, "bad integer at index " + std::to_string(n));
        values.push_back(std::move(v));
    }

    Sigma2Table sigma(n_max ? n_max : 1);
    if (sigma.sha256_hex(n_max) != sha)
        throw CacheError(CacheError::Reason::HashMismatch, "sigma2 hash mismatch: " + path);

    PPTable t = PPTable::from_values(std::move(values), sha);

    // Spot-verify the recurrence before accepting.  Index N is always
    // included: the sum at N touches every entry, so any single tampered
    // value is caught.  Small tables are checked in full.
    if (t(0) != 1)
        throw CacheError(CacheError::Reason::SpotCheckFailed, "pp(0) != 1: " + path);
    if (n_max <= 16) {
        for (std::size_t n = 1; n <= n_max; ++n)
            if (!recurrence_holds_at(t, sigma, n))
                throw CacheError(CacheError::Reason::SpotCheckFailed,
                                 "recurrence fails at index " + std::to_string(n));
    } else {
        std::seed_seq seed(sha.begin(), sha.end());
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(1, n_max);
        std::vector<std::size_t> indices{n_max};
        for (int i = 0; i < 15; ++i) indices.push_back(pick(rng));
        for (std::size_t n : indices)
            if (!recurrence_holds_at(t, sigma, n))
                throw CacheError(CacheError::Reason::SpotCheckFailed,
                                 "recurrence fails at index " + std::to_string(n));
    }
    return t;
}

}  // namespace planepart
