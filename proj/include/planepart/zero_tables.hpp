#pragma once

// Largest-zero grids of the defect polynomials, with exact half-up decimal
// rendering of certified enclosures.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "planepart/inequality_lab.hpp"
#include "planepart/integers.hpp"
#include "planepart/poly_family.hpp"
#include "planepart/sturm.hpp"

namespace planepart {

// Index-sliced parallel map over [0, count); results land at their own
// indices, so the output is identical for every job width.
template <typename Fn>
inline void parallel_for_index(std::size_t count, unsigned jobs, Fn fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Exact half-up rounding of a rational to a fixed number of decimals.
inline std::string round_decimal_string(const mpq_class& v, int decimals) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    mpq_class scaled = v * mpq_class(scale);
    // round half up: floor(scaled + 1/2)
    scaled += mpq_class(1, 2);
    mpz_class units;
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    const bool neg = units < 0;
    mpz_class a = abs(units);
    std::string digits = a.get_str();
    if (decimals == 0) return (neg ? "-" : "") + digits;
    if (digits.size() <= static_cast<std::size_t>(decimals))
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    return (neg ? "-" : "") + digits;
}

struct ZeroCell {
    std::optional<RationalInterval> enclosure;  // nullopt = no zero in range
    std::string rendered;                       // rounded digits or "--"
};

// Largest real zero of P_{a,b} over the whole line, for 1 <= a <= a_max,
// 1 <= b <= b_max; symmetric, so only b <= a is computed.
inline std::vector<std::vector<ZeroCell>> bo_zero_grid(const PolyFamily& fam, std::size_t a_max,
                                                       std::size_t b_max, int decimals,
                                                       unsigned jobs = 1) {
    if (fam.size() < a_max + b_max) throw std::invalid_argument("family too small for grid");
    const mpq_class tol(1, 1000000);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 1; a <= a_max; ++a)
        for (std::size_t b = 1; b <= b_max && b <= a; ++b) pairs.emplace_back(a, b);
    std::vector<ZeroCell> cells(pairs.size());
    parallel_for_index(pairs.size(), jobs, [&](std::size_t i) {
        const auto [a, b] = pairs[i];
        auto top = largest_real_root(bo_poly(fam, a, b), tol);
        if (top) {
            cells[i].enclosure = *top;
            cells[i].rendered = round_decimal_string(top->midpoint(), decimals);
        } else {
            cells[i].rendered = "--";
        }
    });
    std::vector<std::vector<ZeroCell>> grid(a_max, std::vector<ZeroCell>(b_max));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [a, b] = pairs[i];
        grid[a - 1][b - 1] = cells[i];
        if (b <= a_max && a <= b_max) grid[b - 1][a - 1] = cells[i];
    }
    return grid;
}

// Largest zero of Delta_{a,b} in (0, inf), for 0 <= b < a-1 <= a_max-1;
// "--" marks the absence of a positive real zero.
inline std::vector<std::vector<ZeroCell>> cft_zero_grid(const PolyFamily& fam, std::size_t a_max,
                                                        int decimals, unsigned jobs = 1) {
    if (a_max < 2) throw std::invalid_argument("grid needs a_max >= 2");
    if (fam.size() < a_max) throw std::invalid_argument("family too small for grid");
    const mpq_class tol(1, 1000000);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 2; a <= a_max; ++a)
        for (std::size_t b = 0; b + 1 < a; ++b) pairs.emplace_back(a, b);
    std::vector<ZeroCell> cells(pairs.size());
    parallel_for_index(pairs.size(), jobs, [&](std::size_t i) {
        const auto [a, b] = pairs[i];
        ExactPoly d = cft_poly(fam, a, b);
        // window (0, B]: B from the polynomial's own root bound
        mpz_class bound = IntPoly::from_exact(d).root_bound_pow2();
        auto top = largest_real_root(d, tol, RationalInterval{mpq_class(0), mpq_class(bound)});
        if (top) {
            cells[i].enclosure = *top;
            cells[i].rendered = round_decimal_string(top->midpoint(), decimals);
        } else {
            cells[i].rendered = "--";
        }
    });
    std::vector<std::vector<ZeroCell>> grid;
    std::size_t idx = 0;
    for (std::size_t a = 2; a <= a_max; ++a) {
        std::vector<ZeroCell> row;
        for (std::size_t b = 0; b + 1 < a; ++b) row.push_back(cells[idx++]);
        grid.push_back(std::move(row));
    }
    return grid;
}

// Largest real zero of the Turan defect per a (the real-axis view of the
// zero plots).
inline std::vector<ZeroCell> turan_zero_list(const PolyFamily& fam, std::size_t a_max,
                                             int decimals) {
    if (fam.size() < a_max + 1) throw std::invalid_argument("family too small");
    const mpq_class tol(1, 1000000);
    std::vector<ZeroCell> out;
    for (std::size_t a = 1; a <= a_max; ++a) {
        auto top = largest_real_root(turan_poly(fam, a), tol);
        ZeroCell cell;
        if (top) {
            cell.enclosure = *top;
            cell.rendered = round_decimal_string(top->midpoint(), decimals);
        } else {
            cell.rendered = "--";
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace planepart
