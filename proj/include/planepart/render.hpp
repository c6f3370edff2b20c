#pragma once

// Plain-text table layouts for the CLI (grids match the reference layout:
// row/col indices, "--" for absent zeros).

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "planepart/divisor_sums.hpp"
#include "planepart/plane_partitions.hpp"
#include "planepart/poly_family.hpp"
#include "planepart/zero_tables.hpp"

namespace planepart {

inline std::string render_row_table(const std::string& head1, const std::vector<std::string>& row1,
                                    const std::string& head2,
                                    const std::vector<std::string>& row2) {
    std::vector<std::size_t> w(row1.size());
    for (std::size_t i = 0; i < row1.size(); ++i) w[i] = std::max(row1[i].size(), row2[i].size());
    const std::size_t hw = std::max(head1.size(), head2.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(hw)) << head1;
    for (std::size_t i = 0; i < row1.size(); ++i)
        out << "  " << std::right << std::setw(static_cast<int>(w[i])) << row1[i];
    out << "\n" << std::left << std::setw(static_cast<int>(hw)) << head2;
    for (std::size_t i = 0; i < row2.size(); ++i)
        out << "  " << std::right << std::setw(static_cast<int>(w[i])) << row2[i];
    out << "\n";
    return out.str();
}

inline std::string render_pp_table(const PPTable& t, std::size_t n_max) {
    std::vector<std::string> ns, vs;
    for (std::size_t n = 0; n <= n_max; ++n) {
        ns.push_back(std::to_string(n));
        vs.push_back(t(n).get_str());
    }
    return render_row_table("n", ns, "pp(n)", vs);
}

inline std::string render_sigma2_table(const Sigma2Table& t, std::size_t n_max) {
    std::vector<std::string> ns, vs;
    for (std::size_t n = 1; n <= n_max; ++n) {
        ns.push_back(std::to_string(n));
        vs.push_back(std::to_string(t(n)));
    }
    return render_row_table("n", ns, "sigma2(n)", vs);
}

inline std::string render_polys(const PolyFamily& fam, std::size_t n_lo, std::size_t n_hi) {
    std::ostringstream out;
    for (std::size_t n = n_lo; n <= n_hi; ++n)
        out << "P_" << n << "(x) = " << fam.at(n).pretty() << "\n";
    return out.str();
}

inline std::string render_turan_polys(const PolyFamily& fam, std::size_t a_lo, std::size_t a_hi) {
    std::ostringstream out;
    for (std::size_t a = a_lo; a <= a_hi; ++a)
        out << "Delta_{" << (a + 1) << "," << (a - 1) << "}(x) = " << turan_poly(fam, a).pretty()
            << "\n";
    return out.str();
}

// Grid with row labels a (starting at a0) and column labels b (starting at b0);
// ragged rows are padded with blanks.
inline std::string render_grid(const std::vector<std::vector<ZeroCell>>& grid, long a0, long b0) {
    std::size_t cols = 0;
    for (const auto& row : grid) cols = std::max(cols, row.size());
    std::vector<std::size_t> w(cols, 1);
    for (std::size_t j = 0; j < cols; ++j) {
        w[j] = std::to_string(b0 + static_cast<long>(j)).size();
        for (const auto& row : grid)
            if (j < row.size()) w[j] = std::max(w[j], row[j].rendered.size());
    }
    std::size_t label_w = 3;
    for (std::size_t i = 0; i < grid.size(); ++i)
        label_w = std::max(label_w, std::to_string(a0 + static_cast<long>(i)).size());

    std::ostringstream out;
    out << std::right << std::setw(static_cast<int>(label_w)) << "a\\b";
    for (std::size_t j = 0; j < cols; ++j)
        out << "  " << std::setw(static_cast<int>(w[j])) << (b0 + static_cast<long>(j));
    out << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << std::setw(static_cast<int>(label_w)) << (a0 + static_cast<long>(i));
        for (std::size_t j = 0; j < grid[i].size(); ++j)
            out << "  " << std::setw(static_cast<int>(w[j])) << grid[i][j].rendered;
        out << "\n";
    }
    return out.str();
}

inline std::string render_rational_row(const std::string& head, long b0,
                                       const std::vector<mpq_class>& values) {
    std::vector<std::string> bs, vs;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bs.push_back(std::to_string(b0 + static_cast<long>(i)));
        vs.push_back(to_string(values[i]));
    }
    return render_row_table("b", bs, head, vs);
}

inline std::string render_integer_row(const std::string& head, long b0,
                                      const std::vector<mpz_class>& values) {
    std::vector<std::string> bs, vs;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bs.push_back(std::to_string(b0 + static_cast<long>(i)));
        vs.push_back(values[i].get_str());
    }
    return render_row_table("b", bs, head, vs);
}

}  // namespace planepart
