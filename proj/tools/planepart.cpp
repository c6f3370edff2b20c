// planepart: exact and certified verification of plane-partition
// inequalities, table reproduction, and zero/figure data export.
//
// Exit codes: 0 = success / every claimed inequality holds,
//             1 = a verdict contradicts the invoked claim,
//             2 = usage error,
//             3 = undecided (UNCERTAIN) verdicts present.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "planepart/planepart.hpp"

namespace fs = std::filesystem;
using namespace planepart;

namespace {

enum class Format { Table, Csv, Json };

struct GlobalOpts {
    Format format = Format::Table;
    unsigned jobs = 1;
    std::string cache_dir;
    std::uint64_t memory_cap = ResourceCaps{}.memory_bytes;

    ResourceCaps caps() const { return ResourceCaps{memory_cap}; }
};

std::string cache_dir_or_default(const GlobalOpts& g) {
    if (!g.cache_dir.empty()) return g.cache_dir;
    if (const char* env = std::getenv("PLANEPART_CACHE_DIR")) return env;
    return {};
}

fs::path cache_file(const std::string& dir, std::size_t n) {
    return fs::path(dir) / ("pp-" + std::to_string(n) + ".txt");
}

// Smallest cached table covering n, truncated to n; empty when none fits.
std::optional<PPTable> find_cached(const std::string& dir, std::size_t n) {
    if (dir.empty() || !fs::is_directory(dir)) return std::nullopt;
    std::optional<std::size_t> best;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (name.rfind("pp-", 0) != 0 || name.size() < 8) continue;
        if (name.substr(name.size() - 4) != ".txt") continue;
        try {
            const std::size_t m = std::stoull(name.substr(3, name.size() - 7));
            if (m >= n && (!best || m < *best)) best = m;
        } catch (...) {
            continue;
        }
    }
    if (!best) return std::nullopt;
    try {
        PPTable t = load_table(cache_file(dir, *best).string());
        t.truncate(n);
        return t;
    } catch (const CacheError& e) {
        std::cerr << "warning: ignoring unusable cache file: " << e.what() << "\n";
        return std::nullopt;
    }
}

PPTable pp_table_for(const GlobalOpts& g, std::size_t n) {
    const std::string dir = cache_dir_or_default(g);
    if (auto t = find_cached(dir, n)) return std::move(*t);
    std::cerr << "computing pp(0.." << n << ") ...\n";
    return pp_exact(n, g.caps());
}

void emit_report(const GlobalOpts& g, const IneqReport& r) {
    if (g.format == Format::Json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        std::cout << report_to_csv(r);
    } else {
        std::cout << "# " << to_string(r.kind()) << ": " << r.range() << "\n";
        std::cout << "entries: " << r.entries().size() << "  holds: " << r.count(Verdict::HOLDS)
                  << "  fails: " << r.count(Verdict::FAILS)
                  << "  equality: " << r.count(Verdict::EQUALITY)
                  << "  uncertain: " << r.count(Verdict::UNCERTAIN) << "\n";
        for (const auto& e : r.entries()) {
            if (e.verdict == Verdict::HOLDS) continue;
            std::cout << "  " << to_string(e.verdict) << " at ";
            if (e.has_pair())
                std::cout << "(" << e.i << ", " << e.j << ")";
            else
                std::cout << "n = " << e.i;
            if (e.witness) std::cout << "  witness " << *e.witness;
            std::cout << "\n";
        }
    }
}

int report_exit(const IneqReport& r, const std::function<bool(const ReportEntry&)>& expected) {
    bool bad = false, uncertain = false;
    for (const auto& e : r.entries()) {
        if (e.verdict == Verdict::UNCERTAIN) uncertain = true;
        else if (!expected(e)) bad = true;
    }
    if (bad) return 1;
    if (uncertain) return 3;
    return 0;
}

void emit_zero_grid(const GlobalOpts& g, const std::vector<std::vector<ZeroCell>>& grid, long a0,
                    long b0) {
    if (g.format == Format::Table) {
        std::cout << render_grid(grid, a0, b0);
        return;
    }
    if (g.format == Format::Csv) {
        std::cout << "a,b,zero,enclosure_lo,enclosure_hi\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid[i].size(); ++j) {
                const auto& c = grid[i][j];
                std::cout << (a0 + static_cast<long>(i)) << "," << (b0 + static_cast<long>(j))
                          << "," << c.rendered << ",";
                if (c.enclosure)
                    std::cout << to_string(c.enclosure->lo) << "," << to_string(c.enclosure->hi);
                else
                    std::cout << ",";
                std::cout << "\n";
            }
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            const auto& c = grid[i][j];
            nlohmann::json row{{"a", a0 + static_cast<long>(i)},
                               {"b", b0 + static_cast<long>(j)},
                               {"zero", c.rendered}};
            if (c.enclosure) {
                row["enclosure_lo"] = to_string(c.enclosure->lo);
                row["enclosure_hi"] = to_string(c.enclosure->hi);
            }
            rows.push_back(std::move(row));
        }
    std::cout << nlohmann::json{{"schema", "planepart-zeros v1"}, {"rows", std::move(rows)}}.dump(2)
              << "\n";
}

void emit_complex_rows(const std::vector<std::tuple<long, long, ComplexRootEstimate>>& rows) {
    std::cout << complex_roots_to_csv(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-partition inequality laboratory (exact + certified arithmetic)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    std::map<std::string, Format> fmt_map{
        {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", g.format, "output format")
        ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case))
        ->default_str("table");
    app.add_option("--jobs", g.jobs, "parallel sweep width (deterministic output)")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir,
                   "pp table cache directory (or env PLANEPART_CACHE_DIR)");
    app.add_option("--memory-cap", g.memory_cap, "memory cap in bytes for big tables");

    std::function<int()> action;

    // ---- table ------------------------------------------------------------
    auto* table = app.add_subcommand("table", "print reference tables");
    table->require_subcommand(1);
    {
        auto* pp = table->add_subcommand("pp", "plane partition counts");
        auto max = std::make_shared<std::size_t>(10);
        pp->add_option("--max", *max, "largest n");
        pp->callback([&, max] {
            action = [&, max] {
                PPTable t = pp_table_for(g, *max);
                if (g.format == Format::Table) {
                    std::cout << render_pp_table(t, *max);
                } else if (g.format == Format::Csv) {
                    std::cout << "n,pp\n";
                    for (std::size_t n = 0; n <= *max; ++n)
                        std::cout << n << "," << t(n).get_str() << "\n";
                } else {
                    nlohmann::json vals = nlohmann::json::array();
                    for (std::size_t n = 0; n <= *max; ++n) vals.push_back(t(n).get_str());
                    std::cout << nlohmann::json{{"schema", "planepart-pp v1"}, {"values", vals}}.dump(2)
                              << "\n";
                }
                return 0;
            };
        });

        auto* sig = table->add_subcommand("sigma2", "divisor square sums");
        auto smax = std::make_shared<std::size_t>(5);
        sig->add_option("--max", *smax, "largest n");
        sig->callback([&, smax] {
            action = [&, smax] {
                Sigma2Table t(*smax);
                if (g.format == Format::Table) {
                    std::cout << render_sigma2_table(t, *smax);
                } else if (g.format == Format::Csv) {
                    std::cout << "n,sigma2\n";
                    for (std::size_t n = 1; n <= *smax; ++n)
                        std::cout << n << "," << t(n) << "\n";
                } else {
                    nlohmann::json vals = nlohmann::json::array();
                    for (std::size_t n = 1; n <= *smax; ++n) vals.push_back(t(n));
                    std::cout << nlohmann::json{{"schema", "planepart-sigma2 v1"}, {"values", vals}}.dump(2)
                              << "\n";
                }
                return 0;
            };
        });

        auto* po = table->add_subcommand("polys", "the polynomial family");
        auto pmin = std::make_shared<std::size_t>(1);
        auto pmax = std::make_shared<std::size_t>(5);
        po->add_option("--min", *pmin, "first index");
        po->add_option("--max", *pmax, "last index");
        po->callback([&, pmin, pmax] {
            action = [&, pmin, pmax] {
                if (*pmin > *pmax) throw CLI::ValidationError("--min must be <= --max");
                PolyFamily fam = generate_family(*pmax, g.caps());
                if (g.format == Format::Table) {
                    std::cout << render_polys(fam, *pmin, *pmax);
                } else if (g.format == Format::Json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (std::size_t n = *pmin; n <= *pmax; ++n)
                        arr.push_back(poly_to_json(fam.at(n), static_cast<long>(n)));
                    std::cout << arr.dump(2) << "\n";
                } else {
                    std::cout << "n,poly\n";
                    for (std::size_t n = *pmin; n <= *pmax; ++n)
                        std::cout << n << "," << csv_escape(fam.at(n).pretty()) << "\n";
                }
                return 0;
            };
        });

        auto* tu = table->add_subcommand("turan-polys", "Turan defect polynomials");
        auto tmin = std::make_shared<std::size_t>(2);
        auto tmax = std::make_shared<std::size_t>(5);
        tu->add_option("--min", *tmin, "first a");
        tu->add_option("--max", *tmax, "last a");
        tu->callback([&, tmin, tmax] {
            action = [&, tmin, tmax] {
                if (*tmin < 1 || *tmin > *tmax) throw CLI::ValidationError("bad a range");
                PolyFamily fam = generate_family(*tmax + 1, g.caps());
                if (g.format == Format::Table) {
                    std::cout << render_turan_polys(fam, *tmin, *tmax);
                } else if (g.format == Format::Json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (std::size_t a = *tmin; a <= *tmax; ++a)
                        arr.push_back(poly_to_json(turan_poly(fam, a), static_cast<long>(a)));
                    std::cout << arr.dump(2) << "\n";
                } else {
                    std::cout << "a,poly\n";
                    for (std::size_t a = *tmin; a <= *tmax; ++a)
                        std::cout << a << "," << csv_escape(turan_poly(fam, a).pretty()) << "\n";
                }
                return 0;
            };
        });

        auto* ms = table->add_subcommand("minimal-sums", "clamped polynomial defect sums");
        auto msx = std::make_shared<std::string>("2");
        auto msb = std::make_shared<std::size_t>(10);
        ms->add_option("--x", *msx, "evaluation point (rational)");
        ms->add_option("--b-max", *msb, "last b");
        ms->callback([&, msx, msb] {
            action = [&, msx, msb] {
                PolyFamily fam = generate_family(11, g.caps());
                auto sums = minimal_sums_table(fam, rational_from_string(*msx), *msb);
                if (g.format == Format::Table) {
                    std::cout << render_rational_row("sum", 1, sums);
                } else if (g.format == Format::Csv) {
                    std::cout << "b,sum\n";
                    for (std::size_t i = 0; i < sums.size(); ++i)
                        std::cout << (i + 1) << "," << to_string(sums[i]) << "\n";
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (std::size_t i = 0; i < sums.size(); ++i)
                        arr.push_back({{"b", i + 1}, {"sum", to_string(sums[i])}});
                    std::cout << arr.dump(2) << "\n";
                }
                return 0;
            };
        });

        auto* ps = table->add_subcommand("pp-sums", "clamped pp defect sums");
        auto psb = std::make_shared<std::size_t>(9);
        ps->add_option("--b-max", *psb, "last b");
        ps->callback([&, psb] {
            action = [&, psb] {
                PPTable t = pp_table_for(g, 11);
                auto sums = pp_sums_table(t, *psb);
                if (g.format == Format::Table) {
                    std::cout << render_integer_row("sum", 2, sums);
                } else if (g.format == Format::Csv) {
                    std::cout << "b,sum\n";
                    for (std::size_t i = 0; i < sums.size(); ++i)
                        std::cout << (i + 2) << "," << sums[i].get_str() << "\n";
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (std::size_t i = 0; i < sums.size(); ++i)
                        arr.push_back({{"b", i + 2}, {"sum", sums[i].get_str()}});
                    std::cout << arr.dump(2) << "\n";
                }
                return 0;
            };
        });
    }

    // ---- zeros ------------------------------------------------------------
    auto* zeros = app.add_subcommand("zeros", "largest real zeros and zero plots");
    zeros->require_subcommand(1);
    {
        auto* bo = zeros->add_subcommand("bo", "largest real zeros of the BO defect grid");
        auto amax = std::make_shared<std::size_t>(12);
        auto bmax = std::make_shared<std::size_t>(12);
        auto dec = std::make_shared<int>(1);
        bo->add_option("--a-max", *amax);
        bo->add_option("--b-max", *bmax);
        bo->add_option("--decimals", *dec)->check(CLI::Range(0, 12));
        bo->callback([&, amax, bmax, dec] {
            action = [&, amax, bmax, dec] {
                PolyFamily fam = generate_family(*amax + *bmax, g.caps());
                emit_zero_grid(g, bo_zero_grid(fam, *amax, *bmax, *dec, g.jobs), 1, 1);
                return 0;
            };
        });

        auto* cf = zeros->add_subcommand("cft", "largest positive zeros of the Delta grid");
        auto camax = std::make_shared<std::size_t>(20);
        auto cdec = std::make_shared<int>(2);
        auto cemit = std::make_shared<bool>(false);
        auto cbmin = std::make_shared<std::size_t>(2);
        auto cbmax = std::make_shared<std::size_t>(4);
        auto cprec = std::make_shared<unsigned>(128);
        cf->add_option("--a-max", *camax);
        cf->add_option("--decimals", *cdec)->check(CLI::Range(0, 12));
        cf->add_flag("--emit-complex", *cemit, "emit zeros with positive real part as CSV");
        cf->add_option("--b-min", *cbmin, "first b for --emit-complex");
        cf->add_option("--b-max", *cbmax, "last b for --emit-complex");
        cf->add_option("--precision-bits", *cprec, "working precision for --emit-complex");
        cf->callback([&, camax, cdec, cemit, cbmin, cbmax, cprec] {
            action = [&, camax, cdec, cemit, cbmin, cbmax, cprec] {
                if (*cemit) {
                    PolyFamily fam = generate_family(*camax, g.caps());
                    std::vector<std::tuple<long, long, ComplexRootEstimate>> rows;
                    bool uncertain = false;
                    for (std::size_t b = *cbmin; b <= *cbmax; ++b) {
                        for (std::size_t a = b + 2; a <= *camax; ++a) {
                            RootSummary s = positive_real_part_roots(cft_poly(fam, a, b),
                                                                     static_cast<mpfr_prec_t>(*cprec));
                            uncertain = uncertain || s.uncertain;
                            for (auto& r : s.complex_roots)
                                rows.emplace_back(static_cast<long>(a), static_cast<long>(b), r);
                        }
                    }
                    emit_complex_rows(rows);
                    return uncertain ? 3 : 0;
                }
                PolyFamily fam = generate_family(*camax, g.caps());
                emit_zero_grid(g, cft_zero_grid(fam, *camax, *cdec, g.jobs), 2, 0);
                return 0;
            };
        });

        auto* tu = zeros->add_subcommand("turan", "largest zeros of the Turan defect");
        auto tamax = std::make_shared<std::size_t>(20);
        auto tdec = std::make_shared<int>(2);
        auto temit = std::make_shared<bool>(false);
        auto tprec = std::make_shared<unsigned>(128);
        tu->add_option("--a-max", *tamax);
        tu->add_option("--decimals", *tdec)->check(CLI::Range(0, 12));
        tu->add_flag("--emit-complex", *temit, "emit zeros with positive real part as CSV");
        tu->add_option("--precision-bits", *tprec, "working precision for --emit-complex");
        tu->callback([&, tamax, tdec, temit, tprec] {
            action = [&, tamax, tdec, temit, tprec] {
                PolyFamily fam = generate_family(*tamax + 1, g.caps());
                if (*temit) {
                    std::vector<std::tuple<long, long, ComplexRootEstimate>> rows;
                    bool uncertain = false;
                    for (std::size_t a = 1; a <= *tamax; ++a) {
                        RootSummary s = positive_real_part_roots(turan_poly(fam, a),
                                                                 static_cast<mpfr_prec_t>(*tprec));
                        uncertain = uncertain || s.uncertain;
                        for (auto& r : s.complex_roots)
                            rows.emplace_back(static_cast<long>(a + 1), static_cast<long>(a - 1), r);
                    }
                    emit_complex_rows(rows);
                    return uncertain ? 3 : 0;
                }
                auto cells = turan_zero_list(fam, *tamax, *tdec);
                std::vector<std::vector<ZeroCell>> grid;
                for (auto& c : cells) grid.push_back({c});
                emit_zero_grid(g, grid, 1, 0);
                return 0;
            };
        });
    }

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "inequality verification sweeps");
    verify->require_subcommand(1);
    {
        auto* bopp = verify->add_subcommand("bo-pp", "pp(a)pp(b) > pp(a+b)");
        auto smin = std::make_shared<std::size_t>(12);
        auto smax = std::make_shared<std::size_t>(472);
        bopp->add_option("--sum-min", *smin);
        bopp->add_option("--sum-max", *smax);
        bopp->callback([&, smin, smax] {
            action = [&, smin, smax] {
                PPTable t = pp_table_for(g, *smax);
                IneqReport r = verify_bo_pp(t, *smin, *smax);
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) {
                    if (e.i + e.j >= 12) return e.verdict == Verdict::HOLDS;
                    return true;  // the small region is informational
                });
            };
        });

        auto* lc = verify->add_subcommand("logconcave-pp", "pp(n)^2 > pp(n-1)pp(n+1)");
        auto nmin = std::make_shared<std::size_t>(2);
        auto nmax = std::make_shared<std::size_t>(1000);
        auto backend = std::make_shared<std::string>("exact");
        auto prec = std::make_shared<unsigned>(192);
        lc->add_option("--n-min", *nmin);
        lc->add_option("--n-max", *nmax);
        lc->add_option("--backend", *backend)->check(CLI::IsMember({"exact", "ball"}));
        lc->add_option("--precision-bits", *prec)->check(CLI::Range(64u, 65536u));
        lc->callback([&, nmin, nmax, backend, prec] {
            action = [&, nmin, nmax, backend, prec] {
                IneqReport r;
                if (*backend == "ball") {
                    std::cerr << "computing ball pp(0.." << (*nmax + 1) << ") at " << *prec
                              << " bits ...\n";
                    BallPPTable t = pp_ball(*nmax + 1, static_cast<mpfr_prec_t>(*prec));
                    if (t.degraded()) std::cerr << "warning: ball table degraded\n";
                    r = verify_logconcave_pp(t, *nmin, *nmax);
                } else {
                    PPTable t = pp_table_for(g, *nmax + 1);
                    r = verify_logconcave_pp(t, *nmin, *nmax);
                }
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) {
                    const bool predicted = (e.i >= 12) || (e.i % 2 == 0);
                    return predicted ? e.verdict == Verdict::HOLDS : true;
                });
            };
        });

        auto* st = verify->add_subcommand("step-bound", "pp(n+1) < 3 pp(n), equality at n = 1");
        auto stmax = std::make_shared<std::size_t>(1000);
        st->add_option("--max", *stmax);
        st->callback([&, stmax] {
            action = [&, stmax] {
                PPTable t = pp_table_for(g, *stmax + 1);
                IneqReport r = check_step_bound(t, *stmax);
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) {
                    return e.i == 1 ? e.verdict == Verdict::EQUALITY
                                    : e.verdict == Verdict::HOLDS;
                });
            };
        });

        auto* bp = verify->add_subcommand("bo-poly", "P_a(x)P_b(x) > P_{a+b}(x) at a probe");
        auto bpx = std::make_shared<std::string>("2");
        auto bpsmin = std::make_shared<std::size_t>(12);
        auto bpsmax = std::make_shared<std::size_t>(52);
        bp->add_option("--x", *bpx, "probe (rational)");
        bp->add_option("--sum-min", *bpsmin);
        bp->add_option("--sum-max", *bpsmax);
        bp->callback([&, bpx, bpsmin, bpsmax] {
            action = [&, bpx, bpsmin, bpsmax] {
                PolyFamily fam = generate_family(*bpsmax, g.caps());
                IneqReport r = verify_bo_poly(fam, rational_from_string(*bpx), *bpsmin, *bpsmax);
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) { return e.verdict == Verdict::HOLDS; });
            };
        });

        auto* ec = verify->add_subcommand("even-coeffs", "Turan defect coefficient signs");
        auto ecmax = std::make_shared<std::size_t>(200);
        ec->add_option("--a-max", *ecmax);
        ec->callback([&, ecmax] {
            action = [&, ecmax] {
                PolyFamily fam = generate_family(*ecmax + 1, g.caps());
                IneqReport r = even_a_coefficient_scan(fam, *ecmax);
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) {
                    return e.i % 2 == 0 ? e.verdict == Verdict::HOLDS : true;
                });
            };
        });

        auto* mo = verify->add_subcommand("monotone", "P_{n+1}(x) > P_n(x) at a probe");
        auto momax = std::make_shared<std::size_t>(50);
        auto mox = std::make_shared<std::string>("1");
        mo->add_option("--max", *momax);
        mo->add_option("--x", *mox, "probe (rational, >= 1)");
        mo->callback([&, momax, mox] {
            action = [&, momax, mox] {
                PolyFamily fam = generate_family(*momax + 1, g.caps());
                IneqReport r = check_monotone(fam, *momax, rational_from_string(*mox));
                emit_report(g, r);
                return report_exit(r, [](const ReportEntry& e) { return e.verdict == Verdict::HOLDS; });
            };
        });
    }

    // ---- bounds -----------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "closed-form final-step bounds");
    {
        auto* fsp = bounds->add_subcommand("final-step", "threshold of a bound polynomial");
        auto kind = std::make_shared<std::string>("grad7");
        fsp->add_option("--kind", *kind)->check(CLI::IsMember({"grad7", "x2final", "pp-final"}));
        fsp->callback([&, kind] {
            action = [&, kind] {
                FinalStepKind k = *kind == "grad7" ? FinalStepKind::GRAD7
                                 : *kind == "x2final" ? FinalStepKind::X2FINAL
                                                      : FinalStepKind::PP_FINAL;
                FinalStepResult r = final_step_poly(k);
                if (g.format == Format::Json) {
                    nlohmann::json j{{"kind", to_string(k)},
                                     {"positive_from", r.positive_from},
                                     {"tail_certified", r.tail_certified},
                                     {"poly", poly_to_json(r.poly)}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "bound(" << to_string(k) << ") = " << r.poly.pretty("a") << "\n";
                    std::cout << "positive for every integer a >= " << r.positive_from
                              << (r.tail_certified ? " (tail certified)" : " (NOT certified)")
                              << "\n";
                }
                return r.tail_certified ? 0 : 1;
            };
        });
        bounds->require_subcommand(1);
    }

    // ---- asym -------------------------------------------------------------
    auto* asym = app.add_subcommand("asym", "asymptotic growth and expansion checks");
    asym->require_subcommand(1);
    {
        auto* wr = asym->add_subcommand("wright", "growth-law estimate");
        auto wn = std::make_shared<unsigned long>(100);
        auto wd = std::make_shared<long>(64);
        auto wratio = std::make_shared<bool>(false);
        wr->add_option("--n", *wn)->check(CLI::PositiveNumber);
        wr->add_option("--digits", *wd)->check(CLI::Range(16l, 4096l));
        wr->add_flag("--with-ratio", *wratio, "also print pp(n)/estimate (computes pp exactly)");
        wr->callback([&, wn, wd, wratio] {
            action = [&, wn, wd, wratio] {
                WrightEstimate w = wright_estimate(*wn, *wd);
                if (g.format == Format::Json) {
                    nlohmann::json j{{"n", *wn},
                                     {"estimate", w.estimate.to_string(static_cast<int>(*wd))},
                                     {"C1", w.constants.C1.to_string(static_cast<int>(*wd))},
                                     {"C2", w.constants.C2.to_string(static_cast<int>(*wd))},
                                     {"zeta3", w.constants.zeta3.to_string(static_cast<int>(*wd))},
                                     {"zeta_prime_minus1",
                                      w.constants.zeta_prime_minus1.to_string(static_cast<int>(*wd))}};
                    if (*wratio) {
                        PPTable t = pp_table_for(g, *wn);
                        Ball ratio = Ball::from_mpz(t(*wn), w.estimate.prec()) / w.estimate;
                        j["ratio"] = ratio.to_string(20);
                    }
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "estimate(" << *wn << ") = " << w.estimate.to_string(24) << "\n";
                    std::cout << "C1 = " << w.constants.C1.to_string(static_cast<int>(*wd)) << "\n";
                    std::cout << "C2 = " << w.constants.C2.to_string(static_cast<int>(*wd)) << "\n";
                    std::cout << "zeta(3) = " << w.constants.zeta3.to_string(static_cast<int>(*wd))
                              << "\n";
                    std::cout << "zeta'(-1) = "
                              << w.constants.zeta_prime_minus1.to_string(static_cast<int>(*wd))
                              << "\n";
                    if (*wratio) {
                        PPTable t = pp_table_for(g, *wn);
                        Ball ratio = Ball::from_mpz(t(*wn), w.estimate.prec()) / w.estimate;
                        std::cout << "pp(n)/estimate = " << ratio.to_string(20) << "\n";
                    }
                }
                return 0;
            };
        });

        auto* ko = asym->add_subcommand("konkav", "second-difference expansion residuals");
        auto kos = std::make_shared<std::string>("2/3");
        auto konmin = std::make_shared<unsigned long>(100);
        auto konmax = std::make_shared<unsigned long>(10000);
        auto koprec = std::make_shared<unsigned>(192);
        ko->add_option("--s", *kos, "exponent (rational)");
        ko->add_option("--n-min", *konmin);
        ko->add_option("--n-max", *konmax);
        ko->add_option("--precision-bits", *koprec)->check(CLI::Range(64u, 65536u));
        ko->callback([&, kos, konmin, konmax, koprec] {
            action = [&, kos, konmin, konmax, koprec] {
                KonkavReport r = expansion_check_konkav(rational_from_string(*kos), *konmin,
                                                        *konmax, static_cast<mpfr_prec_t>(*koprec));
                if (g.format == Format::Csv) {
                    std::cout << konkav_to_csv(r);
                } else if (g.format == Format::Json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& s : r.samples)
                        arr.push_back({{"n", s.n},
                                       {"lo", s.residual.lower().to_string(20)},
                                       {"hi", s.residual.upper().to_string(20)}});
                    nlohmann::json sups = nlohmann::json::array();
                    for (const auto& [d, v] : r.decade_sup)
                        sups.push_back({{"decade", d}, {"sup_abs", v.to_string(10)}});
                    std::cout << nlohmann::json{{"schema", "planepart-konkav v1"},
                                                {"s", to_string(r.s)},
                                                {"samples", std::move(arr)},
                                                {"decade_sup", std::move(sups)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "# residual R_n, s = " << to_string(r.s) << "\n";
                    for (const auto& [d, v] : r.decade_sup)
                        std::cout << "decade 10^" << d << ": sup |R_n| <= " << v.to_string(10)
                                  << "\n";
                }
                return 0;
            };
        });

        auto* co = asym->add_subcommand("corollary", "two-sided exponential comparison");
        auto conmin = std::make_shared<unsigned long>(1000);
        auto conmax = std::make_shared<unsigned long>(100000);
        auto coprec = std::make_shared<unsigned>(192);
        auto codigits = std::make_shared<long>(64);
        co->add_option("--n-min", *conmin);
        co->add_option("--n-max", *conmax);
        co->add_option("--precision-bits", *coprec)->check(CLI::Range(64u, 65536u));
        co->add_option("--digits", *codigits, "digits for the growth constant");
        co->callback([&, conmin, conmax, coprec, codigits] {
            action = [&, conmin, conmax, coprec, codigits] {
                WrightConstants c = wright_constants(*codigits);
                CorollaryReport r = expansion_check_corollary(c.C1, *conmin, *conmax,
                                                              static_cast<mpfr_prec_t>(*coprec));
                if (g.format == Format::Csv) {
                    std::cout << corollary_to_csv(r);
                } else if (g.format == Format::Json) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& s : r.samples)
                        arr.push_back({{"n", s.n},
                                       {"lower", s.lower.mid().to_string(20)},
                                       {"middle", s.middle.mid().to_string(20)},
                                       {"upper", s.upper.mid().to_string(20)},
                                       {"verdict", to_string(s.verdict)}});
                    std::cout << nlohmann::json{{"schema", "planepart-corollary v1"},
                                                {"holds_from", r.holds_from},
                                                {"samples", std::move(arr)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::size_t holds = 0, fails = 0, unc = 0;
                    for (const auto& s : r.samples) {
                        if (s.verdict == Verdict::HOLDS) ++holds;
                        else if (s.verdict == Verdict::FAILS) ++fails;
                        else ++unc;
                    }
                    std::cout << "samples: " << r.samples.size() << "  holds: " << holds
                              << "  fails: " << fails << "  uncertain: " << unc << "\n";
                    std::cout << "both bounds hold from n = " << r.holds_from
                              << " through the end of the range\n";
                }
                bool any_fail = false, any_unc = false;
                for (const auto& s : r.samples) {
                    any_fail = any_fail || s.verdict == Verdict::FAILS;
                    any_unc = any_unc || s.verdict == Verdict::UNCERTAIN;
                }
                if (any_fail) return 1;
                if (any_unc) return 3;
                return 0;
            };
        });
    }

    // ---- cache ------------------------------------------------------------
    auto* cache = app.add_subcommand("cache", "pp table cache management");
    cache->require_subcommand(1);
    {
        auto* cb = cache->add_subcommand("build", "compute and store a pp table");
        auto cbn = std::make_shared<std::size_t>(1000);
        cb->add_option("--max", *cbn, "largest n");
        cb->callback([&, cbn] {
            action = [&, cbn] {
                const std::string dir = cache_dir_or_default(g);
                if (dir.empty())
                    throw CLI::ValidationError("cache build needs --cache-dir or PLANEPART_CACHE_DIR");
                fs::create_directories(dir);
                PPTable t = pp_exact(*cbn, g.caps());
                const fs::path path = cache_file(dir, *cbn);
                save_table(t, path.string());
                std::cout << "wrote " << path.string() << " (N=" << *cbn << ")\n";
                return 0;
            };
        });

        auto* ci = cache->add_subcommand("info", "print cache file headers");
        ci->callback([&] {
            action = [&] {
                const std::string dir = cache_dir_or_default(g);
                if (dir.empty() || !fs::is_directory(dir)) {
                    std::cout << "no cache directory\n";
                    return 0;
                }
                for (const auto& e : fs::directory_iterator(dir)) {
                    if (e.path().extension() != ".txt") continue;
                    std::ifstream in(e.path());
                    std::string l1, l2, l3;
                    std::getline(in, l1);
                    std::getline(in, l2);
                    std::getline(in, l3);
                    std::cout << e.path().filename().string() << ": " << l1 << " | " << l2 << " | "
                              << l3 << "\n";
                }
                return 0;
            };
        });

        auto* cv = cache->add_subcommand("verify", "fully re-verify a cached table");
        auto cvf = std::make_shared<std::string>();
        cv->add_option("--file", *cvf, "cache file path")->required();
        cv->callback([&, cvf] {
            action = [&, cvf] {
                PPTable t = load_table(*cvf);  // header + hash + spot checks
                Sigma2Table sigma(t.size() ? t.size() : 1);
                if (!verify_recurrence(t, sigma)) {
                    std::cout << "FAIL: recurrence violated\n";
                    return 1;
                }
                std::cout << "OK: N=" << t.size() << ", recurrence verified at every index\n";
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource refusal: " << e.what() << " (raise --memory-cap to override)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
