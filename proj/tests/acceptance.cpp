// Acceptance suite: every top-level claim this library reproduces, one
// pass/fail line each, with pinned tolerances and time budgets.  Run with
// --long to add the full 1e5 ball-backend log-concavity sweep.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "planepart/planepart.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace planepart;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int no, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& fn) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_budget = budget_seconds <= 0 || elapsed <= budget_seconds;
    const bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  C" << (no < 10 ? "0" : "") << no << "  " << name;
    line << "  [" << elapsed << " s";
    if (budget_seconds > 0) line << " / budget " << budget_seconds << " s";
    line << "]";
    if (!detail.empty()) line << "  " << detail;
    if (ok && !in_budget) line << "  (over budget)";
    std::cout << line.str() << "\n" << std::flush;
}

mpq_class parse_decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(rational_from_string(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(s.size() - dot - 1));
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') neg = true;
    mpq_class q = mpq_class(mpz_class(digits), scale);
    q.canonicalize();
    (void)neg;
    return q;
}

// Exact-match the rounded digits; allow one display ulp when the certified
// value sits within 5e-2 of a rounding boundary.
bool rounded_match(const ZeroCell& cell, const std::string& expected, int decimals,
                   long& boundary_hits) {
    if (expected == "--" || !cell.enclosure) return cell.rendered == expected;
    if (cell.rendered == expected) return true;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    mpq_class ours = parse_decimal(cell.rendered) * mpq_class(scale);
    mpq_class theirs = parse_decimal(expected) * mpq_class(scale);
    mpq_class ulp_gap = abs(ours - theirs);
    if (ulp_gap != 1) return false;
    // distance from the value to the nearest rounding boundary (k+1/2)/scale
    mpq_class t = cell.enclosure->midpoint() * mpq_class(scale);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    mpq_class frac = t - mpq_class(fl);
    mpq_class dist = abs(frac - mpq_class(1, 2)) / mpq_class(scale);
    if (dist < mpq_class(1, 20)) {
        ++boundary_hits;
        return true;
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    bool run_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) run_long = true;

    // Shared inputs, built once and reused.
    Sigma2Table sigma500(500);
    PPTable pp500 = pp_exact(500, sigma500);
    PolyFamily fam60 = generate_family(60);

    criterion(1, "pp(0..10) = 1,1,3,6,13,24,48,86,160,282,500", 1.0, [&](std::string&) {
        const long expected[] = {1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
        for (std::size_t n = 0; n <= 10; ++n)
            if (pp500(n) != expected[n]) return false;
        return true;
    });

    criterion(2, "sigma2(1..5) = 1,5,10,21,26", 1.0, [&](std::string&) {
        const std::uint64_t expected[] = {1, 5, 10, 21, 26};
        for (std::size_t n = 1; n <= 5; ++n)
            if (sigma500(n) != expected[n - 1]) return false;
        return true;
    });

    criterion(3, "P_1..P_5 coefficientwise", 1.0, [&](std::string&) {
        auto p = [&](std::initializer_list<long> nums, long den) {
            std::vector<mpz_class> v;
            for (long n : nums) v.emplace_back(n);
            return ExactPoly(std::move(v), mpz_class(den));
        };
        return fam60.at(1) == ExactPoly::x() && fam60.at(2) == p({0, 5, 1}, 2) &&
               fam60.at(3) == p({0, 20, 15, 1}, 6) && fam60.at(4) == p({0, 126, 155, 30, 1}, 24) &&
               fam60.at(5) == p({0, 624, 1630, 575, 50, 1}, 120);
    });

    criterion(4, "Turan defect polynomials for a = 2..5 coefficientwise", 1.0, [&](std::string&) {
        auto p = [&](std::initializer_list<long> nums, long den) {
            std::vector<mpz_class> v;
            for (long n : nums) v.emplace_back(n);
            return ExactPoly(std::move(v), mpz_class(den));
        };
        return turan_poly(fam60, 2) == p({0, 0, 35, 0, 1}, 12) &&
               turan_poly(fam60, 3) == p({0, 0, -290, -303, 145, 15, 1}, 144) &&
               turan_poly(fam60, 4) == p({0, 0, 29460, 27460, 11629, 2740, 670, 40, 1}, 2880) &&
               turan_poly(fam60, 5) ==
                   p({0, 0, -1443744, -3276780, -130300, 483675, 189393, 28230, 2250, 75, 1},
                     86400);
    });

    criterion(5, "largest real zeros of the BO defect, 144 one-decimal cells", 120.0,
              [&](std::string& detail) {
                  auto grid = bo_zero_grid(fam60, 12, 12, 1);
                  long boundary = 0, bad = 0;
                  for (std::size_t a = 0; a < 12; ++a)
                      for (std::size_t b = 0; b < 12; ++b)
                          if (!rounded_match(grid[a][b], reference::kBoZeroGrid[a][b], 1, boundary))
                              ++bad;
                  std::ostringstream d;
                  d << "boundary-tolerance cells: " << boundary << ", mismatches: " << bad;
                  detail = d.str();
                  return bad == 0;
              });

    criterion(6, "largest positive zeros of the Delta grid, 190 two-decimal cells", 300.0,
              [&](std::string& detail) {
                  PolyFamily fam21 = generate_family(21);
                  auto grid = cft_zero_grid(fam21, 20, 2);
                  long boundary = 0, bad = 0, checked = 0;
                  for (std::size_t i = 0; i < reference::kCftZeroGrid.size(); ++i)
                      for (std::size_t j = 0; j < reference::kCftZeroGrid[i].size(); ++j) {
                          ++checked;
                          if (!rounded_match(grid[i][j], reference::kCftZeroGrid[i][j], 2, boundary))
                              ++bad;
                      }
                  std::ostringstream d;
                  d << checked << " cells, boundary-tolerance: " << boundary
                    << ", mismatches: " << bad;
                  detail = d.str();
                  return checked == 190 && bad == 0;
              });

    criterion(7, "clamped defect sums (polynomial at 2, and pp)", 5.0, [&](std::string&) {
        auto sums = minimal_sums_table(fam60, mpq_class(2), 10);
        const long e1[] = {-641, -4, -11, -16, -38, -52, -101, -126, -180, -110};
        for (std::size_t i = 0; i < 10; ++i)
            if (sums[i] != e1[i]) return false;
        auto psums = pp_sums_table(pp500, 9);
        const long e2[] = {-106, -42, -17, -30, -16, -24, -20, -13};
        for (std::size_t i = 0; i < 8; ++i)
            if (psums[i] != e2[i]) return false;
        return true;
    });

    criterion(8, "pp(a)pp(b) > pp(a+b) strictly for 12 <= a+b <= 472; failing set below 12",
              60.0, [&](std::string& detail) {
                  PPTable t = pp_exact(472);
                  IneqReport r = verify_bo_pp(t, 12, 472);
                  std::size_t holds = 0;
                  for (const auto& e : r.entries()) {
                      if (e.verdict == Verdict::EQUALITY) return false;
                      if (e.i + e.j >= 12) {
                          if (e.verdict != Verdict::HOLDS) return false;
                          ++holds;
                      }
                  }
                  std::set<std::pair<long, long>> expected;
                  for (long a = 2; a <= 9; ++a) expected.insert({a, 2});
                  for (long a = 3; a <= 5; ++a) expected.insert({a, 3});
                  auto failing = bo_pp_failing_pairs(r);
                  std::set<std::pair<long, long>> got(failing.begin(), failing.end());
                  std::ostringstream d;
                  d << holds << " pairs hold, " << got.size() << " known failures below 12";
                  detail = d.str();
                  return got == expected;
              });

    {
        // shared by criteria 9, 14, 15; built inside criterion 9's clock so
        // its budget covers the table construction
        static Sigma2Table sigma20k(20001);
        static PPTable pp20k;

        criterion(9, "log-concavity of pp: exact for 12 <= n <= 2e4; odd/even pattern below 12",
                  900.0, [&](std::string& detail) {
                      pp20k = pp_exact(20001, sigma20k);
                      IneqReport r = verify_logconcave_pp(pp20k, 2, 20000);
                      for (const auto& e : r.entries()) {
                          if (e.i >= 12 || e.i % 2 == 0) {
                              if (e.verdict != Verdict::HOLDS) return false;
                          } else {
                              if (e.verdict != Verdict::FAILS) return false;
                          }
                      }
                      detail = "19999 indices checked exactly";
                      return true;
                  });

        criterion(10, "BO polynomial positivity at 2 for 12 <= a+b <= 52; equality at 5 for (1,1)",
                  120.0, [&](std::string&) {
                      PolyFamily fam = generate_family(52);
                      if (!verify_bo_poly(fam, mpq_class(2), 12, 52).all_hold()) return false;
                      return bo_poly(fam, 1, 1).eval(mpq_class(5)) == 0;
                  });

        criterion(11, "final-step bounds positive from 7 / 27 / 237, tails certified", 10.0,
                  [&](std::string& detail) {
                      auto g = final_step_poly(FinalStepKind::GRAD7);
                      auto x2 = final_step_poly(FinalStepKind::X2FINAL);
                      auto ppf = final_step_poly(FinalStepKind::PP_FINAL);
                      std::ostringstream d;
                      d << "crossovers " << g.positive_from << ", " << x2.positive_from << ", "
                        << ppf.positive_from;
                      detail = d.str();
                      return g.positive_from == 7 && g.tail_certified &&
                             sign(g.poly.eval(mpq_class(6))) < 0 && x2.positive_from == 27 &&
                             x2.tail_certified && ppf.positive_from == 237 && ppf.tail_certified;
                  });

        criterion(12, "pp(n+1) < 3 pp(n) for 2 <= n <= 1000 with equality exactly at n = 1", 1.0,
                  [&](std::string&) {
                      PPTable t = pp_exact(1001);
                      IneqReport r = check_step_bound(t, 1000);
                      for (const auto& e : r.entries()) {
                          if (e.i == 1 && e.verdict != Verdict::EQUALITY) return false;
                          if (e.i != 1 && e.verdict != Verdict::HOLDS) return false;
                      }
                      return true;
                  });

        criterion(13, "Turan defect coefficients non-negative for even a <= 200, negative for odd 3, 5",
                  600.0, [&](std::string& detail) {
                      PolyFamily fam = generate_family(201);
                      IneqReport r = even_a_coefficient_scan(fam, 200);
                      long even_ok = 0;
                      bool odd3 = false, odd5 = false;
                      for (const auto& e : r.entries()) {
                          if (e.i % 2 == 0) {
                              if (e.verdict != Verdict::HOLDS) return false;
                              ++even_ok;
                          }
                          if (e.i == 3 && e.verdict == Verdict::FAILS) odd3 = true;
                          if (e.i == 5 && e.verdict == Verdict::FAILS) odd5 = true;
                      }
                      std::ostringstream d;
                      d << even_ok << " even rows non-negative with positive quadratic coefficient";
                      detail = d.str();
                      return even_ok == 100 && odd3 && odd5;
                  });

        criterion(14, "property suites: identities, oracles, decomposition, engine agreement", 0.0,
                  [&](std::string& detail) {
                      // recurrence identity at every index of the large table
                      if (!verify_recurrence(pp20k, sigma20k)) {
                          detail = "recurrence identity";
                          return false;
                      }
                      // specialization P_n(1) = pp(n), n <= 60
                      for (std::size_t n = 0; n <= 60; ++n)
                          if (fam60.at(n).eval_one() != mpq_class(pp500(n))) {
                              detail = "specialization at 1";
                              return false;
                          }
                      // derivative identity through n = 100
                      {
                          Sigma2Table s(100);
                          PolyFamily fam = generate_family(100, s);
                          for (std::size_t n = 1; n <= 100; ++n)
                              if (derivative_by_recurrence(fam, n, s) != fam.at(n).derivative()) {
                                  detail = "derivative identity";
                                  return false;
                              }
                      }
                      // decomposition on 100 random admissible tuples
                      {
                          Sigma2Table s(40);
                          PolyFamily fam = generate_family(40, s);
                          std::mt19937_64 rng(97531);
                          std::uniform_int_distribution<long> pa(2, 20), pA(1, 4), pB(2, 14),
                              px(1, 6), pden(1, 3);
                          int done = 0;
                          while (done < 100) {
                              const long a = pa(rng);
                              std::uniform_int_distribution<long> pb(1, a);
                              const long b = pb(rng);
                              const long A = std::min<long>(pA(rng), b);
                              const long B = pB(rng);
                              if (a + b > 40 || a - std::max(B - b, A) + 1 < 2) continue;
                              mpq_class x(px(rng), pden(rng));
                              x.canonicalize();
                              auto dec = decomposition_eval(fam, a, b, A, B, x, s);
                              if (dec.x * dec.parts_sum() != dec.bo_value) {
                                  detail = "decomposition sum";
                                  return false;
                              }
                              ++done;
                          }
                      }
                      // series-expansion oracles
                      {
                          auto series = oracles::euler_product_pp(200);
                          PPTable t = pp_exact(200);
                          for (std::size_t n = 0; n <= 200; ++n)
                              if (t(n) != series[n]) {
                                  detail = "pp series oracle";
                                  return false;
                              }
                          auto co = oracles::exp_sigma_bivariate(30);
                          for (std::size_t n = 0; n <= 30; ++n)
                              for (std::size_t m = 0; m <= n; ++m)
                                  if (fam60.at(n).coefficient(m) != co[n][m]) {
                                      detail = "family series oracle";
                                      return false;
                                  }
                      }
                      // Sturm vs Aberth real-root agreement on every grid polynomial
                      {
                          PolyFamily fam21 = generate_family(24);
                          long checked = 0;
                          auto agree = [&](const ExactPoly& p) {
                              RootSummary st = sturm_real_roots(p);
                              long sturm_real = 0;
                              for (std::size_t i = 0; i < st.real_roots.size(); ++i)
                                  sturm_real += st.real_multiplicities[i];
                              RootSummary ab = aberth_complex_roots(p, 128);
                              if (ab.uncertain) return false;
                              if (static_cast<long>(ab.complex_roots.size()) != p.degree())
                                  return false;
                              long aberth_real = 0;
                              for (const auto& r : ab.complex_roots)
                                  if (r.classified_real) ++aberth_real;
                              ++checked;
                              return aberth_real == sturm_real;
                          };
                          for (std::size_t a = 1; a <= 12; ++a)
                              for (std::size_t b = 1; b <= a; ++b)
                                  if (!agree(bo_poly(fam21, a, b))) {
                                      detail = "engine agreement (BO grid)";
                                      return false;
                                  }
                          for (std::size_t a = 2; a <= 20; ++a)
                              for (std::size_t b = 0; b + 1 < a; ++b)
                                  if (!agree(cft_poly(fam21, a, b))) {
                                      detail = "engine agreement (Delta grid)";
                                      return false;
                                  }
                          std::ostringstream d;
                          d << "all identities hold; engines agree on " << checked
                            << " polynomials";
                          detail = d.str();
                      }
                      return true;
                  });

        criterion(15, "growth-law ratio tightens 1e2 -> 1e4; two-sided bound on [1e3, 1e5]", 60.0,
                  [&](std::string& detail) {
                      WrightConstants c = wright_constants(64);
                      const mpfr_prec_t prec = c.C1.prec();
                      Ball r2 = Ball::from_mpz(pp20k(100), prec) / wright_value(100, c);
                      Ball r4 = Ball::from_mpz(pp20k(10000), prec) / wright_value(10000, c);
                      Ball one = Ball::from_ui(1, prec);
                      BigFloat g2 = (r2 - one).abs_upper();
                      BigFloat g4 = (r4 - one).abs_upper();
                      if (mpfr_cmp(g4.get(), g2.get()) >= 0) {
                          detail = "gap did not shrink";
                          return false;
                      }
                      CorollaryReport rep = expansion_check_corollary(c.C1, 1000, 100000, 192);
                      for (const auto& s : rep.samples)
                          if (s.verdict != Verdict::HOLDS) {
                              detail = "two-sided bound failed at n = " + std::to_string(s.n);
                              return false;
                          }
                      std::ostringstream d;
                      d << "gap " << g2.to_string(6) << " -> " << g4.to_string(6) << "; "
                        << rep.samples.size() << " samples hold";
                      detail = d.str();
                      return true;
                  });
    }

    if (run_long) {
        criterion(16, "[long] ball-backend log-concavity to 1e5 at 192 bits, no UNCERTAIN", 0.0,
                  [&](std::string& detail) {
                      BallPPTable t = pp_ball(100001, 192);
                      if (t.degraded()) {
                          detail = "table degraded";
                          return false;
                      }
                      IneqReport r = verify_logconcave_pp(t, 12, 100000);
                      const std::size_t unc = r.count(Verdict::UNCERTAIN);
                      std::ostringstream d;
                      d << r.entries().size() << " indices, " << unc << " uncertain";
                      detail = d.str();
                      return unc == 0 && r.all_hold();
                  });
    }

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
    return g_failures == 0 ? 0 : 1;
}
