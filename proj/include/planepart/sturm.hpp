#pragma once

// Certified real-root isolation via Sturm sequences.
//
// The chain is built over primitive integer polynomials (each element equals
// the canonical Sturm element times a positive rational, which leaves sign
// variations untouched).  Counting convention: V(a) - V(b) is the number of
// distinct real roots in the half-open interval (a, b], valid also when an
// endpoint is itself a root.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "planepart/ball.hpp"
#include "planepart/exact_poly.hpp"
#include "planepart/int_poly.hpp"
#include "planepart/integers.hpp"

namespace planepart {

struct RationalInterval {
    mpq_class lo, hi;  // lo <= hi; a width-0 interval pins the root exactly

    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
    std::string to_string() const {
        return "[" + planepart::to_string(lo) + ", " + planepart::to_string(hi) + "]";
    }
};

class SturmChain {
public:
    // p must be square-free (gcd(p, p') constant).
    explicit SturmChain(IntPoly p) {
        seq_.push_back(p.primitive_part());
        if (seq_.back().degree() >= 1) {
            seq_.push_back(seq_.back().derivative().primitive_part());
            while (seq_.back().degree() >= 1) {
                IntPoly r = prem_signed(seq_[seq_.size() - 2], seq_.back());
                if (r.is_zero()) break;
                seq_.push_back(r.negated().primitive_part());
            }
        }
    }

    const IntPoly& polynomial() const { return seq_.front(); }
    const std::vector<IntPoly>& sequence() const { return seq_; }

    int variations_at(const mpq_class& x) const {
        const mpz_class num(x.get_num()), den(x.get_den());
        int var = 0, last = 0;
        for (const auto& s : seq_) {
            const int sg = sign(s.scaled_value(num, den));
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++var;
            last = sg;
        }
        return var;
    }
    int variations_at_pos_inf() const {
        int var = 0, last = 0;
        for (const auto& s : seq_) step(var, last, s.sign_at_pos_inf());
        return var;
    }
    int variations_at_neg_inf() const {
        int var = 0, last = 0;
        for (const auto& s : seq_) step(var, last, s.sign_at_neg_inf());
        return var;
    }

    // distinct real roots in (lo, hi]
    long count(const mpq_class& lo, const mpq_class& hi) const {
        if (lo >= hi) return 0;
        return variations_at(lo) - variations_at(hi);
    }
    long count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
    long count_above(const mpq_class& lo) const {
        return variations_at(lo) - variations_at_pos_inf();
    }

private:
    static void step(int& var, int& last, int sg) {
        if (sg == 0) return;
        if (last != 0 && sg != last) ++var;
        last = sg;
    }

    std::vector<IntPoly> seq_;
};

// Disjoint isolating intervals (lo, hi] for all roots of the square-free
// chain polynomial inside (lo, hi], ascending.
inline void isolate_in(const SturmChain& chain, const mpq_class& lo, const mpq_class& hi,
                       long nroots, std::vector<RationalInterval>& out) {
    if (nroots <= 0) return;
    if (nroots == 1) {
        out.push_back({lo, hi});
        return;
    }
    const mpq_class mid = (lo + hi) / 2;
    const long left = chain.count(lo, mid);
    isolate_in(chain, lo, mid, left, out);
    isolate_in(chain, mid, hi, nroots - left, out);
}

inline std::vector<RationalInterval> isolate_real_roots(const SturmChain& chain,
                                                        const mpq_class& lo,
                                                        const mpq_class& hi) {
    std::vector<RationalInterval> out;
    isolate_in(chain, lo, hi, chain.count(lo, hi), out);
    return out;
}

// Shrink an isolating interval (lo, hi] with exactly one simple root to
// width <= tol by sign bisection; an exact hit returns a point interval.
inline RationalInterval refine_root(const SturmChain& chain, RationalInterval iv,
                                    const mpq_class& tol) {
    const IntPoly& q = chain.polynomial();
    int s_hi = q.sign_at(iv.hi);
    if (s_hi == 0) return {iv.hi, iv.hi};  // rational root, pinned exactly

    // Make the left endpoint sign-definite (it may be a root: excluded from
    // (lo, hi], but useless for sign bisection).
    while (q.sign_at(iv.lo) == 0) {
        const mpq_class mid = (iv.lo + iv.hi) / 2;
        if (chain.count(mid, iv.hi) == 1) {
            iv.lo = mid;
        } else {
            const int sm = q.sign_at(mid);
            if (sm == 0) return {mid, mid};
            iv.hi = mid;
            s_hi = sm;
        }
    }

    int s_lo = q.sign_at(iv.lo);
    while (iv.width() > tol) {
        const mpq_class mid = (iv.lo + iv.hi) / 2;
        const int sm = q.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == s_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

struct ComplexRootEstimate {
    BigFloat re, im;
    BigFloat residual;        // inclusion-disk radius around (re, im)
    bool classified_real = false;
};

struct RootSummary {
    long degree = 0;
    std::vector<RationalInterval> real_roots;  // ascending, one distinct root each
    std::vector<int> real_multiplicities;      // parallel to real_roots
    std::optional<RationalInterval> largest_real;
    std::vector<ComplexRootEstimate> complex_roots;  // repeated by multiplicity
    bool uncertain = false;
};

namespace detail {

// Isolate the distinct real roots of one square-free factor on (lo, hi]
// (whole line when unbounded), refined to width <= tol.
inline std::vector<RationalInterval> isolate_factor(const IntPoly& q_in,
                                                    const std::optional<RationalInterval>& window,
                                                    const mpq_class& tol) {
    IntPoly q = q_in.primitive_part();
    std::vector<RationalInterval> out;
    if (q.degree() < 1) return out;
    SturmChain chain(q);
    mpz_class b = q.root_bound_pow2();
    mpq_class lo = window ? window->lo : mpq_class(-b);
    mpq_class hi = window ? window->hi : mpq_class(b);
    if (window) {
        // clamp to the root bound so bisection depth stays sane
        if (lo < mpq_class(-b)) lo = mpq_class(-b);
        if (hi > mpq_class(b)) hi = mpq_class(b);
    }
    if (lo >= hi) return out;
    auto raw = isolate_real_roots(chain, lo, hi);
    out.reserve(raw.size());
    for (auto& iv : raw) out.push_back(refine_root(chain, iv, tol));
    return out;
}

}  // namespace detail

// Distinct real roots of p (optionally restricted to (window.lo, window.hi]),
// with multiplicities from the square-free decomposition.
inline RootSummary sturm_real_roots(const ExactPoly& p,
                                    std::optional<RationalInterval> window = std::nullopt,
                                    const mpq_class& tol = mpq_class(1, 1 << 20)) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    RootSummary out;
    out.degree = p.degree();
    IntPoly ip = IntPoly::from_exact(p);
    auto factors = squarefree_decomposition(ip);

    std::vector<std::pair<RationalInterval, int>> roots;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        for (auto& iv : detail::isolate_factor(factors[i], window, tol))
            roots.emplace_back(iv, static_cast<int>(i + 1));
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    for (auto& [iv, mult] : roots) {
        out.real_roots.push_back(iv);
        out.real_multiplicities.push_back(mult);
    }
    if (!out.real_roots.empty()) out.largest_real = out.real_roots.back();
    return out;
}

// Width <= abs_tol enclosure of the largest real root (restricted to the
// window when given); nullopt when there is none.
inline std::optional<RationalInterval> largest_real_root(
    const ExactPoly& p, const mpq_class& abs_tol,
    std::optional<RationalInterval> window = std::nullopt) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    IntPoly q = squarefree_part(IntPoly::from_exact(p));
    if (q.degree() < 1) return std::nullopt;
    SturmChain chain(q);
    mpz_class b = q.root_bound_pow2();
    mpq_class lo = window ? std::max(window->lo, mpq_class(-b)) : mpq_class(-b);
    mpq_class hi = window ? std::min(window->hi, mpq_class(b)) : mpq_class(b);
    if (lo >= hi || chain.count(lo, hi) == 0) return std::nullopt;

    // Walk down from the top until exactly one root remains in (lo, hi].
    while (chain.count(lo, hi) > 1) {
        const mpq_class mid = (lo + hi) / 2;
        if (chain.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return refine_root(chain, {lo, hi}, abs_tol);
}

// All roots real, counted with multiplicity (decided exactly).
inline bool is_hyperbolic(const ExactPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("hyperbolicity needs degree >= 1");
    IntPoly ip = IntPoly::from_exact(p);
    auto factors = squarefree_decomposition(ip);
    long weighted = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        SturmChain chain(factors[i]);
        weighted += static_cast<long>(i + 1) * chain.count_all();
    }
    return weighted == p.degree();
}

}  // namespace planepart
