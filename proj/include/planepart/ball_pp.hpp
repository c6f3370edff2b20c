#pragma once

// Certified interval twin of the exact pp table: the same recurrence run in
// ball arithmetic.  Every stored ball contains the true pp(n); the table is
// flagged degraded as soon as a relative radius exceeds 2^(-prec/2).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepart/ball.hpp"
#include "planepart/divisor_sums.hpp"
#include "planepart/plane_partitions.hpp"

namespace planepart {

class BallPPTable {
public:
    std::size_t size() const { return values_.empty() ? 0 : values_.size() - 1; }
    mpfr_prec_t precision_bits() const { return prec_; }
    bool degraded() const { return degraded_; }

    const Ball& operator()(std::size_t n) const {
        if (n >= values_.size()) throw std::out_of_range("ball pp index");
        return values_[n];
    }

    friend BallPPTable pp_ball(std::size_t, mpfr_prec_t, const Sigma2Table&);

private:
    std::vector<Ball> values_;
    mpfr_prec_t prec_ = 0;
    bool degraded_ = false;
};

inline BallPPTable pp_ball(std::size_t n_max, mpfr_prec_t precision_bits,
                           const Sigma2Table& sigma) {
    if (precision_bits < 64) throw std::invalid_argument("ball pp needs >= 64 bits");
    if (sigma.size() < n_max) throw std::invalid_argument("sigma2 table smaller than N");

    BallPPTable t;
    t.prec_ = precision_bits;
    t.values_.reserve(n_max + 1);
    t.values_.push_back(Ball::from_ui(1, precision_bits));

    BigFloat tmid(precision_bits), trad(kRadiusPrec);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Ball acc(precision_bits);
        for (std::size_t k = 1; k <= n; ++k)
            acc.addmul_ui_inplace(t.values_[n - k], sigma(k), tmid, trad);
        acc.div_ui_inplace(static_cast<unsigned long>(n));
        if (!acc.relative_radius_below(precision_bits / 2)) t.degraded_ = true;
        t.values_.push_back(std::move(acc));
    }
    return t;
}

inline BallPPTable pp_ball(std::size_t n_max, mpfr_prec_t precision_bits = 192) {
    Sigma2Table sigma(n_max ? n_max : 1);
    return pp_ball(n_max, precision_bits, sigma);
}

// Every ball contains the matching exact value on the shared window.
inline bool balls_contain_exact(const BallPPTable& balls, const PPTable& exact,
                                std::size_t n_limit) {
    const std::size_t top = std::min({n_limit, balls.size(), exact.size()});
    for (std::size_t n = 0; n <= top; ++n)
        if (!balls(n).contains(exact(n))) return false;
    return true;
}

}  // namespace planepart
