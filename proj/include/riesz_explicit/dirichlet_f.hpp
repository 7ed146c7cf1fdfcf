#pragma once

// The singular-series generating function
//
//   F(s) = sum_{k>=1} S(k) k^(-s)            (sigma > 1)
//        = (4 C2/(2^(s+1)+1)) zeta(s) zeta(s+1) / zeta(2s+2) * G(s)
//
// the closed form being the analytic continuation to sigma > -1.  Its
// singularities there are s = 1 (simple), s = 0 (double), and s = rho/2 - 1
// at the nontrivial zeros of zeta(2s+2).

#include <cmath>
#include <complex>
#include <cstdint>

#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/euler_product_g.hpp"
#include "riesz_explicit/kahan.hpp"
#include "riesz_explicit/singular_series.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

inline cd F_closed(cd s) {
    if (!(s.real() > -1.0)) throw std::domain_error("F_closed: defined for Re s > -1");
    if (std::abs(s - cd(1.0)) < 1e-8) throw pole_error("F_closed: pole at s = 1");
    if (std::abs(s) < 1e-8) throw pole_error("F_closed: pole at s = 0");
    const cd z_s = zeta(s);
    const cd z_s1 = zeta(s + 1.0);
    const cd z_2s2 = zeta(2.0 * s + 2.0);
    if (std::abs(z_2s2) < 1e-8)
        throw pole_error("F_closed: zeta(2s+2) vanishes, s is within 1e-8 of rho/2 - 1");
    const cd g = s.real() >= -0.8 ? g_accelerated(s) : g_product(s, 2'000'000).value;
    const cd two_pow = std::exp((s + 1.0) * std::log(2.0));
    return 4.0 * best_c2() / (two_pow + 1.0) * z_s * z_s1 / z_2s2 * g;
}

inline cd F_series(cd s, std::uint64_t K, const SingularSeriesTable& table) {
    if (!(s.real() > 1.0)) throw std::domain_error("F_series: series diverges for Re s <= 1");
    if (K < 2) throw std::domain_error("F_series: K >= 2 required");
    if (K > table.limit) throw std::range_error("F_series: K exceeds table limit");
    KahanSum re_sum, im_sum;
    for (std::uint64_t k = 2; k <= K; k += 2) {
        const double q = table.normalized[k];
        if (q == 0.0) continue;
        const cd term = q * std::exp(-s * std::log(static_cast<double>(k)));
        re_sum.add(term.real());
        im_sum.add(term.imag());
    }
    return 2.0 * table.c2 * cd(re_sum.value(), im_sum.value());
}

}  // namespace riesz
