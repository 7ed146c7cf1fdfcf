#pragma once

// Prime sums over p > P for the Euler-product tails:
//
//   prime_zeta_tail:     sum_{p>P} p^(-z)          (complex z, Re z >= 1.1)
//   prime_log_zeta_tail: sum_{p>P} log(p) p^(-y)   (real y >= 2)
//
// Both come from Moebius inversion against the depleted zeta
//
//   zeta_{>P}(s) = zeta(s) * prod_{p<=P} (1 - p^(-s)),
//   sum_{p>P} p^(-z) = sum_n mu(n)/n * log zeta_{>P}(n z),
//
// whose n-th term decays like P^(-n Re z), so a handful of terms reach
// machine precision.  Principal logs are safe here: |Im log zeta(s)| <=
// log zeta(sigma) <= log zeta(1.1) < pi for sigma >= 1.1.

#include <cmath>
#include <complex>

#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/primes.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

namespace detail {

inline constexpr int mobius[21] = {0, 1,  -1, -1, 0, -1, 1, -1, 0, 0, 1,
                                   -1, 0, -1, 1,  1, 0,  1, -1, 0, 0};

}  // namespace detail

// Over-estimate of sum_{p>P} p^(-q) for q > 1, P >= 17, from partial
// summation against pi(x) <= 1.3 x / log x.
inline double prime_tail_bound(double q, double P) {
    if (q <= 1.0) return HUGE_VAL;
    return 2.6 * q / ((q - 1.0) * std::log(P)) * std::pow(P, 1.0 - q);
}

// Same for sum_{p>P} log(p) p^(-q).
inline double prime_log_tail_bound(double q, double P) {
    if (q <= 1.0) return HUGE_VAL;
    return 1.3 * (2.0 * q - 1.0) / (q - 1.0) * std::pow(P, 1.0 - q);
}

inline cd prime_zeta_tail(cd z, double eps, const PrimeBasis& basis = tail_basis()) {
    if (z.real() < 1.1)
        throw std::domain_error("prime_zeta_tail: requires Re z >= 1.1");
    const double P = static_cast<double>(basis.limit);
    cd total = 0.0;
    for (int n = 1; n <= 20; ++n) {
        if (n > 1 && prime_tail_bound(n * z.real(), P) / n < 0.05 * eps) break;
        if (detail::mobius[n] == 0) continue;
        const cd nz = static_cast<double>(n) * z;
        cd lz = std::log(zeta(nz, 1e-14));
        for (const double lp : basis.logs) lz += std::log(1.0 - std::exp(-nz * lp));
        total += static_cast<double>(detail::mobius[n]) / static_cast<double>(n) * lz;
    }
    return total;
}

inline double prime_log_zeta_tail(double y, double eps, const PrimeBasis& basis = tail_basis()) {
    if (y < 2.0)
        throw std::domain_error("prime_log_zeta_tail: requires y >= 2");
    const double P = static_cast<double>(basis.limit);
    double total = 0.0;
    for (int n = 1; n <= 20; ++n) {
        if (n > 1 && prime_log_tail_bound(n * y, P) < 0.05 * eps) break;
        if (detail::mobius[n] == 0) continue;
        const double ny = n * y;
        double term = (zeta_derivative(cd(ny, 0.0), 1e-12) / zeta(cd(ny, 0.0), 1e-14)).real();
        for (std::size_t i = 0; i < basis.primes.size(); ++i) {
            const double pw = std::exp(-ny * basis.logs[i]);
            term += basis.logs[i] * pw / (1.0 - pw);
        }
        total += -static_cast<double>(detail::mobius[n]) * term;
    }
    return total;
}

}  // namespace riesz
