#pragma once

// Riesz means of the singular series and their error term:
//
//   S_m(x) = sum_{k<=x} (x-k)^m S(k)
//          = x^(m+1)/(m+1) - (1/2) x^m (log x - H_m + gamma + log 2pi) + E_m(x).
//
// S_m is computed through the binomial expansion
//   S_m(x) = sum_j C(m,j) (-1)^j x^(m-j) A_j,  A_j = sum_{k<=x} k^j S(k),
// with compensated power sums and the j-terms recombined in descending
// magnitude.  E_m is x^(7/4) smaller than S_m's lead term, which is why the
// supported range is capped: binary64 loses E_m entirely by x ~ 1e8 at
// m = 2.  Caps: x <= 1e7 for m <= 2, x <= 1e5 for m = 3, 4.
//
// mellin_inversion_check evaluates the inverse Mellin transform
//   S_m(x) = (1/2pi) int_{-T}^{T} m! F(2+it) x^(2+it+m) / prod_j (2+it+j) dt
// by adaptive quadrature on the closed form of F, a cross-check of the
// whole continuation machinery against the exact sum.

#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "riesz_explicit/constants.hpp"
#include "riesz_explicit/dirichlet_f.hpp"
#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/kahan.hpp"
#include "riesz_explicit/singular_series.hpp"

namespace riesz {

struct RieszEvaluation {
    int m = 0;
    double x = 0.0;
    double s_m = 0.0;
    double main = 0.0;
    double e_m = 0.0;
    double scaled = 0.0;  // e_m / x^(m - 3/4)
    bool cancellation_warning = false;
};

inline double riesz_supported_x_cap(int m) {
    if (m < 1 || m > 4) throw std::domain_error("riesz means: m must be in [1,4]");
    return m <= 2 ? 1e7 : 1e5;
}

inline double main_term(int m, double x) {
    if (m < 1) throw std::domain_error("main_term: m >= 1 required");
    if (!(x > 0.0)) throw std::domain_error("main_term: x > 0 required");
    const double xm = std::pow(x, m);
    return xm * x / (m + 1) -
           0.5 * xm * (std::log(x) - harmonic_number(m) + euler_gamma + log_two_pi);
}

// Running compensated sums A_j = sum_{k<=cutoff} k^j S(k)/(2 C2), j = 0..m.
struct PowerSumAccumulator {
    int m;
    std::uint64_t pos = 0;
    std::array<KahanSum, 5> sums{};

    explicit PowerSumAccumulator(int m_) : m(m_) { riesz_supported_x_cap(m_); }

    void advance(const SingularSeriesTable& t, std::uint64_t upto) {
        if (upto > t.limit) throw std::range_error("PowerSumAccumulator: cutoff beyond table");
        for (std::uint64_t k = pos + 1; k <= upto; ++k) {
            const double q = t.normalized[k];
            if (q == 0.0) continue;
            double kp = q;
            sums[0].add(kp);
            for (int j = 1; j <= m; ++j) {
                kp *= static_cast<double>(k);
                sums[j].add(kp);
            }
        }
        if (upto > pos) pos = upto;
    }

    double power_sum(int j) const { return sums[j].value(); }
};

namespace detail {

inline void riesz_check_range(int m, double x, const SingularSeriesTable& t) {
    const double cap = riesz_supported_x_cap(m);
    if (x > cap) {
        char msg[120];
        std::snprintf(msg, sizeof msg, "riesz mean: x = %.6g beyond the supported cap %.1g for m = %d",
                      x, cap, m);
        throw std::range_error(msg);
    }
    if (x > static_cast<double>(t.limit))
        throw std::range_error("riesz mean: x exceeds the sieve table limit");
    if (!(x > 0.0)) throw std::domain_error("riesz mean: x > 0 required");
}

inline double riesz_combine(int m, double x, const PowerSumAccumulator& acc, double c2) {
    double terms[5];
    for (int j = 0; j <= m; ++j)
        terms[j] = binomial(m, j) * (j % 2 ? -1.0 : 1.0) * std::pow(x, m - j) * acc.power_sum(j);
    return 2.0 * c2 * sum_descending(terms, static_cast<std::size_t>(m) + 1);
}

}  // namespace detail

inline double riesz_mean_exact(int m, double x, const SingularSeriesTable& t) {
    detail::riesz_check_range(m, x, t);
    PowerSumAccumulator acc(m);
    acc.advance(t, static_cast<std::uint64_t>(std::floor(x)));
    return detail::riesz_combine(m, x, acc, t.c2);
}

namespace detail {

inline RieszEvaluation make_evaluation(int m, double x, double s_m) {
    RieszEvaluation ev;
    ev.m = m;
    ev.x = x;
    ev.s_m = s_m;
    ev.main = main_term(m, x);
    ev.e_m = ev.s_m - ev.main;
    ev.scaled = ev.e_m / std::pow(x, m - 0.75);
    ev.cancellation_warning = std::fabs(ev.e_m) < 10.0 * DBL_EPSILON * std::fabs(ev.main);
    return ev;
}

}  // namespace detail

inline RieszEvaluation error_term(int m, double x, const SingularSeriesTable& t) {
    return detail::make_evaluation(m, x, riesz_mean_exact(m, x, t));
}

// One forward pass over the table; identical summation order per x as the
// single-point calls, so results match bit for bit.
inline std::vector<RieszEvaluation> error_term_grid(int m, const std::vector<double>& xs,
                                                    const SingularSeriesTable& t) {
    std::vector<RieszEvaluation> out;
    out.reserve(xs.size());
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] < xs[i - 1])
            throw std::invalid_argument("error_term_grid: xs must be ascending");
    if (!xs.empty()) detail::riesz_check_range(m, xs.back(), t);
    PowerSumAccumulator acc(m);
    for (const double x : xs) {
        detail::riesz_check_range(m, x, t);
        acc.advance(t, static_cast<std::uint64_t>(std::floor(x)));
        out.push_back(detail::make_evaluation(m, x, detail::riesz_combine(m, x, acc, t.c2)));
    }
    return out;
}

namespace detail {

template <typename F>
cd adaptive_simpson(F&& f, double a, double b, const cd fa, const cd fm, const cd fb, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const cd fl = f(0.5 * (a + m));
    const cd fr = f(0.5 * (m + b));
    const cd s1 = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const cd s2 = (b - a) / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
    if (depth <= 0 || std::abs(s2 - s1) < 15.0 * tol) return s2 + (s2 - s1) / 15.0;
    return adaptive_simpson(f, a, m, fa, fl, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, fr, fb, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline double mellin_inversion_check(int m, double x, double T) {
    if (m < 2 || m > 4)
        throw std::domain_error("mellin_inversion_check: m >= 2 required (integrand decay)");
    if (!(x >= 2.0)) throw std::domain_error("mellin_inversion_check: x >= 2 required");
    if (!(T >= 100.0)) throw std::domain_error("mellin_inversion_check: T >= 100 required");

    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    const double logx = std::log(x);
    auto integrand = [&](double t) -> cd {
        const cd s(2.0, t);
        cd denom = s;
        for (int j = 1; j <= m; ++j) denom *= s + static_cast<double>(j);
        return mfact * F_closed(s) * std::exp((s + static_cast<double>(m)) * logx) / denom;
    };

    // panel widths grow with |t|; the integrand scale falls like |t|^-(m+1)
    const double scale = std::pow(x, m + 1) / (m + 1);
    const double tol_total = 1e-9 * scale;
    std::vector<double> edges{0.0};
    while (edges.back() < T) {
        const double t = edges.back();
        edges.push_back(std::min(T, t + std::min(0.05 * (1.0 + t / 4.0), 8.0)));
    }
    cd total = 0.0;
    for (int side = -1; side <= 1; side += 2) {
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double a = side < 0 ? -edges[i + 1] : edges[i];
            const double b = side < 0 ? -edges[i] : edges[i + 1];
            const cd fa = integrand(a), fb = integrand(b), fm = integrand(0.5 * (a + b));
            total += detail::adaptive_simpson(integrand, a, b, fa, fm, fb,
                                              tol_total / (2.0 * edges.size()), 18);
        }
    }
    total /= 2.0 * pi_value;
    if (std::abs(total.imag()) > 1e-6 * std::abs(total.real()))
        throw verification_error("mellin_inversion_check: imaginary part failed to cancel");
    return total.real();
}

}  // namespace riesz
