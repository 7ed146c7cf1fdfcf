#pragma once

// The zero-sum side of the error-term formula.  To each nontrivial zero
// rho = 1/2 + i gamma (assumed simple) belongs the residue coefficient
//
//              2 C2 m! zeta(rho/2-1) zeta(rho/2) G(rho/2-1)
//   a(rho,m) = --------------------------------------------------------
//              (2^(rho/2)+1) zeta'(rho) (rho/2-1)(rho/2)...(rho/2+m-1)
//
// and the truncated prediction for the error term is
//
//   E_m(x) ~ x^(m-3/4) * 2 Re sum_{n<=count} a(rho_n, m) x^(i gamma_n / 2).
//
// The Fejer-smoothed average
//
//   S_T*(x0) = 2 Re sum_{gamma_n/2 <= T} (1 - gamma_n/(2T)) a(rho_n) x0^(i gamma_n/2)
//
// bounds liminf/limsup of E_m(x)/x^(m-3/4) for every x0, which is what the
// oscillation scan reports.

#include <cmath>
#include <complex>
#include <cstdio>
#include <utility>
#include <vector>

#include "riesz_explicit/constants.hpp"
#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/euler_product_g.hpp"
#include "riesz_explicit/kahan.hpp"
#include "riesz_explicit/singular_series.hpp"
#include "riesz_explicit/zeros.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

struct ExplicitCoefficient {
    ZetaZero zero;
    int m = 0;
    cd value;
    double modulus = 0.0;
};

struct PredictionRecord {
    int m = 0;
    double x = 0.0;
    int zero_count = 0;
    double prediction = 0.0;
    double scaled_prediction = 0.0;
    double tail_estimate = 0.0;
};

struct OscillationScanResult {
    int m = 0;
    double T = 0.0;
    double best_high_x0 = 0.0;
    double best_high = 0.0;
    double best_low_x0 = 0.0;
    double best_low = 0.0;
    int zero_count_used = 0;
};

namespace detail {

struct ZeroFactors {
    cd half;            // rho/2
    cd numerator_base;  // 2 c2 zeta(rho/2-1) zeta(rho/2) G(rho/2-1)
    cd denom_base;      // (2^(rho/2)+1) zeta'(rho)
};

inline ZeroFactors zero_factors(const ZetaZero& zero, double c2) {
    if (std::abs(zero.zeta_prime) < 1e-6)
        throw verification_error(
            "coefficient_a: |zeta'(rho)| below 1e-6; the simple-zero formula is invalid here");
    ZeroFactors f;
    f.half = cd(0.25, 0.5 * zero.gamma);
    const cd shifted = f.half - 1.0;  // -3/4 + i gamma/2
    f.numerator_base = 2.0 * c2 * zeta(shifted) * zeta(f.half) * g_accelerated(shifted);
    f.denom_base = (std::exp(f.half * std::log(2.0)) + 1.0) * zero.zeta_prime;
    return f;
}

inline cd coefficient_value(const ZeroFactors& f, int m) {
    double mfact = 1.0;
    for (int i = 2; i <= m; ++i) mfact *= i;
    cd denom = f.denom_base * (f.half - 1.0);
    for (int i = 0; i < m; ++i) denom *= f.half + static_cast<double>(i);
    return mfact * f.numerator_base / denom;
}

}  // namespace detail

inline ExplicitCoefficient coefficient_a(const ZetaZero& zero, int m, double c2) {
    if (m < 1) throw std::domain_error("coefficient_a: m >= 1 required");
    ExplicitCoefficient out;
    out.zero = zero;
    out.m = m;
    out.value = detail::coefficient_value(detail::zero_factors(zero, c2), m);
    out.modulus = std::abs(out.value);
    return out;
}

inline ExplicitCoefficient coefficient_a(const ZetaZero& zero, int m) {
    return coefficient_a(zero, m, best_c2());
}

// Coefficients for every zero of the table at one m.  The zeta and G
// factors are shared per zero; each m still goes through the full
// denominator product rather than the m-recurrence, which stays available
// as an independent test of the formula's structure.
inline std::vector<std::vector<ExplicitCoefficient>> coefficient_tables(const ZeroTable& table,
                                                                        int m_max,
                                                                        double c2 = best_c2()) {
    if (m_max < 1) throw std::domain_error("coefficient_tables: m_max >= 1 required");
    std::vector<std::vector<ExplicitCoefficient>> out(static_cast<std::size_t>(m_max));
    for (auto& v : out) v.reserve(table.count());
    for (const auto& z : table.zeros) {
        const auto f = detail::zero_factors(z, c2);
        for (int m = 1; m <= m_max; ++m) {
            ExplicitCoefficient ec;
            ec.zero = z;
            ec.m = m;
            ec.value = detail::coefficient_value(f, m);
            ec.modulus = std::abs(ec.value);
            out[static_cast<std::size_t>(m - 1)].push_back(ec);
        }
    }
    return out;
}

inline std::vector<ExplicitCoefficient> coefficient_table(const ZeroTable& table, int m,
                                                          double c2 = best_c2()) {
    auto all = coefficient_tables(table, m, c2);
    return std::move(all.back());
}

namespace detail {

// Extrapolated modulus sum beyond the table: |a| ~ C gamma^-(m-1/2) fitted
// on the last 20 table zeros, integrated against the zero density
// log(t/2pi)/(2pi).  Divergent for m = 1.
inline double tail_beyond_table(const std::vector<ExplicitCoefficient>& coeffs, int m) {
    if (m < 2) return HUGE_VAL;
    const double q = m - 0.5;
    const std::size_t fit = std::min<std::size_t>(20, coeffs.size());
    double csum = 0.0;
    for (std::size_t i = coeffs.size() - fit; i < coeffs.size(); ++i)
        csum += coeffs[i].modulus * std::pow(coeffs[i].zero.gamma, q);
    const double c_fit = csum / static_cast<double>(fit);
    const double g_last = coeffs.back().zero.gamma;
    const double integral = std::pow(g_last, 1.0 - q) / (q - 1.0) *
                            (std::log(g_last / (2.0 * pi_value)) + 1.0 / (q - 1.0)) /
                            (2.0 * pi_value);
    return 2.0 * c_fit * integral;
}

}  // namespace detail

inline PredictionRecord zero_sum_prediction(int m, double x,
                                            const std::vector<ExplicitCoefficient>& coeffs,
                                            int count) {
    if (count <= 0) throw std::domain_error("zero_sum_prediction: zero count must be positive");
    if (static_cast<std::size_t>(count) > coeffs.size())
        throw std::range_error("zero_sum_prediction: count exceeds the coefficient table");
    if (!(x >= 2.0)) throw std::domain_error("zero_sum_prediction: x >= 2 required");

    const double lx = std::log(x);
    KahanSum acc;
    for (int n = 0; n < count; ++n) {
        const double phase = 0.5 * coeffs[n].zero.gamma * lx;
        acc.add(2.0 * (coeffs[n].value * cd(std::cos(phase), std::sin(phase))).real());
    }
    KahanSum tail_in;
    for (std::size_t n = count; n < coeffs.size(); ++n) tail_in.add(2.0 * coeffs[n].modulus);

    PredictionRecord rec;
    rec.m = m;
    rec.x = x;
    rec.zero_count = count;
    rec.scaled_prediction = acc.value();
    const double xpow = std::pow(x, m - 0.75);
    rec.prediction = xpow * rec.scaled_prediction;
    rec.tail_estimate = xpow * (tail_in.value() + detail::tail_beyond_table(coeffs, m));
    return rec;
}

// prefix sums 2 sum_{n<=N} |a(rho_n)| for every prefix N
inline std::vector<double> c_m_partial_sums(const std::vector<ExplicitCoefficient>& coeffs) {
    std::vector<double> out;
    out.reserve(coeffs.size());
    KahanSum acc;
    for (const auto& c : coeffs) {
        acc.add(2.0 * c.modulus);
        out.push_back(acc.value());
    }
    return out;
}

// least-squares slope of log |a| against log gamma
inline double fitted_decay_exponent(const std::vector<ExplicitCoefficient>& coeffs) {
    if (coeffs.size() < 2) throw std::domain_error("fitted_decay_exponent: need >= 2 coefficients");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(coeffs.size());
    for (const auto& c : coeffs) {
        const double lx = std::log(c.zero.gamma), ly = std::log(c.modulus);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// partial sums T1(b) = sum 1/(gamma^b |zeta'|), T2(b) = sum 1/(gamma^b |zeta'|^2),
// over the gamma > 0 side of the table
inline std::pair<double, double> T_sums(double b, const ZeroTable& table) {
    if (!(b > 1.0)) throw std::domain_error("T_sums: requires b > 1");
    KahanSum t1, t2;
    for (const auto& z : table.zeros) {
        const double gb = std::pow(z.gamma, b);
        const double zp = std::abs(z.zeta_prime);
        t1.add(1.0 / (gb * zp));
        t2.add(1.0 / (gb * zp * zp));
    }
    return {t1.value(), t2.value()};
}

// S_T*(x0) with r_0 = 0 and r_n = a(rho_n): Fejer weights on gamma_n/2 <= T
inline double ingham_average(double x0, double T, const std::vector<ExplicitCoefficient>& coeffs) {
    if (!(x0 > 0.0)) throw std::domain_error("ingham_average: x0 > 0 required");
    if (!(T > 0.0)) throw std::domain_error("ingham_average: T > 0 required");
    const double lx = std::log(x0);
    KahanSum acc;
    for (const auto& c : coeffs) {
        const double gh = 0.5 * c.zero.gamma;
        if (gh > T) break;  // table ascending
        const double phase = gh * lx;
        acc.add(2.0 * (1.0 - gh / T) * (c.value * cd(std::cos(phase), std::sin(phase))).real());
    }
    return acc.value();
}

inline std::vector<double> log_spaced_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi >= lo) || n == 0)
        throw std::domain_error("log_spaced_grid: need 0 < lo <= hi and n >= 1");
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1)));
    return out;
}

// one fundamental period of the lowest-zero phase, exp(4 pi / gamma_1)
inline double default_scan_period(double gamma1) { return std::exp(4.0 * pi_value / gamma1); }

// Every scanned value is a certified bound: liminf <= best_low and
// best_high <= limsup of E_m(x)/x^(m-3/4).  Ties break to the smallest x0.
inline OscillationScanResult oscillation_scan(int m, double T, const std::vector<double>& x0_grid,
                                              const std::vector<ExplicitCoefficient>& coeffs) {
    if (x0_grid.empty()) throw std::domain_error("oscillation_scan: empty x0 grid");
    OscillationScanResult res;
    res.m = m;
    res.T = T;
    for (const auto& c : coeffs)
        if (0.5 * c.zero.gamma <= T) ++res.zero_count_used;
    bool first = true;
    for (const double x0 : x0_grid) {
        const double v = ingham_average(x0, T, coeffs);
        if (first || v > res.best_high) {
            res.best_high = v;
            res.best_high_x0 = x0;
        }
        if (first || v < res.best_low) {
            res.best_low = v;
            res.best_low_x0 = x0;
        }
        first = false;
    }
    return res;
}

}  // namespace riesz
