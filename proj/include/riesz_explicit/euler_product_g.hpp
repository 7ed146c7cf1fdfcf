#pragma once

// The correction Euler product
//
//   G(s) = prod_{p>2} (1 + 2/((p-2)(p^(s+1)+1))),   convergent for Re s > -1.
//
// Two evaluators:
//
//  * g_product:     the literal truncated product over 2 < p <= prime_limit
//                   with a reported tail bound.  Near Re s = -3/4 the tail
//                   only shrinks like P^(-1/4)/log P, so this form cannot
//                   reach high precision no matter the limit.
//  * g_accelerated: direct product over p <= 3000 times an analytic tail.
//                   With X = 1/p, Y = p^(-w), w = s+1, each factor's log is
//                   log(1 + 2XY/((1-2X)(1+Y))) = sum_{a,b>=1} c_{a,b} X^a Y^b
//                   with rational c_{a,b}, so the tail over p > 3000 is
//                   sum c_{a,b} * (sum_{p>3000} p^-(a+bw)), and the prime
//                   sums are exact via Moebius-depleted zeta logs.  Machine
//                   precision for Re s >= -0.8, i.e. Re w >= 0.2.
//
// g_log_derivative_at_0 computes G'/G(0) = sum_{p>2} of
//   -2 p log p / ((p-2)(p+1)^2 (1 + 2/((p-2)(p+1))))
// over p <= prime_limit; the summand collapses to -2 log p / (p^2 - 1)
// exactly, so the p > prime_limit remainder is -2 sum_j L(2j) with
// L(y) = sum_{p>P} log(p) p^(-y), evaluated analytically.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/kahan.hpp"
#include "riesz_explicit/prime_zeta.hpp"
#include "riesz_explicit/primes.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

struct GTruncated {
    cd value;
    double tail_bound;  // bound on the relative error from p > prime_limit
};

// over-estimate of sum_{p>P} 2 / ((p-2)(p^(sigma+1)-1))
inline double g_tail_bound(double sigma, double prime_limit) {
    const double w = sigma + 1.0;
    if (w <= 0.0) return HUGE_VAL;
    const double P = prime_limit;
    const double corr = (1.0 - 2.0 / P) * (1.0 - std::pow(P, -w));
    return 1.02 * 2.0 * prime_tail_bound(w + 1.0, P) / corr;
}

// Log-space compensated accumulation: a plain running product drifts by
// ~n*eps over 1e5+ factors, which would swamp the true truncation tail.
inline GTruncated g_product(cd s, std::uint64_t prime_limit) {
    if (!(s.real() > -1.0))
        throw std::domain_error("G: divergent for Re s <= -1");
    if (prime_limit < 3) throw std::domain_error("G: prime_limit >= 3 required");
    const cd w = s + 1.0;
    KahanSum log_re, log_im;
    enumerate_primes(prime_limit, [&](std::uint64_t p) {
        if (p < 3) return;
        const double pd = static_cast<double>(p);
        const cd lf = std::log(1.0 + 2.0 / ((pd - 2.0) * (std::exp(w * std::log(pd)) + 1.0)));
        log_re.add(lf.real());
        log_im.add(lf.imag());
    });
    return {std::exp(cd(log_re.value(), log_im.value())),
            g_tail_bound(s.real(), static_cast<double>(prime_limit))};
}

namespace detail {

inline constexpr int g_amax = 10;
inline constexpr int g_bmax = 48;

// c_{a,b} of log(1 + 2XY/((1-2X)(1+Y))); computed once from the closed-form
// expansion of u = 2XY sum (2X)^i sum (-Y)^j by powering the series.
inline const std::vector<double>& g_log_series_coeffs() {
    static const std::vector<double> table = [] {
        constexpr int A = g_amax, B = g_bmax;
        auto idx = [](int a, int b) { return a * (B + 1) + b; };
        std::vector<double> u((A + 1) * (B + 1), 0.0), out(u.size(), 0.0), upow(u);
        for (int a = 1; a <= A; ++a)
            for (int b = 1; b <= B; ++b)
                u[idx(a, b)] = (b % 2 ? 1.0 : -1.0) * std::pow(2.0, a);
        upow = u;
        for (int v = 1; v <= std::min(A, B); ++v) {
            const double sgn = (v % 2 ? 1.0 : -1.0) / v;
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += sgn * upow[i];
            if (v == std::min(A, B)) break;
            std::vector<double> nxt(u.size(), 0.0);
            for (int a1 = v; a1 <= A; ++a1)
                for (int b1 = v; b1 <= B; ++b1) {
                    const double c1 = upow[idx(a1, b1)];
                    if (c1 == 0.0) continue;
                    for (int a2 = 1; a2 + a1 <= A; ++a2)
                        for (int b2 = 1; b2 + b1 <= B; ++b2) {
                            const double c2 = u[idx(a2, b2)];
                            if (c2 != 0.0) nxt[idx(a1 + a2, b1 + b2)] += c1 * c2;
                        }
                }
            upow = std::move(nxt);
        }
        return out;
    }();
    return table;
}

}  // namespace detail

inline cd g_accelerated(cd s, double eps = 5e-15) {
    const cd w = s + 1.0;
    if (!(w.real() >= 0.2))
        throw std::domain_error("g_accelerated: requires Re s >= -0.8; use g_product below that");
    const PrimeBasis& basis = tail_basis();
    const double P = static_cast<double>(basis.limit);

    KahanSum log_re, log_im;
    for (std::size_t i = 0; i < basis.primes.size(); ++i) {
        if (basis.primes[i] < 3) continue;
        const double pd = static_cast<double>(basis.primes[i]);
        const cd lf = std::log(1.0 + 2.0 / ((pd - 2.0) * (std::exp(w * basis.logs[i]) + 1.0)));
        log_re.add(lf.real());
        log_im.add(lf.imag());
    }
    const cd prod = std::exp(cd(log_re.value(), log_im.value()));

    const auto& coef = detail::g_log_series_coeffs();
    auto idx = [](int a, int b) { return a * (detail::g_bmax + 1) + b; };
    cd tail = 0.0;
    for (int a = 1; a <= detail::g_amax; ++a)
        for (int b = 1; b <= detail::g_bmax; ++b) {
            const double c = coef[idx(a, b)];
            if (c == 0.0) continue;
            const double q = a + b * w.real();
            if (std::fabs(c) * prime_tail_bound(q, P) < 0.02 * eps) continue;
            tail += c * prime_zeta_tail(static_cast<double>(a) + static_cast<double>(b) * w,
                                        eps / (1.0 + std::fabs(c)), basis);
        }
    return prod * std::exp(tail);
}

struct GLogDerivative {
    double value;            // corrected G'/G(0)
    double truncated;        // plain sum over 2 < p <= prime_limit
    double tail_correction;  // value - truncated
    double tail_bound;       // a-priori bound on |sum over p > prime_limit|
};

inline GLogDerivative g_log_derivative_at_0(std::uint64_t prime_limit = 1'000'000) {
    if (prime_limit < 3) throw std::domain_error("g_log_derivative_at_0: prime_limit >= 3");
    const double P = static_cast<double>(prime_limit);

    // exponents y = 2jn needed by the corrections, j summation first
    std::vector<int> js;
    for (int j = 1; j <= 8; ++j) {
        if (j > 1 && prime_log_tail_bound(2.0 * j, P) < 1e-22) break;
        js.push_back(j);
    }
    std::vector<double> exps;  // distinct n*y values
    auto want = [&](double y) {
        for (const double e : exps)
            if (e == y) return;
        exps.push_back(y);
    };
    for (const int j : js)
        for (int n = 1; n <= 8; ++n) {
            if (detail::mobius[n] == 0) continue;
            if (n > 1 && prime_log_tail_bound(n * 2.0 * j, P) < 1e-22) break;
            want(n * 2.0 * j);
        }

    KahanSum direct;
    std::vector<KahanSum> wsum(exps.size());  // sum_{p<=P} log(p) p^-y / (1 - p^-y)
    enumerate_primes(prime_limit, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        const double lp = std::log(pd);
        if (p > 2) {
            const double inner = 1.0 + 2.0 / ((pd - 2.0) * (pd + 1.0));
            direct.add(-2.0 * pd * lp / ((pd - 2.0) * (pd + 1.0) * (pd + 1.0) * inner));
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const double pw = std::exp(-exps[i] * lp);
            wsum[i].add(lp * pw / (1.0 - pw));
        }
    });
    auto wval = [&](double y) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] == y) return wsum[i].value();
        throw std::logic_error("g_log_derivative_at_0: missing exponent");
    };

    double correction = 0.0;
    double bound = 0.0;
    for (const int j : js) {
        const double y = 2.0 * j;
        double L = 0.0;  // sum_{p>P} log(p) p^-y
        for (int n = 1; n <= 8; ++n) {
            if (detail::mobius[n] == 0) continue;
            if (n > 1 && prime_log_tail_bound(n * y, P) < 1e-22) break;
            const double ny = n * y;
            const double zl = (zeta_derivative(cd(ny, 0.0), 1e-12) / zeta(cd(ny, 0.0), 1e-14)).real();
            L += -static_cast<double>(detail::mobius[n]) * (zl + wval(ny));
        }
        correction += -2.0 * L;
        bound += 2.0 * prime_log_tail_bound(y, P);
    }

    GLogDerivative out;
    out.truncated = direct.value();
    out.tail_correction = correction;
    out.value = out.truncated + correction;
    out.tail_bound = bound;
    return out;
}

}  // namespace riesz
