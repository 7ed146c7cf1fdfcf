#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "riesz_explicit/dirichlet_f.hpp"
#include "riesz_explicit/explicit_formula.hpp"
#include "riesz_explicit/riesz_means.hpp"
#include "golden_values.hpp"
#include "support.hpp"

using namespace riesz;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const ZeroTable& zeros() {
    static const auto t = load_zeros(testsup::zeros_path());
    return t;
}

// coefficient tables for m = 1..4, built once
const std::vector<std::vector<ExplicitCoefficient>>& tables() {
    static const auto t = coefficient_tables(zeros(), 4);
    return t;
}

}  // namespace

TEST_CASE("coefficients match the high-precision golden file") {
    const auto golden_rows = testsup::load_golden_coefficients();
    REQUIRE(golden_rows.size() == 400);
    const auto& tabs = tables();
    std::size_t checked = 0;
    for (const auto& row : golden_rows) {
        const auto& tab = tabs[static_cast<std::size_t>(row.m - 1)];
        for (const auto& ec : tab) {
            if (std::fabs(ec.zero.gamma - row.gamma) < 1e-9) {
                const double rel = std::abs(ec.value - row.a) / std::abs(row.a);
                if (rel > 1e-6)
                    FAIL("coefficient mismatch at gamma=" << row.gamma << " m=" << row.m
                                                          << " rel=" << rel);
                ++checked;
                break;
            }
        }
    }
    REQUIRE(checked == 400);
}

TEST_CASE("|a(rho_1, 2)| agrees with the 30-digit oracle to 8+ digits") {
    const auto ec = coefficient_a(zeros().zeros.front(), 2);
    REQUIRE_THAT(ec.modulus, WithinRel(golden::a1_mod_m2, 1e-8));
    REQUIRE_THAT(ec.value.real(), WithinRel(golden::a1_m2_re, 1e-7));
    REQUIRE_THAT(ec.value.imag(), WithinRel(golden::a1_m2_im, 1e-7));
}

TEST_CASE("conjugation: evaluating the formula at -gamma conjugates a(rho)") {
    for (int idx : {0, 4, 60}) {
        ZetaZero mirrored = zeros().zeros[static_cast<std::size_t>(idx)];
        mirrored.gamma = -mirrored.gamma;
        mirrored.zeta_prime = std::conj(mirrored.zeta_prime);
        for (int m = 1; m <= 2; ++m) {
            const cd down = coefficient_a(mirrored, m).value;
            const cd up = tables()[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(idx)].value;
            REQUIRE(std::abs(down - std::conj(up)) <= 1e-10 * std::abs(up));
        }
    }
}

TEST_CASE("m-recurrence: a(rho, m+1) = a(rho, m) (m+1)/(rho/2 + m) at gamma_1") {
    const auto& z1 = zeros().zeros.front();
    const cd half(0.25, 0.5 * z1.gamma);
    for (int m = 1; m <= 4; ++m) {
        const cd lhs = coefficient_a(z1, m + 1).value;
        const cd rhs = coefficient_a(z1, m).value * (double(m) + 1.0) / (half + double(m));
        REQUIRE(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("near-multiple-zero guard") {
    ZetaZero fake = zeros().zeros.front();
    fake.zeta_prime = cd(1e-7, 0.0);
    REQUIRE_THROWS_AS(coefficient_a(fake, 1), verification_error);
}

TEST_CASE("prediction is real and equals the two-sided complex sum") {
    const auto& tab = tables()[1];  // m = 2
    const double x = 5000.0;
    const auto rec = zero_sum_prediction(2, x, tab, 100);
    REQUIRE_THAT(rec.prediction, WithinRel(std::pow(x, 2 - 0.75) * rec.scaled_prediction, 1e-14));

    // two-sided sum over +gamma and -gamma with conjugate coefficients
    cd two_sided = 0.0;
    for (const auto& ec : tab) {
        const cd up = ec.value * std::exp(cd(0.0, 0.5 * ec.zero.gamma * std::log(x)));
        two_sided += up + std::conj(up);
    }
    REQUIRE(std::fabs(two_sided.imag()) < 1e-12 * std::max(1.0, std::abs(two_sided)));
    REQUIRE_THAT(rec.scaled_prediction, WithinRel(two_sided.real(), 1e-11));

    REQUIRE_THROWS_AS(zero_sum_prediction(2, x, tab, 0), std::domain_error);
    REQUIRE_THROWS_AS(zero_sum_prediction(2, x, tab, 101), std::range_error);
    REQUIRE_THROWS_AS(zero_sum_prediction(2, 1.0, tab, 10), std::domain_error);
}

TEST_CASE("prediction hits the exact error term at m = 2, x = 1e4") {
    static const auto table = sieve_singular_series(10'000, false);
    const auto ev = error_term(2, 1e4, table);
    const auto rec = zero_sum_prediction(2, 1e4, tables()[1], 100);
    REQUIRE(std::fabs(rec.prediction - ev.e_m) <= 0.1 * std::pow(1e4, 2.0 - 0.75));
}

TEST_CASE("more zeros improve the prediction or stay within the tail estimate") {
    static const auto table = sieve_singular_series(100'000, false);
    const auto xs = log_spaced_grid(1e3, 1e5, 20);
    for (int m : {2, 3}) {
        const auto& tab = tables()[static_cast<std::size_t>(m - 1)];
        const auto evals = error_term_grid(m, xs, table);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double prev_err = 0.0;
            for (int count : {25, 50, 100}) {
                const auto rec = zero_sum_prediction(m, xs[i], tab, count);
                const double err = std::fabs(rec.prediction - evals[i].e_m);
                if (count > 25)
                    REQUIRE((err <= prev_err * (1.0 + 1e-9) || err <= rec.tail_estimate));
                prev_err = err;
            }
        }
    }
}

TEST_CASE("tail estimate: finite and decreasing for m = 2, infinite for m = 1") {
    const auto& tab2 = tables()[1];
    const auto r25 = zero_sum_prediction(2, 1e4, tab2, 25);
    const auto r100 = zero_sum_prediction(2, 1e4, tab2, 100);
    REQUIRE(std::isfinite(r25.tail_estimate));
    REQUIRE(r25.tail_estimate > r100.tail_estimate);
    REQUIRE(r100.tail_estimate > 0.0);

    const auto r1 = zero_sum_prediction(1, 1e4, tables()[0], 100);
    REQUIRE(std::isinf(r1.tail_estimate));
}

TEST_CASE("c_m partial sums and decay exponents") {
    const auto c1 = c_m_partial_sums(tables()[0]);
    const auto c2p = c_m_partial_sums(tables()[1]);
    for (std::size_t i = 1; i < c1.size(); ++i) REQUIRE(c1[i] > c1[i - 1]);
    REQUIRE_THAT(c1.back(), WithinRel(golden::c1_sum_100, 1e-6));
    REQUIRE_THAT(c2p.back(), WithinRel(golden::c2_sum_100, 1e-6));

    const double slope = fitted_decay_exponent(tables()[1]);
    REQUIRE_THAT(slope, WithinAbs(golden::fit_exponent_m2, 1e-3));
}

TEST_CASE("T sums: golden values, Cauchy inequality, growth in table size") {
    const auto [t1b2, t2b2] = T_sums(2.0, zeros());
    const auto [t1b3, t2b3] = T_sums(3.0, zeros());
    REQUIRE_THAT(t1b2, WithinRel(golden::t1_b2, 1e-6));
    REQUIRE_THAT(t2b2, WithinRel(golden::t2_b2, 1e-6));
    REQUIRE_THAT(t1b3, WithinRel(golden::t1_b3, 1e-6));
    REQUIRE_THAT(t2b3, WithinRel(golden::t2_b3, 1e-6));

    for (double b : {2.0, 3.0}) {
        const auto [t1, t2] = T_sums(b, zeros());
        KahanSum gb;
        for (const auto& z : zeros().zeros) gb.add(std::pow(z.gamma, -b));
        REQUIRE(t1 <= std::sqrt(t2 * gb.value()) * (1.0 + 1e-12));
    }

    ZeroTable half;
    half.zeros.assign(zeros().zeros.begin(), zeros().zeros.begin() + 50);
    const auto [h1, h2] = T_sums(2.0, half);
    REQUIRE(h1 < t1b2);
    REQUIRE(h2 < t2b2);

    REQUIRE_THROWS_AS(T_sums(1.0, zeros()), std::domain_error);
}

TEST_CASE("ingham average: empty below gamma_1/2, single-zero closed form at T = 10") {
    const auto& tab = tables()[0];
    REQUIRE(ingham_average(3.7, 5.0, tab) == 0.0);  // gamma_1/2 = 7.07 > 5

    const auto& z1 = zeros().zeros.front();
    const cd a1 = tab.front().value;
    for (double x0 : {1.0, 1.7, 2.2}) {
        const double expected =
            2.0 * (1.0 - z1.gamma / 20.0) *
            (a1 * std::exp(cd(0.0, 0.5 * z1.gamma * std::log(x0)))).real();
        REQUIRE_THAT(ingham_average(x0, 10.0, tab), WithinAbs(expected, 1e-14));
    }
}

TEST_CASE("ingham average: log-periodicity in the single-zero regime") {
    const auto& tab = tables()[2];  // m = 3
    const double period = default_scan_period(zeros().zeros.front().gamma);
    for (double x0 : {1.1, 1.9}) {
        const double a = ingham_average(x0, 10.0, tab);
        const double b = ingham_average(x0 * period, 10.0, tab);
        REQUIRE_THAT(b, WithinAbs(a, 1e-10));
    }
}

TEST_CASE("oscillation scan: recovers the single-zero amplitude at T = 10") {
    const auto& tab = tables()[0];  // m = 1
    const double period = default_scan_period(golden::gamma1);
    const auto grid = log_spaced_grid(1.0, period, 100'000);
    const auto res = oscillation_scan(1, 10.0, grid, tab);
    const double amplitude = 2.0 * (1.0 - golden::gamma1 / 20.0) * golden::a1_mod_m1;
    REQUIRE(res.zero_count_used == 1);
    REQUIRE(res.best_high >= 0.999 * amplitude);
    REQUIRE(res.best_high <= amplitude * (1.0 + 1e-9));
    REQUIRE(res.best_low <= -0.999 * amplitude);
    REQUIRE(res.best_high >= res.best_low);
    // the scan resolves the phase to much better than 1e-4 of the bound
    REQUIRE_THAT(res.best_high, WithinRel(amplitude, 1e-4));
}

TEST_CASE("oscillation scan: degenerate grids") {
    const auto& tab = tables()[0];
    const auto res = oscillation_scan(1, 10.0, {2.0}, tab);
    REQUIRE(res.best_high == res.best_low);
    REQUIRE(res.best_high_x0 == 2.0);
    REQUIRE_THROWS_AS(oscillation_scan(1, 10.0, {}, tab), std::domain_error);
}

TEST_CASE("residue cross-check: a(rho) equals the contour residue of the closed form") {
    const int m = 2;
    double mfact = 2.0;
    auto integrand = [&](cd s) {
        cd denom = s;
        for (int j = 1; j <= m; ++j) denom *= s + double(j);
        return mfact * F_closed(s) / denom;
    };
    for (int idx = 0; idx < 2; ++idx) {
        const auto& ec = tables()[1][static_cast<std::size_t>(idx)];
        const cd center(-0.75, 0.5 * ec.zero.gamma);
        const cd res = testsup::contour_residue(integrand, center, 1e-3, 32);
        REQUIRE(std::abs(res - ec.value) <= 1e-6 * std::abs(ec.value));
    }
}
