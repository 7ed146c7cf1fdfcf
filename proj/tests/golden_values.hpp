#pragma once

// Reference values frozen from a 20-35 digit mpmath evaluation run
// (tools/gen_golden.py).  Everything here was computed before the C++
// implementation existed and is independent of it.

namespace golden {

// twin-prime constant, 30 digits: 0.660161815846869573927812110015
inline constexpr double c2 = 0.66016181584686957;

// uncorrected Euler products
inline constexpr double c2_product_1e6 = 0.66016186058984076;
inline constexpr double c2_product_p3 = 0.75;

// G(1) = 5 zeta(4) / (4 zeta(2) C2), G(0) = 3 zeta(2) / (4 C2)
inline constexpr double g_at_1 = 1.2458567182790405;
inline constexpr double g_at_0 = 1.8687850774185608;

// G'/G(0) = (2/3) log 2 + 2 zeta'(2)/zeta(2)
inline constexpr double g_logderiv_0 = -0.67782386581576874;

inline constexpr double zeta_prime_2 = -0.93754825431584375;
inline constexpr double zeta_prime_0 = -0.91893853320467274;  // = -(1/2) log 2pi

// first zero and its derivative value
inline constexpr double gamma1 = 14.134725141734694;
inline constexpr double zeta_prime_rho1_re = 0.78329651186703093;
inline constexpr double zeta_prime_rho1_im = 0.12469982974817109;

// x^2/2 - (1/2) x (log x - 1 + gamma + log 2pi) at x = 1
inline constexpr double main_term_1_1 = -0.20754636565543917;

// moduli |a(rho_1, m)|
inline constexpr double a1_mod_m1 = 0.085440709160035703;
inline constexpr double a1_mod_m2 = 0.023809407371650280;
inline constexpr double a1_mod_m3 = 0.0096304940912799955;
inline constexpr double a1_mod_m4 = 0.0049521589510541122;

// a(rho_1, 2)
inline constexpr double a1_m2_re = -0.023668291524545965;
inline constexpr double a1_m2_im = 0.0025884079466537605;

// T sums over the first 100 zeros (gamma > 0 side)
inline constexpr double t1_b2 = 0.015547867406107131;
inline constexpr double t2_b2 = 0.014155383137058761;
inline constexpr double t1_b3 = 0.00070700904714244283;
inline constexpr double t2_b3 = 0.00075607037198264490;

// diagnostics over the first 100 zeros
inline constexpr double c1_sum_100 = 2.74662655597;       // 2 sum |a(rho,1)|
inline constexpr double c2_sum_100 = 0.201964219442;      // 2 sum |a(rho,2)|
inline constexpr double c1_quarter_ratio = 0.2882;        // q4/q1 of the m=1 quarter sums
inline constexpr double fit_exponent_m2 = -1.8686;        // least-squares slope, m=2

}  // namespace golden
