#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace riesz {

// 20+ digit literals; binary64 keeps the first 17.
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double log_two_pi = 1.8378770664093454836;
inline constexpr double pi_value = 3.14159265358979323846;

// H_m as an exact rational, converted once.  lcm(1..40) and the matching
// numerator both fit in int64, which covers every m this project accepts.
inline double harmonic_number(int m) {
    if (m < 1 || m > 40) throw std::domain_error("harmonic_number: m out of [1,40]");
    std::int64_t num = 0, den = 1;
    for (int n = 1; n <= m; ++n) {
        num = num * n + den;
        den *= n;
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

inline constexpr double binomial(int m, int j) {
    double r = 1.0;
    for (int i = 1; i <= j; ++i) r = r * (m - j + i) / i;
    return r;
}

}  // namespace riesz
