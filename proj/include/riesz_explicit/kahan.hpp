#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace riesz {

// Neumaier variant of compensated summation.  Unlike plain Kahan it also
// tracks the error when the incoming term is larger than the running sum,
// which happens constantly in the descending-magnitude combinations below.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// Compensated sum of a small term array in descending-magnitude order.
// Used for the binomial recombination of power sums, where the terms are
// all of comparable size and mostly cancel.
inline double sum_descending(double* terms, std::size_t n) {
    std::sort(terms, terms + n,
              [](double a, double b) { return std::fabs(a) > std::fabs(b); });
    KahanSum acc;
    for (std::size_t i = 0; i < n; ++i) acc.add(terms[i]);
    return acc.value();
}

}  // namespace riesz
