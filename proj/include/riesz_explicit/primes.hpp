#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "riesz_explicit/errors.hpp"

namespace riesz {

// Plain odd-only sieve.  Returns the primes <= n.
inline std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    out.push_back(2);
    const std::uint32_t half = (n - 1) / 2;  // flags[i] <-> 2i+3
    std::vector<std::uint8_t> composite(half, 0);
    for (std::uint64_t i = 0; i < half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 3;
        if (p * p <= n)
            for (std::uint64_t j = (p * p - 3) / 2; j < half; j += p) composite[j] = 1;
    }
    for (std::uint64_t i = 0; i < half; ++i)
        if (!composite[i]) out.push_back(static_cast<std::uint32_t>(2 * i + 3));
    return out;
}

// Streams primes <= limit through f(p) in ascending order without storing
// them, segment by segment.  Used for the large Euler products.
template <typename F>
void enumerate_primes(std::uint64_t limit, F&& f) {
    if (limit >= 2) f(std::uint64_t{2});
    if (limit < 3) return;
    const auto base = primes_upto(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1);
    constexpr std::uint64_t seg_len = std::uint64_t{1} << 20;  // odd numbers per segment
    std::vector<std::uint8_t> flags(seg_len);
    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * seg_len) {
        const std::uint64_t hi = std::min(limit, lo + 2 * seg_len - 2);  // inclusive, odd
        const std::uint64_t count = (hi - lo) / 2 + 1;
        std::fill(flags.begin(), flags.begin() + count, 0);
        for (const std::uint64_t p : base) {
            if (p < 3) continue;
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t v = start; v <= hi; v += 2 * p) flags[(v - lo) / 2] = 1;
        }
        for (std::uint64_t i = 0; i < count; ++i)
            if (!flags[i]) f(lo + 2 * i);
    }
}

// Fixed prime basis p <= limit with cached logs, shared by the prime-zeta
// tail evaluations.  Immutable after construction.
struct PrimeBasis {
    std::uint64_t limit;
    std::vector<std::uint32_t> primes;  // includes 2
    std::vector<double> logs;

    explicit PrimeBasis(std::uint32_t lim) : limit(lim), primes(primes_upto(lim)) {
        logs.reserve(primes.size());
        for (const auto p : primes) logs.push_back(std::log(static_cast<double>(p)));
    }
};

// Basis used by the accelerated Euler-product evaluators.
inline const PrimeBasis& tail_basis() {
    static const PrimeBasis basis(3000);
    return basis;
}

}  // namespace riesz
