#pragma once

// The prime-pair singular series
//
//   S(k) = 2 C2 prod_{p|k, p>2} (p-1)/(p-2)   for even k, 0 for odd k,
//   C2   = prod_{p>2} (1 - 1/(p-1)^2) = 0.66016...
//
// Pointwise values, a bulk multiplicative sieve (values stored normalized
// as S(k)/(2 C2), so the table is C2-agnostic), and the twin-prime
// constant with an exact analytic tail: with X = 1/p,
//
//   log(1 - 1/(p-1)^2) = log(1-2X) - 2 log(1-X) = sum_{a>=2} (2-2^a)/a X^a,
//
// so the tail over p > P is sum_a (2-2^a)/a * sum_{p>P} p^(-a), and the
// inner prime sums come from Moebius inversion of depleted zeta logs.
// The a-series must be cut by its a-priori bound, never by the computed
// term size: past the true tail floor the computed terms are rounding
// noise that 2^a/a amplifies.

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/kahan.hpp"
#include "riesz_explicit/prime_zeta.hpp"
#include "riesz_explicit/primes.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

static_assert(std::endian::native == std::endian::little,
              "table serialization assumes a little-endian host");

struct TwinPrimeConstant {
    double value = 0.0;
    std::uint64_t prime_limit = 0;
    bool tail_corrected = false;
    double tail_estimate = 0.0;  // subtracted from log C2 when corrected
    double tail_bound = 0.0;     // a-priori bound 2/(P log P) on the tail
};

inline TwinPrimeConstant twin_prime_constant(std::uint64_t prime_limit, bool tail_corrected) {
    if (prime_limit < 3) throw std::domain_error("twin_prime_constant: prime_limit >= 3 required");
    const double P = static_cast<double>(prime_limit);
    const double logP = std::log(P);

    // exponents n*a needed by the Moebius-depleted tail sums
    std::vector<double> exps;
    std::vector<std::pair<int, int>> terms;  // (a, n)
    if (tail_corrected) {
        for (int a = 2; a <= 64; ++a) {
            const double cmag = (std::pow(2.0, a) - 2.0) / a;
            if (a > 4 && cmag * prime_tail_bound(a, P) < 1e-22) break;
            for (int n = 1; n <= 8; ++n) {
                if (detail::mobius[n] == 0) continue;
                if (n > 1 && prime_tail_bound(static_cast<double>(n) * a, P) / n < 1e-24) break;
                terms.emplace_back(a, n);
                exps.push_back(static_cast<double>(n) * a);
            }
        }
    }

    KahanSum log_prod;
    std::vector<KahanSum> depleted(exps.size());
    enumerate_primes(prime_limit, [&](std::uint64_t p) {
        const double pd = static_cast<double>(p);
        if (p > 2) log_prod.add(std::log1p(-1.0 / ((pd - 1.0) * (pd - 1.0))));
        if (!exps.empty()) {
            const double lp = std::log(pd);
            for (std::size_t i = 0; i < exps.size(); ++i)
                depleted[i].add(std::log1p(-std::exp(-exps[i] * lp)));
        }
    });

    TwinPrimeConstant out;
    out.prime_limit = prime_limit;
    out.tail_corrected = tail_corrected;
    out.tail_bound = 2.0 / (P * logP);
    if (tail_corrected) {
        // prime_zeta_gt[a] = sum_{p>P} p^(-a)
        double tail = 0.0;  // = sum_a (2^a-2)/a * prime_zeta_gt(a)
        int cur_a = -1;
        double pz = 0.0;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto [a, n] = terms[i];
            if (a != cur_a && cur_a > 0) {
                tail += (std::pow(2.0, cur_a) - 2.0) / cur_a * pz;
                pz = 0.0;
            }
            cur_a = a;
            const double na = static_cast<double>(n) * a;
            const double lz = std::log(zeta(cd(na, 0.0), 1e-14).real()) + depleted[i].value();
            pz += static_cast<double>(detail::mobius[n]) / n * lz;
        }
        if (cur_a > 0) tail += (std::pow(2.0, cur_a) - 2.0) / cur_a * pz;
        out.tail_estimate = tail;
        out.value = std::exp(log_prod.value() - tail);
    } else {
        out.value = std::exp(log_prod.value());
    }
    return out;
}

// Module-wide constant: computed once at prime_limit 1e7 with the tail
// correction, cached.
inline double best_c2() {
    static const double c2 = twin_prime_constant(10'000'000, true).value;
    return c2;
}

inline double singular_series(std::int64_t k, double c2) {
    if (k <= 0) throw std::domain_error("singular_series: defined for k >= 1");
    if (k % 2 != 0) return 0.0;
    std::int64_t v = k;
    while (v % 2 == 0) v /= 2;
    double r = 1.0;
    for (std::int64_t p = 3; p * p <= v; p += 2) {
        if (v % p != 0) continue;
        r *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
        while (v % p == 0) v /= p;
    }
    if (v > 1) r *= static_cast<double>(v - 1) / static_cast<double>(v - 2);
    return 2.0 * c2 * r;
}

inline double singular_series(std::int64_t k) { return singular_series(k, best_c2()); }

struct SingularSeriesTable {
    std::uint64_t limit = 0;
    double c2 = 0.0;
    std::vector<double> normalized;      // index k = 1..limit, S(k)/(2 C2); [0] unused
    std::vector<std::int64_t> ratio_num; // exact mode: q_k = num/den
    std::vector<std::int64_t> ratio_den;

    bool exact_mode() const { return !ratio_num.empty(); }
    double value(std::uint64_t k) const { return 2.0 * c2 * normalized[k]; }
};

inline constexpr std::uint64_t exact_mode_max_limit = 200'000;

inline SingularSeriesTable sieve_singular_series(std::uint64_t N, bool exact_mode) {
    if (N < 1) throw std::domain_error("sieve_singular_series: N >= 1 required");
    if (N > (std::uint64_t{1} << 31)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "sieve_singular_series: table of %llu values (%.1f GiB) exceeds the supported size",
                      static_cast<unsigned long long>(N), static_cast<double>(N) * 8.0 / (1 << 30));
        throw resource_error(msg);
    }
    if (exact_mode && N > exact_mode_max_limit)
        throw std::domain_error("sieve_singular_series: exact mode supports N <= 200000");

    SingularSeriesTable t;
    t.limit = N;
    t.c2 = best_c2();
    try {
        t.normalized.assign(N + 1, 0.0);
        if (exact_mode) {
            t.ratio_num.assign(N + 1, 0);
            t.ratio_den.assign(N + 1, 0);
        }
    } catch (const std::bad_alloc&) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "sieve_singular_series: allocation of %llu table entries failed",
                      static_cast<unsigned long long>(N + 1));
        throw resource_error(msg);
    }

    for (std::uint64_t k = 2; k <= N; k += 2) t.normalized[k] = 1.0;
    if (exact_mode)
        for (std::uint64_t k = 2; k <= N; k += 2) t.ratio_num[k] = t.ratio_den[k] = 1;

    // Multiplicative sieve: every even k <= N picks up (p-1)/(p-2) once per
    // distinct odd prime p | k, and only even multiples matter.
    if (N >= 6) {
        const auto primes = primes_upto(static_cast<std::uint32_t>(N / 2));
        for (const auto p : primes) {
            if (p < 3) continue;
            const double w = static_cast<double>(p - 1) / static_cast<double>(p - 2);
            for (std::uint64_t k = 2 * static_cast<std::uint64_t>(p); k <= N; k += 2 * p)
                t.normalized[k] *= w;
            if (exact_mode) {
                for (std::uint64_t k = 2 * static_cast<std::uint64_t>(p); k <= N; k += 2 * p) {
                    t.ratio_num[k] *= p - 1;
                    t.ratio_den[k] *= p - 2;
                }
            }
        }
    }
    return t;
}

// mean of S(k) over 1..N, fixed summation order
inline double table_mean(const SingularSeriesTable& t) {
    KahanSum acc;
    for (std::uint64_t k = 1; k <= t.limit; ++k) acc.add(t.normalized[k]);
    return 2.0 * t.c2 * acc.value() / static_cast<double>(t.limit);
}

// --- serialization: magic "SINGSER1", u64 N, then N little-endian binary64
//     of S(k)/(2 C2) ---

inline constexpr char table_magic[8] = {'S', 'I', 'N', 'G', 'S', 'E', 'R', '1'};

inline void write_table_binary(const SingularSeriesTable& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw config_error("cannot open table file for writing: " + path);
    f.write(table_magic, 8);
    const std::uint64_t n = t.limit;
    f.write(reinterpret_cast<const char*>(&n), 8);
    f.write(reinterpret_cast<const char*>(t.normalized.data() + 1),
            static_cast<std::streamsize>(8 * n));
    if (!f) throw resource_error("short write to table file: " + path);
}

inline SingularSeriesTable read_table_binary(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw config_error("cannot open table file: " + path);
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, table_magic, 8) != 0)
        throw config_error("not a SINGSER1 table file: " + path);
    std::uint64_t n = 0;
    f.read(reinterpret_cast<char*>(&n), 8);
    if (!f || n < 1 || n > (std::uint64_t{1} << 31))
        throw config_error("corrupt table header in " + path);
    SingularSeriesTable t;
    t.limit = n;
    t.c2 = best_c2();
    t.normalized.assign(n + 1, 0.0);
    f.read(reinterpret_cast<char*>(t.normalized.data() + 1), static_cast<std::streamsize>(8 * n));
    if (!f) throw config_error("truncated table file: " + path);
    return t;
}

inline void write_table_csv(const SingularSeriesTable& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw config_error("cannot open csv file for writing: " + path);
    f << "k,singular_series\n";
    char buf[40];
    for (std::uint64_t k = 1; k <= t.limit; ++k) {
        std::snprintf(buf, sizeof buf, "%.17g", t.value(k));
        f << k << ',' << buf << '\n';
    }
}

}  // namespace riesz
