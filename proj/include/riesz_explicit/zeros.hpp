#pragma once

// Ingestion and validation of a table of nontrivial zeta zeros.  The file
// format is one positive imaginary part per line, ascending, at least 9
// decimal digits, '#' comments and blank lines allowed.  Each zero is
// validated by evaluating |zeta(1/2 + i gamma)| (must be below tolerance)
// and zeta'(1/2 + i gamma) is computed and stored; gamma is all we ingest.

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "riesz_explicit/errors.hpp"
#include "riesz_explicit/zeta.hpp"

namespace riesz {

struct ZetaZero {
    double gamma = 0.0;
    cd zeta_prime;
    double residual = 0.0;
    int index = 0;
};

struct ZeroTable {
    std::vector<ZetaZero> zeros;
    std::string source_path;
    std::size_t count() const { return zeros.size(); }
};

namespace detail {

enum class ZeroLine { empty, value, malformed };

inline ZeroLine parse_zero_line(const std::string& raw, double& out) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = 0, e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    line = line.substr(b, e - b);
    if (line.empty()) return ZeroLine::empty;
    const char* s = line.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s + line.size()) return ZeroLine::malformed;
    const auto dot = line.find('.');
    if (dot == std::string::npos) return ZeroLine::malformed;
    std::size_t digits = 0;
    for (std::size_t i = dot + 1;
         i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])); ++i)
        ++digits;
    if (digits < 9) return ZeroLine::malformed;  // format promises >= 9 decimal digits
    out = v;
    return ZeroLine::value;
}

}  // namespace detail

inline ZeroTable load_zeros(const std::string& path, double validation_tolerance = 1e-4) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open zeros file: " + path);
    ZeroTable table;
    table.source_path = path;
    std::string line;
    int lineno = 0;
    double prev = 0.0;
    while (std::getline(f, line)) {
        ++lineno;
        double gamma = 0.0;
        const auto kind = detail::parse_zero_line(line, gamma);
        if (kind == detail::ZeroLine::malformed)
            throw config_error(path + ": parse error at line " + std::to_string(lineno));
        if (kind == detail::ZeroLine::empty) continue;
        if (gamma <= 0.0 || gamma <= prev)
            throw config_error(path + ": zeros must be positive and strictly ascending, line " +
                               std::to_string(lineno));
        if (gamma > zeta_im_max)
            throw config_error(path + ": gamma beyond supported range 1e5, line " +
                               std::to_string(lineno));
        ZetaZero z;
        z.gamma = gamma;
        z.index = static_cast<int>(table.zeros.size()) + 1;
        table.zeros.push_back(z);
        prev = gamma;
    }
    if (table.zeros.empty()) throw config_error(path + ": no zeros found");

    for (auto& z : table.zeros) {
        const cd rho(0.5, z.gamma);
        z.residual = std::abs(zeta(rho, 1e-10));
        if (z.residual > validation_tolerance) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "zero validation failed: |zeta(1/2 + %.9fi)| = %.3g exceeds tolerance %.3g",
                          z.gamma, z.residual, validation_tolerance);
            throw verification_error(msg);
        }
        z.zeta_prime = zeta_derivative(rho, 1e-9);
    }
    return table;
}

}  // namespace riesz
