#pragma once

// Shared test plumbing: data paths, golden-file loading, contour residues,
// temp files, and a CLI subprocess runner.

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsup {

inline std::string data_dir() { return RX_DATA_DIR; }
inline std::string zeros_path() { return data_dir() + "/zeros100.txt"; }
inline std::string golden_csv_path() { return data_dir() + "/coefficients_golden.csv"; }

struct GoldenCoeff {
    double gamma;
    int m;
    std::complex<double> a;
};

inline std::vector<GoldenCoeff> load_golden_coefficients() {
    std::ifstream f(golden_csv_path());
    if (!f) throw std::runtime_error("missing golden file: " + golden_csv_path());
    std::vector<GoldenCoeff> out;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        GoldenCoeff g{};
        double re = 0, im = 0;
        if (std::sscanf(line.c_str(), "%lf,%d,%lf,%lf", &g.gamma, &g.m, &re, &im) != 4)
            throw std::runtime_error("bad golden row: " + line);
        g.a = {re, im};
        out.push_back(g);
    }
    return out;
}

// (1/2 pi i) closed-circle integral by the trapezoid rule; exponentially
// accurate for meromorphic integrands.
template <typename F>
std::complex<double> contour_residue(F&& f, std::complex<double> center, double radius, int n = 64) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * k / n;
        const std::complex<double> off = radius * std::complex<double>(std::cos(th), std::sin(th));
        acc += f(center + off) * off;
    }
    return acc / static_cast<double>(n);
}

class TempDir {
  public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto p = base / ("riesz_test_" + std::to_string(::getpid()) + "_" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(p, ec)) {
                path_ = p;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct CmdResult {
    int code;
    std::string output;
};

#ifdef RX_CLI_BIN
inline CmdResult run_cli(const std::string& args, const std::string& scratch,
                         const std::string& env_prefix = "") {
    const std::string out_file = scratch + "/cli_capture.txt";
    const std::string cmd = env_prefix + std::string(RX_CLI_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.output = read_file(out_file);
    return r;
}
#endif

}  // namespace testsup
