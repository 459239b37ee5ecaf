// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Release gate: eight checks, one line of output each, nonzero exit when any
// check misses its bound or its runtime budget.  The determinism check needs
// the CLI binary path as argv[1].
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "schwarz/harness.hpp"
#include "schwarz/mobius.hpp"
#include "schwarz/rng.hpp"
#include "schwarz/sympoly.hpp"

using schwarz::Complex;

namespace {

constexpr double kGoldenAngle = 2.3999632297286533222;

int g_failures = 0;

void criterion(int idx, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = secs <= budget_s;
    bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::printf("[%s] criterion-%d %s: %s (%.2fs, budget %.0fs%s)\n",
                pass ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str(), secs,
                budget_s, in_budget ? "" : " EXCEEDED");
    std::fflush(stdout);
}

std::string strip_wall(const std::string& s) {
    static const std::regex re(R"rx(,"(wall_ms|elapsed_ms)":[^,}]*\})rx");
    return std::regex_replace(s, re, "}");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string suite_detail(const schwarz::harness::SuiteReport& r) {
    std::ostringstream os;
    os << r.passes << "/" << r.config.trials << " pass, " << r.aborts
       << " aborted, min margin " << r.min_margin;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "exact-disk-law", 1.0, [](std::string& detail) {
        schwarz::Rng rng(101);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            Complex z = rng.next_in_disk();
            worst = std::max(worst,
                             std::abs(schwarz::mobius_disk(z, 0.0) - std::abs(z)));
        }
        std::ostringstream os;
        os << "max deviation " << worst << " over 10000 samples";
        detail = os.str();
        return worst <= 1e-14;
    });

    criterion(2, "symmetrize-roots-round-trip", 10.0, [](std::string& detail) {
        schwarz::Rng rng(202);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng.next_below(8));
            std::vector<Complex> pts(static_cast<size_t>(n));
            for (auto& p : pts) p = rng.next_in_disk(0.95);
            schwarz::GnPoint sg = schwarz::symmetrize(pts);
            std::vector<Complex> back = schwarz::gn_roots(sg).roots.expanded();
            worst = std::max(worst, schwarz::hausdorff_euclidean(back, pts));
        }
        std::ostringstream os;
        os << "worst hausdorff " << worst << " over 1000 multisets";
        detail = os.str();
        return worst <= 1e-8;
    });

    criterion(3, "fiber-bound-inequalities", 60.0, [](std::string& detail) {
        schwarz::harness::SuiteConfig cfg;
        cfg.trials = 1000;
        cfg.n = 5;
        cfg.degree = 6;
        cfg.grid = 10;
        cfg.tol = 1e-7;
        cfg.threads = 0;
        auto rep = schwarz::harness::run_main_suite(cfg);
        detail = suite_detail(rep);
        return rep.ok() && rep.min_margin >= -1e-7;
    });

    criterion(4, "root-lift-attains-equality", 5.0, [](std::string& detail) {
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n) {
            schwarz::GnPoint origin;
            origin.sigma.assign(static_cast<size_t>(n), Complex(0.0, 0.0));
            for (int j = 0; j < 64; ++j) {
                Complex x = 0.0;
                if (j > 0)
                    x = std::polar(0.93 * std::sqrt(j / 63.0), kGoldenAngle * j);
                double h = schwarz::fiber_distance_h(
                    schwarz::nth_root_map(x, n), origin);
                double dev = std::abs(schwarz::detail::ipow(h, n) - std::abs(x));
                worst = std::max(worst, dev);
            }
        }
        std::ostringstream os;
        os << "worst |h^n - |x|| = " << worst << " for n in {2,3,4}";
        detail = os.str();
        return worst <= 1e-8;
    });

    criterion(5, "weighted-gauge-bounds", 60.0, [](std::string& detail) {
        schwarz::harness::SuiteConfig cfg;
        cfg.trials = 1000;
        cfg.tol = 1e-7;
        cfg.threads = 0;
        auto rep = schwarz::harness::run_quasibalanced_suite(cfg);
        detail = suite_detail(rep);
        return rep.ok() && rep.min_margin >= -1e-7;
    });

    criterion(6, "spectral-ball-maps", 120.0, [](std::string& detail) {
        schwarz::harness::SuiteConfig cfg;
        cfg.trials = 500;
        cfg.n = 4;
        cfg.degree = 4;
        cfg.tol = 1e-6;
        cfg.threads = 0;
        auto rep = schwarz::harness::run_spectral_suite(cfg);
        detail = suite_detail(rep);
        return rep.ok() && rep.min_margin >= -1e-6;
    });

    criterion(7, "metric-battery", 30.0, [](std::string& detail) {
        schwarz::harness::SuiteConfig cfg;
        cfg.threads = 0;
        auto rep = schwarz::harness::run_metrics_suite(cfg);
        detail = suite_detail(rep);
        return rep.ok();
    });

    criterion(8, "deterministic-reports", 120.0, [&cli](std::string& detail) {
        if (cli.empty()) {
            detail = "missing CLI binary path argument";
            return false;
        }
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "schwarz-accept";
        fs::create_directories(dir);
        struct Run {
            const char* file;
            int threads;
        };
        const Run runs[] = {{"a.jsonl", 1}, {"b.jsonl", 4}, {"c.jsonl", 1}};
        std::vector<std::string> outputs;
        for (const Run& r : runs) {
            fs::path out = dir / r.file;
            std::ostringstream cmd;
            cmd << '"' << cli << "\" all --threads " << r.threads << " > \""
                << out.string() << "\" 2>/dev/null";
            if (std::system(cmd.str().c_str()) != 0) {
                detail = "CLI run failed: " + cmd.str();
                return false;
            }
            outputs.push_back(strip_wall(read_file(out)));
        }
        bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
        std::ostringstream os;
        os << outputs[0].size() << " bytes after wall-time strip, threads {1,4} "
           << (same ? "identical" : "DIFFER");
        detail = os.str();
        return same && !outputs[0].empty();
    });

    if (g_failures > 0) {
        std::printf("%d of 8 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
