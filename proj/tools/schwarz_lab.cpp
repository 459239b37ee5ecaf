// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end for the suite runner.  Links only the shared
// library's C API; all numerics live behind schwarzlab.h.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schwarzlab.h"

namespace {

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct Flags {
    std::string seed, trials, n, degree, grid, tol, threads, out, format;
};

// Returns nonzero exit code on failure; fills *ok with the suite verdict.
int run_one_suite(const std::string& suite, const Flags& flags,
                  const std::string& out_override, bool* ok) {
    schwarz_suite_config* cfg = nullptr;
    if (schwarz_suite_config_new(&cfg) != SCHWARZ_OK) {
        std::cerr << "error: " << schwarz_last_error() << "\n";
        return 2;
    }
    auto set = [&](const char* key, const std::string& value) {
        if (value.empty()) return true;
        if (schwarz_suite_config_set(cfg, key, value.c_str()) != SCHWARZ_OK) {
            std::cerr << "error: " << schwarz_last_error() << "\n";
            return false;
        }
        return true;
    };
    bool set_ok = set("suite", suite) && set("seed", flags.seed) &&
                  set("trials", flags.trials) && set("n", flags.n) &&
                  set("degree", flags.degree) && set("grid", flags.grid) &&
                  set("tol", flags.tol) && set("threads", flags.threads) &&
                  set("format", flags.format) &&
                  set("out", out_override.empty() ? flags.out : out_override);
    if (!set_ok) {
        schwarz_suite_config_free(cfg);
        return 2;
    }

    schwarz_report* rep = nullptr;
    schwarz_status st = schwarz_run_suite(cfg, &rep);
    schwarz_suite_config_free(cfg);
    if (st != SCHWARZ_OK) {
        std::cerr << "error: " << schwarz_last_error() << "\n";
        return st == SCHWARZ_ERR_INVALID_ARGUMENT ? 2 : 1;
    }

    int exit_code = 0;
    if (schwarz_report_write(rep) != SCHWARZ_OK) {
        std::cerr << "error: " << schwarz_last_error() << "\n";
        exit_code = 1;
    }
    const char* summary = nullptr;
    if (schwarz_report_summary(rep, &summary) == SCHWARZ_OK && summary)
        std::cerr << summary << "\n";
    int rep_ok = 0;
    schwarz_report_ok(rep, &rep_ok);
    *ok = rep_ok != 0;
    schwarz_report_free(rep);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded invariant-metric suite runner (schwarz-lab)"};
    app.set_config("--config", "",
                   "Flat key=value file with the same keys as the flags");

    std::string suite;
    bool list = false;
    Flags flags;
    app.add_option("suite", suite,
                   "Suite name, or 'all' to run every suite in order");
    app.add_flag("--list", list, "Print the available suite names and exit");
    app.add_option("--seed", flags.seed, "Base seed (u64)");
    app.add_option("--trials", flags.trials, "Trial count");
    app.add_option("--n", flags.n, "Max target dimension / matrix order");
    app.add_option("--degree", flags.degree, "Max coefficient degree");
    app.add_option("--grid", flags.grid, "Samples per trial");
    app.add_option("--tol", flags.tol, "Violation tolerance");
    app.add_option("--threads", flags.threads,
                   "Worker threads (0 = hardware concurrency)");
    app.add_option("--out", flags.out,
                   "Report sink: file path, or directory with 'all'");
    app.add_option("--format", flags.format, "Report format: jsonl or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::vector<std::string> names = split_names(schwarz_suite_names());
    if (list) {
        for (const auto& n : names) std::cout << n << "\n";
        return 0;
    }
    if (suite.empty()) {
        std::cerr << "error: missing suite argument (try --list, or 'all')\n";
        return 2;
    }

    std::vector<std::string> to_run;
    if (suite == "all") {
        to_run = names;
    } else {
        to_run.push_back(suite);
    }

    bool all_ok = true;
    for (const auto& name : to_run) {
        std::string out_override;
        if (suite == "all" && !flags.out.empty()) {
            std::filesystem::path dir(flags.out);
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) {
                std::cerr << "error: cannot create '" << flags.out
                          << "': " << ec.message() << "\n";
                return 2;
            }
            std::string ext = (flags.format == "csv") ? ".csv" : ".jsonl";
            out_override = (dir / (name + ext)).string();
        }
        bool ok = false;
        int code = run_one_suite(name, flags, out_override, &ok);
        if (code == 2) return 2;
        if (code != 0 || !ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
