// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schwarz/types.hpp"

namespace schwarz::harness {

enum class Suite { main_suite, quasibalanced, nthroot, equality, spectral, metrics };
enum class ReportFormat { jsonl, csv };

/// Zero / empty fields mean "use the per-suite default"; resolve_config fills
/// them in and validates the result.
struct SuiteConfig {
    Suite suite = Suite::main_suite;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 0;
    int n = 0;
    int degree = 0;
    int grid = 0;
    double tol = 0.0;
    int threads = 1;  // 0 = hardware concurrency
    std::string out;  // empty = stdout
    ReportFormat format = ReportFormat::jsonl;
};

struct TrialRecord {
    int trial = 0;
    std::string map_kind;
    std::uint64_t map_seed = 0;
    int degree = 0;
    int n = 0;
    std::vector<Complex> sample;  // the points realizing the worst margin
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool aborted = false;
    std::string error;  // empty unless aborted
    double wall_ms = 0.0;
};

struct SuiteReport {
    SuiteConfig config;  // resolved
    std::vector<TrialRecord> records;
    int passes = 0;
    int failures = 0;
    int aborts = 0;
    int violations = 0;  // margin < -tol among completed trials
    double min_margin = 0.0;   // over completed trials; 0 when none completed
    double mean_margin = 0.0;
    double elapsed_ms = 0.0;

    bool ok() const { return failures == 0 && aborts == 0; }
};

std::string_view suite_name(Suite s);
Suite suite_from_name(std::string_view name);
const std::vector<std::string>& all_suite_names();

std::string_view format_name(ReportFormat f);
ReportFormat format_from_name(std::string_view name);

/// Fill per-suite defaults for unset fields and validate the invariants
/// (trials >= 1, 1 <= n <= 8, tol > 0, ...).
SuiteConfig resolve_config(const SuiteConfig& cfg);

/// Apply flat key=value settings (keys: suite, seed, trials, n, degree,
/// grid, tol, threads, out, format) on top of a base config.
SuiteConfig apply_config_kv(const SuiteConfig& base,
                            const std::map<std::string, std::string>& kv);

/// Run the configured suite.  Trials execute independently (optionally in
/// parallel) with per-trial seeds mix(seed, trial-index); records come back
/// sorted by trial index and are byte-stable across thread counts.
SuiteReport run_suite(const SuiteConfig& cfg);

SuiteReport run_main_suite(SuiteConfig cfg);
SuiteReport run_quasibalanced_suite(SuiteConfig cfg);
SuiteReport run_nthroot_suite(SuiteConfig cfg);
SuiteReport run_equality_suite(SuiteConfig cfg);
SuiteReport run_spectral_suite(SuiteConfig cfg);
SuiteReport run_metrics_suite(SuiteConfig cfg);

/// One record per line in the configured format, then the summary as a
/// final json object (prefixed with "# " in CSV).  Keys appear in fixed
/// order; wall-time fields come last so consumers can strip them.
void write_report(const SuiteReport& report, std::ostream& os);

/// Serialize to report.config.out ("" or "-" = stdout).
void write_report_to_configured_sink(const SuiteReport& report);

std::string summary_json(const SuiteReport& report);

}  // namespace schwarz::harness
