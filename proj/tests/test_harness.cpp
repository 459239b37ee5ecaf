// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "schwarz/harness.hpp"

using namespace schwarz::harness;

namespace {

std::string strip_wall(std::string s) {
    static const std::regex re(R"rx(,"(wall_ms|elapsed_ms)":[^,}]*\})rx");
    return std::regex_replace(s, re, "}");
}

SuiteConfig small(Suite s, int trials, int threads = 1) {
    SuiteConfig cfg;
    cfg.suite = s;
    cfg.trials = trials;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

TEST_CASE("names round trip") {
    for (const auto& name : all_suite_names())
        CHECK(suite_name(suite_from_name(name)) == name);
    CHECK(all_suite_names().size() == 6);
    CHECK_THROWS_AS((void)suite_from_name("bogus"), schwarz::Error);
    CHECK(format_name(ReportFormat::jsonl) == "jsonl");
    CHECK(format_from_name("csv") == ReportFormat::csv);
    CHECK_THROWS_AS((void)format_from_name("xml"), schwarz::Error);
}

TEST_CASE("defaults are filled per suite") {
    SuiteConfig cfg;
    cfg.suite = Suite::main_suite;
    SuiteConfig r = resolve_config(cfg);
    CHECK(r.seed == 20260815ULL);
    CHECK(r.trials == 200);
    CHECK(r.n == 4);
    CHECK(r.degree == 5);
    CHECK(r.grid == 10);
    CHECK(r.tol == 1e-7);

    cfg.suite = Suite::equality;
    r = resolve_config(cfg);
    CHECK(r.trials == 60);
    CHECK(r.grid == 64);
    CHECK(r.tol == 1e-8);

    cfg.n = 99;
    CHECK_THROWS_AS((void)resolve_config(cfg), schwarz::Error);
}

TEST_CASE("key-value configuration") {
    std::map<std::string, std::string> kv{
        {"suite", "spectral"}, {"seed", "7"},      {"trials", "9"},
        {"n", "2"},            {"degree", "2"},    {"grid", "3"},
        {"tol", "1e-5"},       {"threads", "2"},   {"format", "csv"},
        {"out", "x.csv"},
    };
    SuiteConfig cfg = apply_config_kv(SuiteConfig{}, kv);
    CHECK(cfg.suite == Suite::spectral);
    CHECK(cfg.seed == 7);
    CHECK(cfg.seed_set);
    CHECK(cfg.trials == 9);
    CHECK(cfg.n == 2);
    CHECK(cfg.degree == 2);
    CHECK(cfg.grid == 3);
    CHECK(cfg.tol == 1e-5);
    CHECK(cfg.threads == 2);
    CHECK(cfg.format == ReportFormat::csv);
    CHECK(cfg.out == "x.csv");

    CHECK_THROWS_AS(
        (void)apply_config_kv(SuiteConfig{}, {{"nonsense", "1"}}),
        schwarz::Error);
    // Range validation happens at resolve time, not while parsing keys.
    SuiteConfig neg = apply_config_kv(SuiteConfig{}, {{"trials", "-4"}});
    CHECK_THROWS_AS((void)resolve_config(neg), schwarz::Error);
    CHECK_THROWS_AS((void)apply_config_kv(SuiteConfig{}, {{"tol", "soft"}}),
                    schwarz::Error);
}

TEST_CASE("every suite runs clean at reduced size") {
    for (const auto& name : all_suite_names()) {
        SuiteConfig cfg = small(suite_from_name(name), 6);
        SuiteReport rep = run_suite(cfg);
        INFO("suite ", name);
        CHECK(rep.ok());
        CHECK(rep.failures == 0);
        CHECK(rep.aborts == 0);
        CHECK(rep.passes + rep.failures + rep.aborts == cfg.trials);
        CHECK(static_cast<int>(rep.records.size()) == cfg.trials);
        CHECK(rep.min_margin >= -rep.config.tol);
        for (int i = 0; i < cfg.trials; ++i) CHECK(rep.records[i].trial == i);
    }
}

TEST_CASE("reports are identical across thread counts") {
    SuiteReport a = run_suite(small(Suite::main_suite, 12, 1));
    SuiteReport b = run_suite(small(Suite::main_suite, 12, 4));
    std::ostringstream sa, sb;
    write_report(a, sa);
    write_report(b, sb);
    CHECK(strip_wall(sa.str()) == strip_wall(sb.str()));
    CHECK(sa.str() != "");
}

TEST_CASE("jsonl report parses line by line with stable keys") {
    SuiteReport rep = run_suite(small(Suite::metrics, 3));
    std::ostringstream os;
    write_report(rep, os);
    std::istringstream is(os.str());
    std::string line;
    std::vector<nlohmann::json> lines;
    while (std::getline(is, line)) lines.push_back(nlohmann::json::parse(line));
    REQUIRE(lines.size() == 4);  // 3 records + summary
    for (int i = 0; i < 3; ++i) {
        CHECK(lines[i]["suite"] == "metrics");
        CHECK(lines[i]["trial"] == i);
        CHECK(lines[i]["pass"] == true);
        CHECK(lines[i].contains("wall_ms"));
    }
    const auto& summary = lines[3];
    CHECK(summary["trials"] == 3);
    CHECK(summary["passes"] == 3);
    CHECK(summary["violations"] == 0);
    CHECK_FALSE(summary.contains("threads"));  // parallelism must not leak
    CHECK_FALSE(summary.contains("out"));
}

TEST_CASE("csv report has a header and a trailing summary comment") {
    SuiteConfig cfg = small(Suite::metrics, 2);
    cfg.format = ReportFormat::csv;
    SuiteReport rep = run_suite(cfg);
    std::ostringstream os;
    write_report(rep, os);
    std::istringstream is(os.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);  // header + 2 records + summary
    CHECK(lines[0].rfind("suite,trial,kind,map_seed", 0) == 0);
    CHECK(lines[3].rfind("# {", 0) == 0);
    nlohmann::json summary = nlohmann::json::parse(lines[3].substr(2));
    CHECK(summary["trials"] == 2);
}

TEST_CASE("summary json matches the report") {
    SuiteReport rep = run_suite(small(Suite::equality, 4));
    nlohmann::json s = nlohmann::json::parse(summary_json(rep));
    CHECK(s["suite"] == "equality");
    CHECK(s["trials"] == 4);
    CHECK(s["failures"] == 0);
}
