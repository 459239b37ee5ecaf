// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "schwarzlab.h"

TEST_CASE("version and suite names") {
    CHECK(std::string(schwarz_version()) == "0.1.0");
    std::string names(schwarz_suite_names());
    CHECK(names.find("main") != std::string::npos);
    CHECK(names.find("metrics") != std::string::npos);
}

TEST_CASE("disk pseudodistance") {
    double m = 0.0;
    CHECK(schwarz_mobius_disk(0.5, 0.0, 0.0, 0.0, &m) == SCHWARZ_OK);
    CHECK(m == 0.5);

    CHECK(schwarz_mobius_disk(1.5, 0.0, 0.0, 0.0, &m) ==
          SCHWARZ_ERR_OUTSIDE_DOMAIN);
    CHECK(std::strlen(schwarz_last_error()) > 0);
    CHECK(schwarz_mobius_disk(0.5, 0.0, 0.0, 0.0, nullptr) ==
          SCHWARZ_ERR_INVALID_ARGUMENT);

    double c = 0.0;
    CHECK(schwarz_caratheodory_from_mobius(0.5, &c) == SCHWARZ_OK);
    CHECK(c == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
}

TEST_CASE("hausdorff over flattened points") {
    double a[4] = {0.3, 0.0, -0.3, 0.0};
    double b[2] = {0.0, 0.0};
    double d = 0.0;
    CHECK(schwarz_hausdorff_mobius(a, 2, b, 1, &d) == SCHWARZ_OK);
    CHECK(d == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("symmetrize, roots, gauge round trip") {
    double pts[4] = {0.5, 0.0, -0.5, 0.0};
    double sigma[4] = {0.0, 0.0, 0.0, 0.0};
    CHECK(schwarz_symmetrize(pts, 2, sigma) == SCHWARZ_OK);
    CHECK(sigma[0] == 0.0);
    CHECK(sigma[2] == -0.25);

    double roots[4] = {0.0, 0.0, 0.0, 0.0};
    int mults[2] = {0, 0};
    size_t distinct = 0;
    CHECK(schwarz_gn_roots(sigma, 2, roots, mults, &distinct) == SCHWARZ_OK);
    REQUIRE(distinct == 2);
    CHECK(roots[0] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(roots[2] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(mults[0] == 1);

    double g = 0.0;
    CHECK(schwarz_gn_minkowski(sigma, 2, &g) == SCHWARZ_OK);
    CHECK(g == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("fiber distances through the flat interface") {
    double lift[4] = {0.0, 0.0, 0.0, 0.0};
    CHECK(schwarz_nth_root_map(0.25, 0.0, 2, lift) == SCHWARZ_OK);
    CHECK(lift[2] == -0.25);

    double origin[4] = {0.0, 0.0, 0.0, 0.0};
    double h = 0.0;
    CHECK(schwarz_fiber_distance_h(lift, origin, 2, &h) == SCHWARZ_OK);
    CHECK(h == doctest::Approx(0.5).epsilon(1e-9));

    double p = 0.0;
    CHECK(schwarz_h1(lift, origin, 2, 0, &p) == SCHWARZ_OK);
    CHECK(p == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(schwarz_h1(lift, origin, 2, 1, &p) == SCHWARZ_OK);
    CHECK(p == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("matrix operations") {
    // diag(0.5, -0.5) flattened row-major as (re, im) pairs.
    double a[8] = {0.5, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 0.0};
    double r = 0.0;
    CHECK(schwarz_spectral_radius(a, 2, &r) == SCHWARZ_OK);
    CHECK(r == doctest::Approx(0.5).epsilon(1e-10));

    double re = 0.0, im = 0.0;
    CHECK(schwarz_minimal_blaschke_eval(a, 2, 0.0, 0.0, &re, &im) == SCHWARZ_OK);
    CHECK(re == doctest::Approx(-0.25).epsilon(1e-10));
    CHECK(im == doctest::Approx(0.0));

    double zero[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    double out[8];
    CHECK(schwarz_tilde_map(a, zero, 2, out) == SCHWARZ_OK);
    CHECK(out[0] == doctest::Approx(-0.25).epsilon(1e-10));
    CHECK(out[6] == doctest::Approx(-0.25).epsilon(1e-10));
    CHECK(out[2] == doctest::Approx(0.0));
}

TEST_CASE("map handles") {
    schwarz_map* m = nullptr;
    REQUIRE(schwarz_map_generate(42, "poly-coords", 3, 4, 1, &m) == SCHWARZ_OK);
    REQUIRE(m != nullptr);

    size_t dim = 0;
    CHECK(schwarz_map_dimension(m, &dim) == SCHWARZ_OK);
    CHECK(dim == 3);

    std::vector<double> value(2 * dim);
    CHECK(schwarz_map_eval(m, 0.0, 0.0, value.data()) == SCHWARZ_OK);
    for (double v : value) CHECK(v == 0.0);  // origin-fixing map

    double g = 0.0;
    CHECK(schwarz_map_target_gauge(m, 0.3, 0.2, &g) == SCHWARZ_OK);
    CHECK(g < 1.0);

    int ok = 0;
    CHECK(schwarz_map_audit(m, 512, 7, &ok) == SCHWARZ_OK);
    CHECK(ok == 1);

    CHECK(schwarz_map_eval(m, 2.0, 0.0, value.data()) ==
          SCHWARZ_ERR_OUTSIDE_DOMAIN);
    schwarz_map_free(m);

    schwarz_map* bad = nullptr;
    CHECK(schwarz_map_generate(42, "no-such-kind", 2, 2, 0, &bad) ==
          SCHWARZ_ERR_INVALID_ARGUMENT);
    CHECK(bad == nullptr);

    schwarz_map* root = nullptr;
    REQUIRE(schwarz_map_nth_root(2, &root) == SCHWARZ_OK);
    double rv[4];
    CHECK(schwarz_map_eval(root, 0.25, 0.0, rv) == SCHWARZ_OK);
    CHECK(rv[2] == -0.25);
    schwarz_map_free(root);
}

TEST_CASE("suite runner handles") {
    schwarz_suite_config* cfg = nullptr;
    REQUIRE(schwarz_suite_config_new(&cfg) == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "suite", "metrics") == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "trials", "4") == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "bogus", "1") ==
          SCHWARZ_ERR_INVALID_ARGUMENT);

    schwarz_report* rep = nullptr;
    REQUIRE(schwarz_run_suite(cfg, &rep) == SCHWARZ_OK);
    schwarz_suite_config_free(cfg);

    int trials = 0, passes = 0, failures = 0, aborts = 0;
    CHECK(schwarz_report_counts(rep, &trials, &passes, &failures, &aborts) ==
          SCHWARZ_OK);
    CHECK(trials == 4);
    CHECK(passes == 4);
    CHECK(failures == 0);
    CHECK(aborts == 0);

    int ok = 0;
    CHECK(schwarz_report_ok(rep, &ok) == SCHWARZ_OK);
    CHECK(ok == 1);

    const char* summary = nullptr;
    CHECK(schwarz_report_summary(rep, &summary) == SCHWARZ_OK);
    REQUIRE(summary != nullptr);
    CHECK(std::string(summary).find("\"passes\":4") != std::string::npos);
    schwarz_report_free(rep);

    // Running without a suite key is a configuration error.
    schwarz_suite_config* empty = nullptr;
    REQUIRE(schwarz_suite_config_new(&empty) == SCHWARZ_OK);
    schwarz_report* none = nullptr;
    CHECK(schwarz_run_suite(empty, &none) == SCHWARZ_ERR_INVALID_ARGUMENT);
    schwarz_suite_config_free(empty);
}

TEST_CASE("report writes to the configured sink") {
    const char* path = "capi_report_tmp.jsonl";
    schwarz_suite_config* cfg = nullptr;
    REQUIRE(schwarz_suite_config_new(&cfg) == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "suite", "equality") == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "trials", "2") == SCHWARZ_OK);
    CHECK(schwarz_suite_config_set(cfg, "out", path) == SCHWARZ_OK);
    schwarz_report* rep = nullptr;
    REQUIRE(schwarz_run_suite(cfg, &rep) == SCHWARZ_OK);
    schwarz_suite_config_free(cfg);
    CHECK(schwarz_report_write(rep) == SCHWARZ_OK);
    schwarz_report_free(rep);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    int count = 0;
    while (std::getline(in, line)) ++count;
    CHECK(count == 3);  // 2 records + summary
    in.close();
    std::remove(path);
}
