// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarzlab.h"

#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "schwarz/harness.hpp"
#include "schwarz/holomaps.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/mobius.hpp"
#include "schwarz/spectralball.hpp"
#include "schwarz/sympoly.hpp"
#include "schwarz/types.hpp"

struct schwarz_map {
    schwarz::HoloMap map;
};

struct schwarz_suite_config {
    std::map<std::string, std::string> kv;
};

struct schwarz_report {
    schwarz::harness::SuiteReport report;
    std::string summary;
};

namespace {

using schwarz::Complex;

thread_local std::string g_last_error;

schwarz_status status_of(schwarz::ErrorCode c) {
    using schwarz::ErrorCode;
    switch (c) {
        case ErrorCode::invalid_argument: return SCHWARZ_ERR_INVALID_ARGUMENT;
        case ErrorCode::outside_domain: return SCHWARZ_ERR_OUTSIDE_DOMAIN;
        case ErrorCode::no_convergence: return SCHWARZ_ERR_NO_CONVERGENCE;
        case ErrorCode::origin_not_fixed: return SCHWARZ_ERR_ORIGIN_NOT_FIXED;
        case ErrorCode::singular_factor: return SCHWARZ_ERR_SINGULAR_FACTOR;
        case ErrorCode::unbounded_gauge: return SCHWARZ_ERR_UNBOUNDED_GAUGE;
        case ErrorCode::monotonicity_violation: return SCHWARZ_ERR_MONOTONICITY;
        case ErrorCode::degenerate_map: return SCHWARZ_ERR_DEGENERATE_MAP;
        case ErrorCode::io_failure: return SCHWARZ_ERR_IO;
        case ErrorCode::internal: return SCHWARZ_ERR_INTERNAL;
    }
    return SCHWARZ_ERR_INTERNAL;
}

template <class F>
schwarz_status guarded(F&& body) {
    try {
        body();
        return SCHWARZ_OK;
    } catch (const schwarz::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCHWARZ_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return SCHWARZ_ERR_INTERNAL;
    }
}

schwarz_status null_arg(const char* what) {
    g_last_error = std::string(what) + " must not be null";
    return SCHWARZ_ERR_INVALID_ARGUMENT;
}

std::vector<Complex> unflatten(const double* d, size_t count) {
    std::vector<Complex> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = Complex(d[2 * i], d[2 * i + 1]);
    return v;
}

void flatten(std::span<const Complex> v, double* out) {
    for (size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
}

}  // namespace

extern "C" {

const char* schwarz_last_error(void) { return g_last_error.c_str(); }

const char* schwarz_version(void) { return "0.1.0"; }

const char* schwarz_suite_names(void) {
    static const std::string names = [] {
        std::string s;
        for (const auto& n : schwarz::harness::all_suite_names()) {
            if (!s.empty()) s += ' ';
            s += n;
        }
        return s;
    }();
    return names.c_str();
}

schwarz_status schwarz_mobius_disk(double z_re, double z_im, double w_re,
                                   double w_im, double* out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = schwarz::mobius_disk(Complex(z_re, z_im), Complex(w_re, w_im));
    });
}

schwarz_status schwarz_caratheodory_from_mobius(double m, double* out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = schwarz::caratheodory_from_mobius(m); });
}

schwarz_status schwarz_hausdorff_mobius(const double* a, size_t a_count,
                                        const double* b, size_t b_count,
                                        double* out) {
    if (!a) return null_arg("a");
    if (!b) return null_arg("b");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::vector<Complex> va = unflatten(a, a_count);
        std::vector<Complex> vb = unflatten(b, b_count);
        *out = schwarz::hausdorff_mobius(va, vb);
    });
}

schwarz_status schwarz_symmetrize(const double* pts, size_t count,
                                  double* sigma_out) {
    if (!pts) return null_arg("pts");
    if (!sigma_out) return null_arg("sigma_out");
    return guarded([&] {
        std::vector<Complex> v = unflatten(pts, count);
        schwarz::GnPoint p = schwarz::symmetrize(v);
        flatten(p.sigma, sigma_out);
    });
}

schwarz_status schwarz_gn_roots(const double* sigma, size_t n,
                                double* roots_out, int* mults_out,
                                size_t* distinct_out) {
    if (!sigma) return null_arg("sigma");
    if (!roots_out) return null_arg("roots_out");
    if (!mults_out) return null_arg("mults_out");
    if (!distinct_out) return null_arg("distinct_out");
    return guarded([&] {
        schwarz::GnPoint p;
        p.sigma = unflatten(sigma, n);
        schwarz::RootSolveReport r = schwarz::gn_roots(p);
        const auto& entries = r.roots.entries;
        *distinct_out = entries.size();
        for (size_t i = 0; i < entries.size(); ++i) {
            roots_out[2 * i] = entries[i].point.real();
            roots_out[2 * i + 1] = entries[i].point.imag();
            mults_out[i] = entries[i].multiplicity;
        }
    });
}

schwarz_status schwarz_gn_minkowski(const double* sigma, size_t n, double* out) {
    if (!sigma) return null_arg("sigma");
    if (!out) return null_arg("out");
    return guarded([&] {
        schwarz::GnPoint p;
        p.sigma = unflatten(sigma, n);
        *out = schwarz::gn_minkowski(p);
    });
}

schwarz_status schwarz_nth_root_map(double x_re, double x_im, size_t n,
                                    double* sigma_out) {
    if (!sigma_out) return null_arg("sigma_out");
    return guarded([&] {
        schwarz::GnPoint p = schwarz::nth_root_map(Complex(x_re, x_im),
                                                   static_cast<int>(n));
        flatten(p.sigma, sigma_out);
    });
}

schwarz_status schwarz_fiber_distance_h(const double* sigma_a,
                                        const double* sigma_b, size_t n,
                                        double* out) {
    if (!sigma_a) return null_arg("sigma_a");
    if (!sigma_b) return null_arg("sigma_b");
    if (!out) return null_arg("out");
    return guarded([&] {
        schwarz::GnPoint a, b;
        a.sigma = unflatten(sigma_a, n);
        b.sigma = unflatten(sigma_b, n);
        *out = schwarz::fiber_distance_h(a, b);
    });
}

schwarz_status schwarz_h1(const double* sigma_a, const double* sigma_b,
                          size_t n, int collapse_multiplicities, double* out) {
    if (!sigma_a) return null_arg("sigma_a");
    if (!sigma_b) return null_arg("sigma_b");
    if (!out) return null_arg("out");
    return guarded([&] {
        schwarz::GnPoint a, b;
        a.sigma = unflatten(sigma_a, n);
        b.sigma = unflatten(sigma_b, n);
        *out = schwarz::h1(a, b,
                           collapse_multiplicities
                               ? schwarz::FiberWeighting::collapsed
                               : schwarz::FiberWeighting::multiplicity);
    });
}

schwarz_status schwarz_spectral_radius(const double* flat, size_t n,
                                       double* out) {
    if (!flat) return null_arg("flat");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::vector<Complex> v = unflatten(flat, n * n);
        *out = schwarz::spectral_radius(schwarz::SquareMatrix::from_flat(v));
    });
}

schwarz_status schwarz_minimal_blaschke_eval(const double* a, size_t n,
                                             double t_re, double t_im,
                                             double* out_re, double* out_im) {
    if (!a) return null_arg("a");
    if (!out_re) return null_arg("out_re");
    if (!out_im) return null_arg("out_im");
    return guarded([&] {
        std::vector<Complex> v = unflatten(a, n * n);
        Complex r = schwarz::minimal_blaschke_eval(
            schwarz::SquareMatrix::from_flat(v), Complex(t_re, t_im));
        *out_re = r.real();
        *out_im = r.imag();
    });
}

schwarz_status schwarz_tilde_map(const double* a, const double* b, size_t n,
                                 double* out_flat) {
    if (!a) return null_arg("a");
    if (!b) return null_arg("b");
    if (!out_flat) return null_arg("out_flat");
    return guarded([&] {
        std::vector<Complex> va = unflatten(a, n * n);
        std::vector<Complex> vb = unflatten(b, n * n);
        schwarz::SquareMatrix r =
            schwarz::tilde_map(schwarz::SquareMatrix::from_flat(va),
                               schwarz::SquareMatrix::from_flat(vb));
        flatten(r.data(), out_flat);
    });
}

schwarz_status schwarz_map_generate(uint64_t seed, const char* kind, int n,
                                    int degree, int fix_origin,
                                    schwarz_map** out) {
    if (!kind) return null_arg("kind");
    if (!out) return null_arg("out");
    return guarded([&] {
        schwarz::MapKind k;
        std::string ks(kind);
        if (ks == "poly-coords")
            k = schwarz::MapKind::poly_coords;
        else if (ks == "lifted-blaschke")
            k = schwarz::MapKind::lifted_blaschke;
        else if (ks == "matrix-poly")
            k = schwarz::MapKind::matrix_poly;
        else
            throw schwarz::Error(schwarz::ErrorCode::invalid_argument,
                                 "unknown map kind '" + ks + "'");
        auto handle = new schwarz_map{
            schwarz::random_map(seed, k, n, degree, fix_origin != 0)};
        *out = handle;
    });
}

schwarz_status schwarz_map_nth_root(int n, schwarz_map** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new schwarz_map{schwarz::HoloMap::nth_root(n)}; });
}

schwarz_status schwarz_map_dimension(const schwarz_map* m, size_t* out) {
    if (!m) return null_arg("map");
    if (!out) return null_arg("out");
    return guarded([&] { *out = static_cast<size_t>(m->map.dimension()); });
}

schwarz_status schwarz_map_eval(const schwarz_map* m, double x_re, double x_im,
                                double* value_out) {
    if (!m) return null_arg("map");
    if (!value_out) return null_arg("value_out");
    return guarded([&] {
        std::vector<Complex> v = m->map.eval(Complex(x_re, x_im));
        flatten(v, value_out);
    });
}

schwarz_status schwarz_map_target_gauge(const schwarz_map* m, double x_re,
                                        double x_im, double* out) {
    if (!m) return null_arg("map");
    if (!out) return null_arg("out");
    return guarded([&] { *out = m->map.target_gauge(Complex(x_re, x_im)); });
}

schwarz_status schwarz_map_audit(const schwarz_map* m, int points,
                                 uint64_t audit_seed, int* ok_out) {
    if (!m) return null_arg("map");
    if (!ok_out) return null_arg("ok_out");
    return guarded([&] {
        *ok_out = schwarz::audit_membership(m->map, points, audit_seed) ? 1 : 0;
    });
}

void schwarz_map_free(schwarz_map* m) { delete m; }

schwarz_status schwarz_suite_config_new(schwarz_suite_config** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new schwarz_suite_config{}; });
}

schwarz_status schwarz_suite_config_set(schwarz_suite_config* cfg,
                                        const char* key, const char* value) {
    if (!cfg) return null_arg("cfg");
    if (!key) return null_arg("key");
    if (!value) return null_arg("value");
    return guarded([&] {
        // Validate eagerly so mistyped keys fail at the call site.
        std::map<std::string, std::string> probe{{key, value}};
        schwarz::harness::apply_config_kv(schwarz::harness::SuiteConfig{}, probe);
        cfg->kv[key] = value;
    });
}

void schwarz_suite_config_free(schwarz_suite_config* cfg) { delete cfg; }

schwarz_status schwarz_run_suite(const schwarz_suite_config* cfg,
                                 schwarz_report** out) {
    if (!cfg) return null_arg("cfg");
    if (!out) return null_arg("out");
    return guarded([&] {
        if (cfg->kv.find("suite") == cfg->kv.end())
            throw schwarz::Error(schwarz::ErrorCode::invalid_argument,
                                 "config must set the 'suite' key");
        schwarz::harness::SuiteConfig sc = schwarz::harness::apply_config_kv(
            schwarz::harness::SuiteConfig{}, cfg->kv);
        auto rep = new schwarz_report{};
        rep->report = schwarz::harness::run_suite(sc);
        rep->summary = schwarz::harness::summary_json(rep->report);
        *out = rep;
    });
}

schwarz_status schwarz_report_summary(const schwarz_report* rep,
                                      const char** json_out) {
    if (!rep) return null_arg("report");
    if (!json_out) return null_arg("json_out");
    *json_out = rep->summary.c_str();
    return SCHWARZ_OK;
}

schwarz_status schwarz_report_counts(const schwarz_report* rep, int* trials,
                                     int* passes, int* failures, int* aborts) {
    if (!rep) return null_arg("report");
    if (trials) *trials = rep->report.config.trials;
    if (passes) *passes = rep->report.passes;
    if (failures) *failures = rep->report.failures;
    if (aborts) *aborts = rep->report.aborts;
    return SCHWARZ_OK;
}

schwarz_status schwarz_report_ok(const schwarz_report* rep, int* ok_out) {
    if (!rep) return null_arg("report");
    if (!ok_out) return null_arg("ok_out");
    *ok_out = rep->report.ok() ? 1 : 0;
    return SCHWARZ_OK;
}

schwarz_status schwarz_report_write(const schwarz_report* rep) {
    if (!rep) return null_arg("report");
    return guarded(
        [&] { schwarz::harness::write_report_to_configured_sink(rep->report); });
}

void schwarz_report_free(schwarz_report* rep) { delete rep; }

}  // extern "C"
