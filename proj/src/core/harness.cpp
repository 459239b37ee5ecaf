// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

#include <json.hpp>

#include "schwarz/holomaps.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/mobius.hpp"
#include "schwarz/quasibalanced.hpp"
#include "schwarz/rng.hpp"
#include "schwarz/spectralball.hpp"
#include "schwarz/sympoly.hpp"

namespace schwarz::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kAuditSalt = 0x617564697453414cULL;
constexpr std::uint64_t kDefaultSeed = 20260815ULL;
constexpr double kGoldenAngle = 2.3999632297286533222;
constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex automorphism(Complex a, Complex phase, Complex w) {
    return phase * ((w - a) / (1.0 - std::conj(a) * w));
}

/// Collects per-check margins of a trial and remembers the worst one's
/// witness data.
struct Tracker {
    double margin = std::numeric_limits<double>::infinity();
    double lhs = 0.0;
    double rhs = 0.0;
    std::vector<Complex> sample;
    bool any = false;

    void consider(double m, double l, double r, std::vector<Complex> pts) {
        if (!any || m < margin) {
            margin = m;
            lhs = l;
            rhs = r;
            sample = std::move(pts);
        }
        any = true;
    }

    /// Normalized deviation check: passes (margin >= -tol) exactly when
    /// dev <= allowance.
    void consider_dev(double tol, double dev, double allowance, double lhs_v,
                      double rhs_v, std::vector<Complex> pts) {
        consider(-tol * dev / allowance, lhs_v, rhs_v, std::move(pts));
    }

    void finish(const SuiteConfig& cfg, TrialRecord& rec) const {
        rec.margin = any ? margin : 0.0;
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.sample = sample;
        rec.pass = rec.margin >= -cfg.tol;
    }
};

void require_map_audit(const HoloMap& f) {
    if (!audit_membership(f, 4096, Rng::mix(f.seed, kAuditSalt)))
        throw Error(ErrorCode::outside_domain,
                    "membership audit failed for a generated map");
}

// ---------------------------------------------------------------- main suite

void main_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    int n_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.n)));
    int d_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.degree)));
    MapKind kind = (rng.next_u64() & 1) ? MapKind::lifted_blaschke
                                        : MapKind::poly_coords;
    std::uint64_t mseed = rng.next_u64();
    rec.map_kind = map_kind_name(kind);
    rec.map_seed = mseed;
    rec.n = n_t;
    rec.degree = d_t;

    HoloMap f = random_map(mseed, kind, n_t, d_t, false);
    require_map_audit(f);

    Tracker tk;
    for (int p = 0; p < cfg.grid; ++p) {
        Complex x = rng.next_in_disk(0.95);
        Complex x0 = rng.next_in_disk(0.95);
        GnPoint z{f.eval(x)};
        GnPoint z0{f.eval(x0)};
        double m = mobius_disk(x, x0);
        double h = fiber_distance_h(z, z0);
        double hn = detail::ipow(h, n_t);
        double h1v = h1(z, z0);
        // Stated bound, proof-level strengthening, and the chain between them.
        tk.consider(m - hn, hn, m, {x, x0});
        tk.consider(m - h1v, h1v, m, {x, x0});
        tk.consider(h1v - hn, hn, h1v, {x, x0});
    }
    tk.finish(cfg, rec);
}

// ------------------------------------------------------------ equality suite

void equality_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    int span = std::max(1, cfg.n - 1);
    int n_t = 2 + t % span;
    Complex a = rng.next_in_disk(0.6);
    Complex phase = rng.next_phase();
    rec.map_kind = "nthroot-aut";
    rec.map_seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(t));
    rec.n = n_t;
    rec.degree = 1;

    Complex g0 = automorphism(a, phase, 0.0);
    std::vector<Complex> base{g0};

    Tracker tk;
    std::vector<Complex> fiber(static_cast<size_t>(n_t));
    for (int j = 0; j < cfg.grid; ++j) {
        Complex x = 0.0;
        if (j > 0 && cfg.grid > 1) {
            double r = 0.93 * std::sqrt(static_cast<double>(j) /
                                        static_cast<double>(cfg.grid - 1));
            x = std::polar(r, kGoldenAngle * j);
        }
        // Fiber through the lift: automorphism applied to each n-th root.
        // Root extraction through the polynomial solver would add
        // eps^(1/n) noise, far above this suite's tolerance.
        double rho = std::pow(std::abs(x), 1.0 / static_cast<double>(n_t));
        double theta = std::arg(x);
        for (int k = 0; k < n_t; ++k) {
            Complex root = std::polar(rho, (theta + kTwoPi * k) / n_t);
            fiber[static_cast<size_t>(k)] = automorphism(a, phase, root);
        }
        double h = hausdorff_mobius(fiber, base);
        double hn = detail::ipow(h, n_t);
        double m = mobius_disk(x, 0.0);
        double dev = std::abs(hn - m);
        tk.consider(-dev, hn, m, {x});
    }
    tk.finish(cfg, rec);
}

// ------------------------------------------------------- quasibalanced suite

void quasibalanced_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    int n_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.n)));
    int d_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.degree)));
    MapKind kind = (rng.next_u64() & 1) ? MapKind::lifted_blaschke
                                        : MapKind::poly_coords;
    std::uint64_t mseed = rng.next_u64();
    rec.map_kind = map_kind_name(kind);
    rec.map_seed = mseed;
    rec.n = n_t;
    rec.degree = d_t;

    HoloMap f = random_map(mseed, kind, n_t, d_t, true);
    require_map_audit(f);

    WeightedDomain d1 = WeightedDomain::disk();
    WeightedDomain d2 = WeightedDomain::symmetrized_polydisk(n_t);
    MapFn fn = [&f](std::span<const Complex> z) { return f.eval(z[0]); };

    Tracker tk;
    for (int j = 0; j < cfg.grid; ++j) {
        Complex z = rng.next_in_disk(0.95);
        std::vector<Complex> zv{z};
        tk.consider(schwarz_margin(fn, d1, d2, zv), 0.0, 0.0, {z});
        tk.consider(nth_root_bound_margin(fn, z), 0.0, 0.0, {z});
    }

    // Sandwich consistency on a rotating built-in domain.
    WeightedDomain dom = (t % 3 == 0)   ? WeightedDomain::polydisk(n_t)
                         : (t % 3 == 1) ? WeightedDomain::euclidean_ball(n_t)
                                        : WeightedDomain::symmetrized_polydisk(n_t);
    for (int s = 0; s < 4; ++s) {
        std::vector<Complex> raw(static_cast<size_t>(dom.dimension()));
        for (auto& v : raw) v = rng.next_in_disk();
        double g0 = dom.known_gauge(raw);
        if (!(g0 > 0.0)) continue;
        double target = 0.1 + 0.8 * rng.next_unit();
        std::vector<Complex> w =
            weighted_action(Complex(target / g0, 0.0), raw, dom.weights);
        GaugeBounds gb = extremal_sandwich(dom, w);
        int p = dom.highest_weight();
        if (gb.lower != detail::ipow(gb.upper, p) || gb.lower > gb.upper) {
            tk.consider(-1000.0 * cfg.tol, gb.lower, gb.upper,
                        {w[0]});  // structural identity must hold exactly
            continue;
        }
        double known = dom.known_gauge(w);
        tk.consider_dev(cfg.tol, std::abs(gb.upper - known), 1e-6, gb.upper,
                        known, {w[0]});
    }
    tk.finish(cfg, rec);
}

// ------------------------------------------------------------ nthroot suite

void nthroot_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    int n_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.n)));
    int d_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.degree)));
    MapKind kind = (rng.next_u64() & 1) ? MapKind::lifted_blaschke
                                        : MapKind::poly_coords;
    std::uint64_t mseed = rng.next_u64();
    rec.map_kind = map_kind_name(kind);
    rec.map_seed = mseed;
    rec.n = n_t;
    rec.degree = d_t;

    HoloMap f = random_map(mseed, kind, n_t, d_t, true);
    require_map_audit(f);
    HoloMap canon = HoloMap::nth_root(n_t);
    MapFn fn = [&f](std::span<const Complex> z) { return f.eval(z[0]); };
    MapFn canon_fn = [&canon](std::span<const Complex> z) {
        return canon.eval(z[0]);
    };

    Tracker tk;
    for (int j = 0; j < cfg.grid; ++j) {
        Complex z = rng.next_in_disk(0.95);
        tk.consider(nth_root_bound_margin(fn, z), 0.0, 0.0, {z});
        // The canonical root construction attains the bound.
        double eq = nth_root_bound_margin(canon_fn, z);
        tk.consider_dev(cfg.tol, std::abs(eq), 1e-8, eq, 0.0, {z});
    }
    tk.finish(cfg, rec);
}

// ------------------------------------------------------------ spectral suite

void spectral_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    int n_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.n)));
    int d_t = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(cfg.degree)));
    std::uint64_t mseed = rng.next_u64();
    rec.map_kind = map_kind_name(MapKind::matrix_poly);
    rec.map_seed = mseed;
    rec.n = n_t;
    rec.degree = d_t;

    HoloMap f = random_map(mseed, MapKind::matrix_poly, n_t, d_t, false);
    require_map_audit(f);

    auto eigengap = [](const SpectrumData& s) {
        double gap = std::numeric_limits<double>::infinity();
        const auto& e = s.eigenvalues.entries;
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                gap = std::min(gap, std::abs(e[i].point - e[j].point));
        return gap;
    };
    auto draw = [&](Complex& x, SquareMatrix& m, SpectrumData& s) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            x = rng.next_in_disk(0.95);
            m = f.eval_matrix(x);
            s = spectrum(m);
            if (eigengap(s) >= 0.05) return;
        }
        throw Error(ErrorCode::degenerate_map,
                    "eigengap resampling exhausted for this map");
    };

    Tracker tk;
    for (int j = 0; j < cfg.grid; ++j) {
        Complex z, w;
        SquareMatrix az(1), bw(1);
        SpectrumData sz, sw;
        draw(z, az, sz);
        draw(w, bw, sw);
        double m = mobius_disk(z, w);
        tk.consider(bharali_margin(sz, sw, m), 0.0, m, {z, w});

        if (j == 0) {
            // The matrix Blaschke product annihilates its own matrix...
            double ann = tilde_map(az, az).max_abs();
            tk.consider_dev(cfg.tol, ann, 1e-8, ann, 0.0, {z});
            // ...and acts on another matrix's spectrum through the scalar
            // product.
            SquareMatrix mapped = tilde_map(az, bw);
            SpectrumData st = spectrum(mapped);
            std::vector<Complex> got = st.eigenvalues.support();
            std::vector<Complex> want;
            for (const auto& e : sw.eigenvalues.entries)
                want.push_back(minimal_blaschke_eval(sz, e.point));
            double dev = hausdorff_euclidean(got, want);
            tk.consider_dev(cfg.tol, dev, 1e-6, dev, 0.0, {z, w});
        }
    }
    tk.finish(cfg, rec);
}

// ------------------------------------------------------------- metrics suite

void metrics_trial(const SuiteConfig& cfg, int t, TrialRecord& rec) {
    Rng rng(Rng::mix(cfg.seed, static_cast<std::uint64_t>(t)));
    rec.map_kind = "battery";
    rec.map_seed = Rng::mix(cfg.seed, static_cast<std::uint64_t>(t));
    rec.n = cfg.n;
    rec.degree = cfg.degree;

    Tracker tk;
    const double tol = cfg.tol;

    // Pseudodistance basics: symmetry, range, disk law, tanh round trip.
    {
        Complex x = rng.next_in_disk(0.95);
        Complex y = rng.next_in_disk(0.95);
        double m1 = mobius_disk(x, y);
        double m2 = mobius_disk(y, x);
        tk.consider_dev(tol, std::abs(m1 - m2), 1e-14, m1, m2, {x, y});
        if (!(m1 >= 0.0 && m1 < 1.0))
            tk.consider(-1000.0 * tol, m1, 1.0, {x, y});
        tk.consider_dev(tol, std::abs(mobius_disk(x, 0.0) - std::abs(x)), 1e-14,
                        mobius_disk(x, 0.0), std::abs(x), {x});
        double c = caratheodory_from_mobius(m1);
        tk.consider_dev(tol, std::abs(std::tanh(c) - m1), 1e-12, std::tanh(c),
                        m1, {x, y});
        // Triangle inequality holds at the Caratheodory level.
        Complex w = rng.next_in_disk(0.95);
        double slack = caratheodory_from_mobius(mobius_disk(x, w)) +
                       caratheodory_from_mobius(mobius_disk(w, y)) - c;
        tk.consider_dev(tol, std::max(0.0, -slack), 1e-12, c, c + slack,
                        {x, y, w});
    }

    // Automorphism invariance.
    {
        Complex a = rng.next_in_disk(0.7);
        Complex phase = rng.next_phase();
        Complex x = rng.next_in_disk(0.95);
        Complex y = rng.next_in_disk(0.95);
        double before = mobius_disk(x, y);
        double after = mobius_disk(automorphism(a, phase, x),
                                   automorphism(a, phase, y));
        tk.consider_dev(tol, std::abs(after - before), 1e-12, after, before,
                        {x, y});
    }

    // Ball form reduces to the scaled Euclidean distance.
    {
        std::vector<Complex> center(3), pt(3);
        for (auto& v : center) v = rng.next_in_disk(0.3);
        double radius = 0.5 + rng.next_unit();
        double s = 0.0;
        for (size_t k = 0; k < 3; ++k) {
            pt[k] = center[k] + rng.next_in_disk(0.2);
            s += std::norm(pt[k] - center[k]);
        }
        double direct = std::sqrt(s) / radius;
        double viaop = mobius_ball(center, radius, pt);
        tk.consider_dev(tol, std::abs(viaop - direct), 1e-14, viaop, direct,
                        {pt[0], pt[1]});
    }

    // Sub-mean value on circles for z -> mobius(z, w).
    {
        Complex c = rng.next_in_disk(0.5);
        double r = 0.05 + 0.35 * rng.next_unit();
        Complex w = rng.next_in_disk(0.9);
        double center_val = mobius_disk(c, w);
        if (center_val >= 1e-4) {
            double avg = 0.0;
            bool degenerate = false;
            for (int k = 0; k < 256; ++k) {
                Complex zk = c + std::polar(r, kTwoPi * k / 256.0);
                double v = mobius_disk(zk, w);
                if (v <= 0.0) {
                    degenerate = true;
                    break;
                }
                avg += std::log(v);
            }
            if (!degenerate) {
                avg /= 256.0;
                double deficit = std::log(center_val) - avg;
                tk.consider_dev(tol, std::max(0.0, deficit), 1e-6,
                                std::log(center_val), avg, {c, w});
            }
        }
    }

    // Symmetrize / root-extraction round trip.
    {
        int k = 1 + static_cast<int>(rng.next_below(8));
        std::vector<Complex> pts(static_cast<size_t>(k));
        for (auto& p : pts) p = rng.next_in_disk(0.95);
        GnPoint sg = symmetrize(pts);
        RootSolveReport back = gn_roots(sg);
        std::vector<Complex> rec_pts = back.roots.expanded();
        double dev = hausdorff_euclidean(rec_pts, pts);
        tk.consider_dev(tol, dev, 1e-8, dev, 0.0, {pts[0]});
    }

    // Gauge homogeneity under the weighted action.
    {
        int k = 1 + static_cast<int>(
                        rng.next_below(static_cast<std::uint32_t>(cfg.n)));
        std::vector<Complex> pts(static_cast<size_t>(k));
        for (auto& p : pts) p = rng.next_in_disk(0.9);
        GnPoint sg = symmetrize(pts);
        Complex lambda = rng.next_in_disk(0.9);
        GnPoint scaled;
        scaled.sigma.resize(sg.sigma.size());
        for (size_t j = 0; j < sg.sigma.size(); ++j)
            scaled.sigma[j] =
                detail::cipow(lambda, static_cast<int>(j) + 1) * sg.sigma[j];
        double lhs = gn_minkowski(scaled);
        double rhs = std::abs(lambda) * gn_minkowski(sg);
        tk.consider_dev(tol, std::abs(lhs - rhs), 1e-8, lhs, rhs,
                        {pts[0], lambda});
    }

    // Fiber distances: symmetry, self-distance, h^n <= h1, range.
    {
        int k = 1 + static_cast<int>(
                        rng.next_below(static_cast<std::uint32_t>(cfg.n)));
        std::vector<Complex> u(static_cast<size_t>(k)), v(static_cast<size_t>(k));
        for (auto& p : u) p = rng.next_in_disk(0.9);
        for (auto& p : v) p = rng.next_in_disk(0.9);
        GnPoint z = symmetrize(u);
        GnPoint z0 = symmetrize(v);
        double h = fiber_distance_h(z, z0);
        double hr = fiber_distance_h(z0, z);
        double hh = h1(z, z0);
        double hhr = h1(z0, z);
        tk.consider_dev(tol, std::abs(h - hr), 1e-12, h, hr, {u[0], v[0]});
        tk.consider_dev(tol, std::abs(hh - hhr), 1e-12, hh, hhr, {u[0], v[0]});
        tk.consider_dev(tol, std::max(0.0, detail::ipow(h, k) - hh), 1e-10,
                        detail::ipow(h, k), hh, {u[0], v[0]});
        tk.consider_dev(tol, h1(z, z), 1e-12, h1(z, z), 0.0, {u[0]});
        if (!(h >= 0.0 && h < 1.0 && hh >= 0.0 && hh < 1.0))
            tk.consider(-1000.0 * tol, h, hh, {u[0], v[0]});
    }

    // Distance-decreasing property of disk-valued maps.
    {
        std::uint64_t gs = rng.next_u64();
        HoloMap g = random_map(gs, MapKind::poly_coords, 1,
                               std::max(1, cfg.degree), false);
        Complex x = rng.next_in_disk(0.95);
        Complex y = rng.next_in_disk(0.95);
        double margin = disk_contraction_margin(g, x, y);
        tk.consider_dev(tol, std::max(0.0, -margin), 1e-9, margin, 0.0, {x, y});
    }

    // Lifted maps: the explicit fiber matches the solver fiber.
    {
        std::uint64_t gs = rng.next_u64();
        int k = 1 + static_cast<int>(
                        rng.next_below(static_cast<std::uint32_t>(cfg.n)));
        HoloMap g = random_map(gs, MapKind::lifted_blaschke, k,
                               std::max(1, cfg.degree), false);
        Complex x = rng.next_in_disk(0.9);
        std::vector<Complex> direct = g.lifted_fiber(x);
        GnPoint sg{g.eval(x)};
        std::vector<Complex> solved = gn_roots(sg).roots.expanded();
        double dev = hausdorff_euclidean(solved, direct);
        tk.consider_dev(tol, dev, 1e-7, dev, 0.0, {x});
    }

    // Log-plurisubharmonicity shadow for h1 along an analytic disk.
    {
        std::uint64_t gs = rng.next_u64();
        int k = 1 + static_cast<int>(
                        rng.next_below(static_cast<std::uint32_t>(cfg.n)));
        HoloMap g = random_map(gs, MapKind::lifted_blaschke, k,
                               std::max(1, cfg.degree), false);
        std::vector<Complex> anchor(static_cast<size_t>(k));
        for (auto& p : anchor) p = rng.next_in_disk(0.85);
        GnPoint z0 = symmetrize(anchor);
        Complex c = rng.next_in_disk(0.5);
        double r = 0.05 + 0.3 * rng.next_unit();
        double center_val = h1(GnPoint{g.eval(c)}, z0);
        if (center_val >= 1e-4) {
            double avg = 0.0;
            bool degenerate = false;
            for (int k2 = 0; k2 < 128; ++k2) {
                Complex xk = c + std::polar(r, kTwoPi * k2 / 128.0);
                double v = h1(GnPoint{g.eval(xk)}, z0);
                if (v <= 0.0) {
                    degenerate = true;
                    break;
                }
                avg += std::log(v);
            }
            if (!degenerate) {
                avg /= 128.0;
                double deficit = std::log(center_val) - avg;
                tk.consider_dev(tol, std::max(0.0, deficit), 1e-6,
                                std::log(center_val), avg, {c});
            }
        }
    }

    tk.finish(cfg, rec);
}

// ------------------------------------------------------------------- runner

using TrialFn = void (*)(const SuiteConfig&, int, TrialRecord&);

TrialFn trial_fn(Suite s) {
    switch (s) {
        case Suite::main_suite: return &main_trial;
        case Suite::quasibalanced: return &quasibalanced_trial;
        case Suite::nthroot: return &nthroot_trial;
        case Suite::equality: return &equality_trial;
        case Suite::spectral: return &spectral_trial;
        case Suite::metrics: return &metrics_trial;
    }
    throw Error(ErrorCode::internal, "unknown suite");
}

void run_one(const SuiteConfig& cfg, TrialFn fn, int t, TrialRecord& rec) {
    auto start = std::chrono::steady_clock::now();
    rec = TrialRecord{};
    rec.trial = t;
    try {
        fn(cfg, t, rec);
    } catch (const Error& e) {
        rec.sample.clear();
        rec.lhs = rec.rhs = rec.margin = 0.0;
        rec.pass = false;
        rec.aborted = true;
        rec.error = e.what();
    } catch (const std::exception& e) {
        rec.sample.clear();
        rec.lhs = rec.rhs = rec.margin = 0.0;
        rec.pass = false;
        rec.aborted = true;
        rec.error = std::string("internal: ") + e.what();
    }
    rec.trial = t;
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
}

}  // namespace

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::main_suite: return "main";
        case Suite::quasibalanced: return "quasibalanced";
        case Suite::nthroot: return "nthroot";
        case Suite::equality: return "equality";
        case Suite::spectral: return "spectral";
        case Suite::metrics: return "metrics";
    }
    return "unknown";
}

Suite suite_from_name(std::string_view name) {
    if (name == "main") return Suite::main_suite;
    if (name == "quasibalanced") return Suite::quasibalanced;
    if (name == "nthroot") return Suite::nthroot;
    if (name == "equality") return Suite::equality;
    if (name == "spectral") return Suite::spectral;
    if (name == "metrics") return Suite::metrics;
    throw Error(ErrorCode::invalid_argument,
                "unknown suite '" + std::string(name) + "'");
}

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names{
        "main", "quasibalanced", "nthroot", "equality", "spectral", "metrics"};
    return names;
}

std::string_view format_name(ReportFormat f) {
    return f == ReportFormat::jsonl ? "jsonl" : "csv";
}

ReportFormat format_from_name(std::string_view name) {
    if (name == "jsonl") return ReportFormat::jsonl;
    if (name == "csv") return ReportFormat::csv;
    throw Error(ErrorCode::invalid_argument,
                "unknown report format '" + std::string(name) + "'");
}

SuiteConfig resolve_config(const SuiteConfig& cfg) {
    struct Defaults {
        int trials, n, degree, grid;
        double tol;
    };
    Defaults d{};
    switch (cfg.suite) {
        case Suite::main_suite: d = {200, 4, 5, 10, 1e-7}; break;
        case Suite::quasibalanced: d = {200, 3, 5, 8, 1e-7}; break;
        case Suite::nthroot: d = {200, 3, 5, 16, 1e-7}; break;
        case Suite::equality: d = {60, 4, 1, 64, 1e-8}; break;
        case Suite::spectral: d = {120, 3, 3, 4, 1e-6}; break;
        case Suite::metrics: d = {50, 5, 4, 16, 1e-6}; break;
    }
    SuiteConfig r = cfg;
    if (!r.seed_set) r.seed = kDefaultSeed;
    if (r.trials == 0) r.trials = d.trials;
    if (r.n == 0) r.n = d.n;
    if (r.degree == 0) r.degree = d.degree;
    if (r.grid == 0) r.grid = d.grid;
    if (r.tol == 0.0) r.tol = d.tol;

    detail::require(r.trials >= 1, ErrorCode::invalid_argument,
                    "trials must be >= 1");
    detail::require(r.n >= 1 && r.n <= 8, ErrorCode::invalid_argument,
                    "n must lie in [1, 8]");
    detail::require(r.degree >= 1 && r.degree <= 12,
                    ErrorCode::invalid_argument, "degree must lie in [1, 12]");
    detail::require(r.grid >= 1, ErrorCode::invalid_argument,
                    "grid must be >= 1");
    detail::require(r.tol > 0.0, ErrorCode::invalid_argument,
                    "tol must be positive");
    detail::require(r.threads >= 0, ErrorCode::invalid_argument,
                    "threads must be >= 0");
    return r;
}

SuiteConfig apply_config_kv(const SuiteConfig& base,
                            const std::map<std::string, std::string>& kv) {
    SuiteConfig cfg = base;
    auto parse_int = [](const std::string& key, const std::string& v) {
        int out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        detail::require(ec == std::errc() && p == v.data() + v.size(),
                        ErrorCode::invalid_argument,
                        "invalid integer for '" + key + "': " + v);
        return out;
    };
    for (const auto& [key, value] : kv) {
        if (key == "suite") {
            cfg.suite = suite_from_name(value);
        } else if (key == "seed") {
            std::uint64_t s = 0;
            auto [p, ec] =
                std::from_chars(value.data(), value.data() + value.size(), s);
            detail::require(ec == std::errc() &&
                                p == value.data() + value.size(),
                            ErrorCode::invalid_argument,
                            "invalid seed: " + value);
            cfg.seed = s;
            cfg.seed_set = true;
        } else if (key == "trials") {
            cfg.trials = parse_int(key, value);
        } else if (key == "n") {
            cfg.n = parse_int(key, value);
        } else if (key == "degree") {
            cfg.degree = parse_int(key, value);
        } else if (key == "grid") {
            cfg.grid = parse_int(key, value);
        } else if (key == "threads") {
            cfg.threads = parse_int(key, value);
        } else if (key == "tol") {
            try {
                size_t used = 0;
                cfg.tol = std::stod(value, &used);
                detail::require(used == value.size(),
                                ErrorCode::invalid_argument,
                                "invalid tol: " + value);
            } catch (const std::exception&) {
                throw Error(ErrorCode::invalid_argument,
                            "invalid tol: " + value);
            }
        } else if (key == "out") {
            cfg.out = value;
        } else if (key == "format") {
            cfg.format = format_from_name(value);
        } else {
            throw Error(ErrorCode::invalid_argument,
                        "unknown config key '" + key + "'");
        }
    }
    return cfg;
}

SuiteReport run_suite(const SuiteConfig& raw) {
    SuiteConfig cfg = resolve_config(raw);
    TrialFn fn = trial_fn(cfg.suite);

    auto start = std::chrono::steady_clock::now();
    std::vector<TrialRecord> records(static_cast<size_t>(cfg.trials));

    int threads = cfg.threads > 0
                      ? cfg.threads
                      : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, cfg.trials);
    if (threads <= 1) {
        for (int t = 0; t < cfg.trials; ++t)
            run_one(cfg, fn, t, records[static_cast<size_t>(t)]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid]() {
                for (int t = tid; t < cfg.trials; t += threads)
                    run_one(cfg, fn, t, records[static_cast<size_t>(t)]);
            });
        for (auto& th : pool) th.join();
    }

    SuiteReport report;
    report.config = cfg;
    report.records = std::move(records);
    double sum = 0.0;
    int completed = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const TrialRecord& r : report.records) {
        if (r.aborted) {
            ++report.aborts;
            continue;
        }
        ++completed;
        sum += r.margin;
        min_margin = std::min(min_margin, r.margin);
        if (r.pass)
            ++report.passes;
        else
            ++report.failures;
    }
    report.violations = report.failures;
    report.min_margin = completed > 0 ? min_margin : 0.0;
    report.mean_margin = completed > 0 ? sum / completed : 0.0;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

SuiteReport run_main_suite(SuiteConfig cfg) {
    cfg.suite = Suite::main_suite;
    return run_suite(cfg);
}
SuiteReport run_quasibalanced_suite(SuiteConfig cfg) {
    cfg.suite = Suite::quasibalanced;
    return run_suite(cfg);
}
SuiteReport run_nthroot_suite(SuiteConfig cfg) {
    cfg.suite = Suite::nthroot;
    return run_suite(cfg);
}
SuiteReport run_equality_suite(SuiteConfig cfg) {
    cfg.suite = Suite::equality;
    return run_suite(cfg);
}
SuiteReport run_spectral_suite(SuiteConfig cfg) {
    cfg.suite = Suite::spectral;
    return run_suite(cfg);
}
SuiteReport run_metrics_suite(SuiteConfig cfg) {
    cfg.suite = Suite::metrics;
    return run_suite(cfg);
}

namespace {

ordered_json sample_json(const std::vector<Complex>& pts) {
    ordered_json arr = ordered_json::array();
    for (Complex p : pts) arr.push_back({p.real(), p.imag()});
    return arr;
}

ordered_json record_json(const SuiteReport& report, const TrialRecord& r) {
    ordered_json j;
    j["suite"] = std::string(suite_name(report.config.suite));
    j["trial"] = r.trial;
    j["kind"] = r.map_kind;
    j["map_seed"] = r.map_seed;
    j["degree"] = r.degree;
    j["n"] = r.n;
    j["sample"] = sample_json(r.sample);
    if (r.aborted) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["margin"] = nullptr;
    } else {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["margin"] = r.margin;
    }
    j["pass"] = r.pass;
    j["aborted"] = r.aborted;
    if (r.error.empty())
        j["error"] = nullptr;
    else
        j["error"] = r.error;
    j["wall_ms"] = r.wall_ms;
    return j;
}

ordered_json summary_json_object(const SuiteReport& report) {
    const SuiteConfig& cfg = report.config;
    ordered_json j;
    j["suite"] = std::string(suite_name(cfg.suite));
    j["seed"] = cfg.seed;
    j["n"] = cfg.n;
    j["degree"] = cfg.degree;
    j["grid"] = cfg.grid;
    j["trials"] = cfg.trials;
    j["tol"] = cfg.tol;
    j["passes"] = report.passes;
    j["failures"] = report.failures;
    j["aborts"] = report.aborts;
    j["violations"] = report.violations;
    if (report.passes + report.failures > 0) {
        j["min_margin"] = report.min_margin;
        j["mean_margin"] = report.mean_margin;
    } else {
        j["min_margin"] = nullptr;
        j["mean_margin"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

void write_csv(const SuiteReport& report, std::ostream& os) {
    os << "suite,trial,kind,map_seed,degree,n,sample,lhs,rhs,margin,pass,"
          "aborted,error,wall_ms\n";
    auto num = [](double v) { return ordered_json(v).dump(); };
    for (const TrialRecord& r : report.records) {
        os << suite_name(report.config.suite) << ',' << r.trial << ','
           << csv_escape(r.map_kind) << ',' << r.map_seed << ',' << r.degree
           << ',' << r.n << ',' << '"' << sample_json(r.sample).dump() << '"'
           << ',';
        if (r.aborted)
            os << ",,";
        else
            os << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.margin);
        os << ',' << (r.pass ? "true" : "false") << ','
           << (r.aborted ? "true" : "false") << ',' << csv_escape(r.error)
           << ',' << num(r.wall_ms) << '\n';
    }
    os << "# " << summary_json_object(report).dump() << '\n';
}

}  // namespace

std::string summary_json(const SuiteReport& report) {
    return summary_json_object(report).dump();
}

void write_report(const SuiteReport& report, std::ostream& os) {
    if (report.config.format == ReportFormat::csv) {
        write_csv(report, os);
        return;
    }
    for (const TrialRecord& r : report.records)
        os << record_json(report, r).dump() << '\n';
    os << summary_json_object(report).dump() << '\n';
}

void write_report_to_configured_sink(const SuiteReport& report) {
    const std::string& out = report.config.out;
    if (out.empty() || out == "-") {
        write_report(report, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw Error(ErrorCode::io_failure, "cannot open '" + out + "' for writing");
    write_report(report, f);
    f.flush();
    if (!f) throw Error(ErrorCode::io_failure, "write to '" + out + "' failed");
}

}  // namespace schwarz::harness
