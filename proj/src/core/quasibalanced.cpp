// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/quasibalanced.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/matrix.hpp"
#include "schwarz/spectralball.hpp"
#include "schwarz/sympoly.hpp"

namespace schwarz {

namespace {

void validate_weights(std::span<const int> w) {
    detail::require(!w.empty(), ErrorCode::invalid_argument,
                    "weight tuple must be non-empty");
    for (int p : w)
        detail::require(p >= 1, ErrorCode::invalid_argument,
                        "weights must be positive integers");
}

}  // namespace

int WeightedDomain::highest_weight() const {
    validate_weights(weights);
    return *std::max_element(weights.begin(), weights.end());
}

std::vector<Complex> weighted_action(Complex lambda, std::span<const Complex> z,
                                     std::span<const int> weights) {
    validate_weights(weights);
    detail::require(z.size() == weights.size(), ErrorCode::invalid_argument,
                    "point length must match weight tuple");
    std::vector<Complex> out(z.size());
    for (size_t k = 0; k < z.size(); ++k)
        out[k] = detail::cipow(lambda, weights[k]) * z[k];
    return out;
}

WeightedDomain WeightedDomain::disk() {
    WeightedDomain d;
    d.name = "disk";
    d.weights = {1};
    d.membership = [](std::span<const Complex> z) { return std::abs(z[0]) < 1.0; };
    d.known_gauge = [](std::span<const Complex> z) { return std::abs(z[0]); };
    d.pseudoconvex = true;
    return d;
}

WeightedDomain WeightedDomain::polydisk(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    WeightedDomain d;
    d.name = "polydisk-" + std::to_string(n);
    d.weights.assign(static_cast<size_t>(n), 1);
    d.membership = [](std::span<const Complex> z) {
        for (Complex v : z)
            if (!(std::abs(v) < 1.0)) return false;
        return true;
    };
    d.known_gauge = [](std::span<const Complex> z) {
        double m = 0.0;
        for (Complex v : z) m = std::max(m, std::abs(v));
        return m;
    };
    d.pseudoconvex = true;
    return d;
}

WeightedDomain WeightedDomain::euclidean_ball(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    WeightedDomain d;
    d.name = "ball-" + std::to_string(n);
    d.weights.assign(static_cast<size_t>(n), 1);
    d.membership = [](std::span<const Complex> z) {
        double s = 0.0;
        for (Complex v : z) s += std::norm(v);
        return s < 1.0;
    };
    d.known_gauge = [](std::span<const Complex> z) {
        double s = 0.0;
        for (Complex v : z) s += std::norm(v);
        return std::sqrt(s);
    };
    d.pseudoconvex = true;
    return d;
}

WeightedDomain WeightedDomain::symmetrized_polydisk(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    WeightedDomain d;
    d.name = "sym-polydisk-" + std::to_string(n);
    d.weights.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) d.weights[static_cast<size_t>(k)] = k + 1;
    auto gauge = [](std::span<const Complex> z) {
        GnPoint p;
        p.sigma.assign(z.begin(), z.end());
        return gn_minkowski(p);
    };
    d.membership = [gauge](std::span<const Complex> z) { return gauge(z) < 1.0; };
    d.known_gauge = gauge;
    d.pseudoconvex = true;
    return d;
}

WeightedDomain WeightedDomain::spectral_ball(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    WeightedDomain d;
    d.name = "spectral-ball-" + std::to_string(n);
    d.weights.assign(static_cast<size_t>(n) * n, 1);
    auto gauge = [](std::span<const Complex> z) {
        return spectral_radius(SquareMatrix::from_flat(z));
    };
    d.membership = [gauge](std::span<const Complex> z) { return gauge(z) < 1.0; };
    d.known_gauge = gauge;
    d.pseudoconvex = true;
    return d;
}

double gauge_bisection(const WeightedDomain& d, std::span<const Complex> z) {
    detail::require(static_cast<bool>(d.membership), ErrorCode::invalid_argument,
                    "domain lacks a membership predicate");
    validate_weights(d.weights);
    detail::require(z.size() == d.weights.size(), ErrorCode::invalid_argument,
                    "point length must match the domain dimension");
    detail::require_finite(z, "point");

    bool zero = true;
    for (Complex v : z)
        if (v != 0.0) zero = false;
    if (zero) {
        detail::require(d.membership(z), ErrorCode::invalid_argument,
                        "domain must contain the origin");
        return 0.0;
    }

    auto member_at = [&](double t) {
        return d.membership(
            weighted_action(Complex(1.0 / t, 0.0), z, d.weights));
    };

    double lo, hi;
    if (member_at(1.0)) {
        hi = 1.0;
        for (;;) {
            double trial = 0.5 * hi;
            if (trial < 1e-300) return 0.0;  // gauge vanishes along this ray
            if (!member_at(trial)) {
                lo = trial;
                break;
            }
            hi = trial;
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        while (!member_at(hi)) {
            lo = hi;
            hi *= 2.0;
            detail::require(hi <= 1.2e18, ErrorCode::unbounded_gauge,
                            "no bracketing scale exists; gauge is unbounded "
                            "along this ray");
        }
    }

    // The gauge construction assumes the ray hits the domain exactly once:
    // inside stays inside for larger t, outside stays outside for smaller t.
    detail::require(member_at(2.0 * hi) && member_at(4.0 * hi),
                    ErrorCode::monotonicity_violation,
                    "membership is not monotone along the action ray");
    detail::require(!member_at(0.5 * lo), ErrorCode::monotonicity_violation,
                    "membership is not monotone along the action ray");

    for (int step = 0; step < 60; ++step) {
        double mid = 0.5 * (lo + hi);
        if (member_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

GaugeBounds extremal_sandwich(const WeightedDomain& d,
                              std::span<const Complex> z) {
    detail::require(d.pseudoconvex, ErrorCode::invalid_argument,
                    "sandwich bounds require a pseudoconvex built-in domain");
    double h = gauge_bisection(d, z);
    GaugeBounds b;
    b.upper = h;
    b.lower = detail::ipow(h, d.highest_weight());
    return b;
}

double schwarz_margin(const MapFn& f, const WeightedDomain& d1,
                      const WeightedDomain& d2, std::span<const Complex> z) {
    detail::require(static_cast<bool>(f), ErrorCode::invalid_argument,
                    "map must be callable");
    detail::require(d1.pseudoconvex && d2.pseudoconvex,
                    ErrorCode::invalid_argument,
                    "theorem margins require pseudoconvex built-in domains");
    detail::require(z.size() == d1.weights.size(), ErrorCode::invalid_argument,
                    "point length must match the source dimension");
    detail::require(d1.membership(z), ErrorCode::outside_domain,
                    "base point must lie in the source domain");

    std::vector<Complex> zero(d1.weights.size(), 0.0);
    std::vector<Complex> f0 = f(zero);
    detail::require(f0.size() == d2.weights.size(), ErrorCode::invalid_argument,
                    "map output length must match the target dimension");
    double drift = 0.0;
    for (Complex v : f0) drift = std::max(drift, std::abs(v));
    detail::require(drift <= 1e-12, ErrorCode::origin_not_fixed,
                    "map must fix the origin");

    std::vector<Complex> fz = f(z);
    detail::require(fz.size() == d2.weights.size(), ErrorCode::invalid_argument,
                    "map output length must match the target dimension");
    detail::require(d2.membership(fz), ErrorCode::outside_domain,
                    "map value escapes the target domain");

    double hz = gauge_bisection(d1, z);
    double hf = gauge_bisection(d2, fz);
    return hz - detail::ipow(hf, d2.highest_weight());
}

double nth_root_bound_margin(const MapFn& f, Complex z) {
    detail::require(static_cast<bool>(f), ErrorCode::invalid_argument,
                    "map must be callable");
    detail::require_disk(z, "z");

    std::vector<Complex> origin{Complex(0.0, 0.0)};
    std::vector<Complex> f0 = f(origin);
    detail::require(!f0.empty(), ErrorCode::invalid_argument,
                    "map output must be non-empty");
    double drift = 0.0;
    for (Complex v : f0) drift = std::max(drift, std::abs(v));
    detail::require(drift <= 1e-12, ErrorCode::origin_not_fixed,
                    "map must fix the origin");

    std::vector<Complex> point{z};
    std::vector<Complex> fz = f(point);
    detail::require(fz.size() == f0.size(), ErrorCode::invalid_argument,
                    "map output length changed between evaluations");
    GnPoint p;
    p.sigma = std::move(fz);
    double g = gn_minkowski(p);
    detail::require(g < 1.0, ErrorCode::outside_domain,
                    "map value escapes the target domain");
    int n = p.n();
    return std::pow(std::abs(z), 1.0 / static_cast<double>(n)) - g;
}

}  // namespace schwarz
