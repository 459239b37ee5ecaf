// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>

#include "schwarz/types.hpp"

namespace schwarz {

/// Domain that is stable under the weighted circle action
/// lambda . z = (lambda^{p_1} z_1, ..., lambda^{p_m} z_m), |lambda| <= 1,
/// described by a membership predicate.  The built-in factories also carry a
/// closed-form gauge for cross-checks and are flagged as pseudoconvex, which
/// the theorem-margin helpers require.
struct WeightedDomain {
    std::string name;
    std::vector<int> weights;
    std::function<bool(std::span<const Complex>)> membership;
    std::function<double(std::span<const Complex>)> known_gauge;  // optional
    bool pseudoconvex = false;

    int dimension() const { return static_cast<int>(weights.size()); }
    int highest_weight() const;

    static WeightedDomain disk();
    static WeightedDomain polydisk(int n);
    static WeightedDomain euclidean_ball(int n);
    static WeightedDomain symmetrized_polydisk(int n);
    static WeightedDomain spectral_ball(int n);  // dimension n*n, flattened
};

/// The weighted action lambda . z for the given weights.
std::vector<Complex> weighted_action(Complex lambda, std::span<const Complex> z,
                                     std::span<const int> weights);

/// Minkowski-type gauge h_D(z) = inf { t > 0 : (1/t) . z in D } by geometric
/// bracketing plus 60 bisection steps.  Spot-checks ray monotonicity of the
/// membership predicate and throws when no bracket exists below 2^60.
double gauge_bisection(const WeightedDomain& d, std::span<const Complex> z);

struct GaugeBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Sandwich h^p <= lambda_D <= h for the Lempert-function stand-in of a
/// pseudoconvex quasi-balanced domain, p the highest weight: returns
/// (gauge^p, gauge).  Collapses to equality when p = 1.
GaugeBounds extremal_sandwich(const WeightedDomain& d, std::span<const Complex> z);

using MapFn = std::function<std::vector<Complex>(std::span<const Complex>)>;

/// Schwarz-type margin for an origin-fixing map f : D1 -> D2 at z:
/// h_{D1}(z) - h_{D2}(f(z))^{p}, p the highest weight of D2.  Non-negative
/// when the Schwarz bound holds; both domains must be pseudoconvex built-ins.
double schwarz_margin(const MapFn& f, const WeightedDomain& d1,
                      const WeightedDomain& d2, std::span<const Complex> z);

/// Margin |z|^{1/n} - h(f(z)) for an origin-fixing map f of the disk into
/// G^n (h the max-root-modulus gauge); n is inferred from the output length.
double nth_root_bound_margin(const MapFn& f, Complex z);

}  // namespace schwarz
