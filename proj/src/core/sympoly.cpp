// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/sympoly.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/mobius.hpp"

namespace schwarz {

namespace {

PolyRootSolver& shared_solver() {
    thread_local PolyRootSolver solver;
    return solver;
}

void validate_gn_point(const GnPoint& p) {
    detail::require(p.n() >= 1, ErrorCode::invalid_argument,
                    "coordinate tuple must be non-empty");
    detail::require_finite(p.sigma, "coordinates");
}

// Solve the associated polynomial and enforce membership of the open domain.
RootSolveReport solve_member_fiber(const GnPoint& p, const char* what) {
    RootSolveReport fiber = gn_roots(p);
    double gauge = 0.0;
    for (const auto& e : fiber.roots.entries)
        gauge = std::max(gauge, std::abs(e.point));
    detail::require(gauge < 1.0, ErrorCode::outside_domain, what);
    return fiber;
}

}  // namespace

GnPoint symmetrize(std::span<const Complex> pts) {
    detail::require(!pts.empty(), ErrorCode::invalid_argument,
                    "point tuple must be non-empty");
    detail::require_finite(pts, "points");
    GnPoint out;
    out.sigma.assign(pts.size(), 0.0);
    // e_j(z_1..z_k) built incrementally: e_j += z_k * e_{j-1}.
    size_t used = 0;
    for (Complex z : pts) {
        ++used;
        for (size_t j = std::min(used, out.sigma.size()); j-- > 1;)
            out.sigma[j] += z * out.sigma[j - 1];
        out.sigma[0] += z;
    }
    return out;
}

std::vector<Complex> monic_coefficients(const GnPoint& p) {
    validate_gn_point(p);
    std::vector<Complex> c(p.sigma.size());
    double sign = -1.0;
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] = sign * p.sigma[k];
        sign = -sign;
    }
    return c;
}

RootSolveReport gn_roots(const GnPoint& p) {
    std::vector<Complex> coeffs = monic_coefficients(p);
    return shared_solver().solve(coeffs);
}

double gn_minkowski(const GnPoint& p) {
    RootSolveReport fiber = gn_roots(p);
    double g = 0.0;
    for (const auto& e : fiber.roots.entries)
        g = std::max(g, std::abs(e.point));
    return g;
}

GnPoint nth_root_map(Complex x, int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    detail::require_disk(x, "x");
    GnPoint out;
    out.sigma.assign(static_cast<size_t>(n), 0.0);
    out.sigma.back() = (n % 2 == 0) ? -x : x;
    return out;
}

double fiber_distance_h(const GnPoint& z, const GnPoint& z0) {
    detail::require(z.n() == z0.n(), ErrorCode::invalid_argument,
                    "points must live in the same G^n");
    RootSolveReport fz =
        solve_member_fiber(z, "first point lies outside the open domain");
    RootSolveReport fz0 =
        solve_member_fiber(z0, "second point lies outside the open domain");
    return hausdorff_mobius(fz.roots, fz0.roots);
}

double h1(const GnPoint& z, const GnPoint& z0, FiberWeighting weighting) {
    detail::require(z.n() == z0.n(), ErrorCode::invalid_argument,
                    "points must live in the same G^n");
    RootSolveReport fz =
        solve_member_fiber(z, "first point lies outside the open domain");
    RootSolveReport fz0 =
        solve_member_fiber(z0, "second point lies outside the open domain");

    std::vector<Complex> a, b;
    if (weighting == FiberWeighting::multiplicity) {
        a = fz.roots.expanded();
        b = fz0.roots.expanded();
    } else {
        a = fz.roots.support();
        b = fz0.roots.support();
    }

    auto side = [](const std::vector<Complex>& outer,
                   const std::vector<Complex>& inner) {
        double best = 0.0;
        for (Complex p : outer) {
            double prod = 1.0;
            for (Complex q : inner) prod *= mobius_disk(p, q);
            best = std::max(best, prod);
        }
        return best;
    };
    return std::max(side(a, b), side(b, a));
}

}  // namespace schwarz
