// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schwarz {

double mobius_disk(Complex z, Complex w) {
    detail::require_disk(z, "z");
    detail::require_disk(w, "w");
    return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

double mobius_ball(std::span<const Complex> center, double radius,
                   std::span<const Complex> z) {
    detail::require(radius > 0.0 && std::isfinite(radius),
                    ErrorCode::invalid_argument, "radius must be positive");
    detail::require(z.size() == center.size() && !z.empty(),
                    ErrorCode::invalid_argument,
                    "center and point must have equal positive length");
    detail::require_finite(center, "center");
    detail::require_finite(z, "point");
    double s = 0.0;
    for (size_t k = 0; k < z.size(); ++k) s += std::norm(z[k] - center[k]);
    double dist = std::sqrt(s);
    detail::require(dist < radius, ErrorCode::outside_domain,
                    "point must lie inside the ball");
    return dist / radius;
}

double mobius_polydisk(std::span<const Complex> z, std::span<const Complex> w) {
    detail::require(z.size() == w.size() && !z.empty(),
                    ErrorCode::invalid_argument,
                    "points must have equal positive length");
    double m = 0.0;
    for (size_t k = 0; k < z.size(); ++k)
        m = std::max(m, mobius_disk(z[k], w[k]));
    return m;
}

namespace {

double directed_sup_inf(std::span<const Complex> a, std::span<const Complex> b) {
    double sup = 0.0;
    for (Complex p : a) {
        double inf = 2.0;
        for (Complex q : b) inf = std::min(inf, mobius_disk(p, q));
        sup = std::max(sup, inf);
    }
    return sup;
}

}  // namespace

double hausdorff_mobius(std::span<const Complex> a, std::span<const Complex> b) {
    detail::require(!a.empty() && !b.empty(), ErrorCode::invalid_argument,
                    "sets must be non-empty");
    for (Complex p : a) detail::require_disk(p, "set member");
    for (Complex p : b) detail::require_disk(p, "set member");
    std::vector<Complex> sa = PointMultiset::cluster(a, 1e-9).support();
    std::vector<Complex> sb = PointMultiset::cluster(b, 1e-9).support();
    return std::max(directed_sup_inf(sa, sb), directed_sup_inf(sb, sa));
}

double hausdorff_mobius(const PointMultiset& a, const PointMultiset& b) {
    std::vector<Complex> sa = a.support();
    std::vector<Complex> sb = b.support();
    return hausdorff_mobius(std::span<const Complex>(sa),
                            std::span<const Complex>(sb));
}

double hausdorff_euclidean(std::span<const Complex> a,
                           std::span<const Complex> b) {
    detail::require(!a.empty() && !b.empty(), ErrorCode::invalid_argument,
                    "sets must be non-empty");
    auto directed = [](std::span<const Complex> x, std::span<const Complex> y) {
        double sup = 0.0;
        for (Complex p : x) {
            double inf = std::numeric_limits<double>::infinity();
            for (Complex q : y) inf = std::min(inf, std::abs(p - q));
            sup = std::max(sup, inf);
        }
        return sup;
    };
    return std::max(directed(a, b), directed(b, a));
}

double caratheodory_from_mobius(double m) {
    detail::require(m >= 0.0 && m < 1.0, ErrorCode::invalid_argument,
                    "pseudodistance must lie in [0, 1)");
    return std::atanh(m);
}

}  // namespace schwarz
