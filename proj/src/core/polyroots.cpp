// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schwarz {

namespace {

// p and p' in one Horner pass; coefficients follow the monic layout of the
// header comment.
inline void eval_poly(std::span<const Complex> c, Complex x, Complex& p, Complex& dp) {
    p = 1.0;
    dp = 0.0;
    for (Complex a : c) {
        dp = dp * x + p;
        p = p * x + a;
    }
}

inline double max_modulus(std::span<const Complex> v) {
    double m = 0.0;
    for (Complex z : v) m = std::max(m, std::abs(z));
    return m;
}

void polish_newton(std::span<const Complex> c, std::vector<Complex>& roots) {
    for (Complex& z : roots) {
        Complex p, dp;
        eval_poly(c, z, p, dp);
        double best = std::abs(p);
        for (int step = 0; step < 3; ++step) {
            if (dp == 0.0 || best == 0.0) break;
            Complex zn = z - p / dp;
            Complex pn, dpn;
            eval_poly(c, zn, pn, dpn);
            if (std::abs(pn) < best) {
                z = zn;
                p = pn;
                dp = dpn;
                best = std::abs(pn);
            } else {
                break;
            }
        }
    }
}

PointMultiset cluster_roots(const std::vector<Complex>& roots) {
    const double scale = 1.0 + max_modulus(roots);
    const double base = 1e-6 * scale;
    // An m-fold root is only determined to about (backward error)^(1/m), so
    // the merge allowance must widen with the multiplicity: an m >= 3 root
    // scatters its candidates far beyond any fixed radius, often with no
    // close pair to seed the merge.
    auto grade = [&](int m) {
        if (m <= 2) return base;
        return std::max(base, 2.0 * scale * std::pow(1e-14, 1.0 / static_cast<double>(m)));
    };

    // Each candidate gets the radius of its own constellation size: start at
    // the full degree and shrink m to the number of candidates inside
    // grade(m) until stable.  grade is nondecreasing in m, so the iteration
    // descends and stops in at most n steps; a candidate always counts
    // itself, so the fixpoint is >= 1.  Well-separated simple roots reach 1
    // and keep the tight base radius, while the scattered candidates of an
    // m-fold root keep counting each other at grade(m).
    auto neighbor_fixpoint = [&](Complex z) {
        int m = static_cast<int>(roots.size());
        for (;;) {
            double r = grade(m);
            int count = 0;
            for (Complex w : roots)
                if (std::abs(w - z) <= r) ++count;
            if (count >= m) return m;
            m = count;
        }
    };

    struct Group {
        std::vector<Complex> members;
        double radius;
    };
    std::vector<Group> groups;
    groups.reserve(roots.size());
    for (Complex z : roots)
        groups.push_back({{z}, grade(neighbor_fixpoint(z))});

    for (;;) {
        double best_gap = 0.0;
        size_t bi = 0, bj = 0;
        bool found = false;
        for (size_t i = 0; i < groups.size(); ++i) {
            for (size_t j = i + 1; j < groups.size(); ++j) {
                double d = std::numeric_limits<double>::infinity();
                for (Complex a : groups[i].members)
                    for (Complex b : groups[j].members)
                        d = std::min(d, std::abs(a - b));
                double gap = d - std::max(groups[i].radius, groups[j].radius);
                if (gap <= 0.0 && (!found || gap < best_gap)) {
                    best_gap = gap;
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        groups[bi].members.insert(groups[bi].members.end(),
                                  groups[bj].members.begin(),
                                  groups[bj].members.end());
        groups[bi].radius = std::max(groups[bi].radius, groups[bj].radius);
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
    }

    PointMultiset out;
    out.entries.reserve(groups.size());
    for (const auto& g : groups) {
        Complex sum = 0.0;
        for (Complex z : g.members) sum += z;
        out.entries.push_back({sum / static_cast<double>(g.members.size()),
                               static_cast<int>(g.members.size())});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const PointMultiset::Entry& a, const PointMultiset::Entry& b) {
                  if (a.point.real() != b.point.real())
                      return a.point.real() < b.point.real();
                  return a.point.imag() < b.point.imag();
              });
    return out;
}

}  // namespace

bool PolyRootSolver::iterate(std::span<const Complex> coeffs, double rotation,
                             int& iters) {
    const size_t n = coeffs.size();
    const double radius = 1.0 + max_modulus(coeffs);
    // Offset keeps the start away from axes shared with real root symmetry.
    const double offset = 0.4501836112948683;
    const double two_pi = 6.283185307179586476925286766559;

    z_.resize(n);
    for (size_t k = 0; k < n; ++k)
        z_[k] = std::polar(radius, two_pi * static_cast<double>(k) /
                                           static_cast<double>(n) +
                                       offset + rotation);

    double prev_update = std::numeric_limits<double>::infinity();
    int stall = 0;
    for (int it = 0; it < opts_.max_iterations; ++it) {
        double max_update = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Complex p, dp;
            eval_poly(coeffs, z_[i], p, dp);
            if (p == 0.0) continue;
            if (dp == 0.0) {
                z_[i] += Complex(1e-8 * radius, 1e-8 * radius);
                max_update = std::max(max_update, 1e-8 * radius);
                continue;
            }
            Complex newton = p / dp;
            Complex repulsion = 0.0;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex d = z_[i] - z_[j];
                if (d == 0.0) d = Complex(1e-14 * radius, 0.0);
                repulsion += 1.0 / d;
            }
            Complex denom = 1.0 - newton * repulsion;
            Complex step = (denom == 0.0) ? newton : newton / denom;
            z_[i] -= step;
            max_update = std::max(max_update, std::abs(step));
        }
        ++iters;
        if (max_update < opts_.update_tolerance) return true;
        // Multiple roots plateau around eps^(1/m); once updates are tiny and
        // no longer shrinking, further sweeps are wasted.
        if (max_update < 1e-7 * radius && max_update > 0.5 * prev_update) {
            if (++stall >= 8) return false;
        } else {
            stall = 0;
        }
        prev_update = max_update;
    }
    return false;
}

RootSolveReport PolyRootSolver::solve(std::span<const Complex> coeffs) {
    detail::require(!coeffs.empty(), ErrorCode::invalid_argument,
                    "polynomial must have degree >= 1");
    detail::require_finite(coeffs, "coefficients");

    RootSolveReport report;
    if (coeffs.size() == 1) {
        report.roots = PointMultiset::singleton(-coeffs[0]);
        return report;
    }

    const double residual_gate =
        opts_.residual_tolerance * (1.0 + max_modulus(coeffs));
    int iters = 0;
    for (int attempt = 0; attempt <= opts_.restarts; ++attempt) {
        bool update_converged = iterate(coeffs, 0.77 * attempt, iters);
        polish_newton(coeffs, z_);
        PointMultiset roots = cluster_roots(z_);
        double residual = 0.0;
        for (const auto& e : roots.entries) {
            Complex p, dp;
            eval_poly(coeffs, e.point, p, dp);
            residual = std::max(residual, std::abs(p));
        }
        if (update_converged || residual <= residual_gate) {
            report.roots = std::move(roots);
            report.residual = residual;
            report.iterations = iters;
            return report;
        }
    }
    throw Error(ErrorCode::no_convergence,
                "root iteration failed to converge after restarts");
}

double PolyRootSolver::max_root_modulus(std::span<const Complex> coeffs) {
    detail::require(!coeffs.empty(), ErrorCode::invalid_argument,
                    "polynomial must have degree >= 1");
    if (coeffs.size() == 1) return std::abs(coeffs[0]);

    int iters = 0;
    for (int attempt = 0; attempt <= 1; ++attempt) {
        iterate(coeffs, 0.77 * attempt, iters);
        bool ok = true;
        for (Complex z : z_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) ok = false;
        if (ok) return max_modulus(z_);
    }
    throw Error(ErrorCode::no_convergence, "root iteration diverged");
}

}  // namespace schwarz
