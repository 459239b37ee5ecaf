// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/spectralball.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/mobius.hpp"
#include "schwarz/polyroots.hpp"

namespace schwarz {

namespace {

PolyRootSolver& shared_solver() {
    thread_local PolyRootSolver solver;
    return solver;
}

void require_inside_ball(const SpectrumData& s, const char* what) {
    for (const auto& e : s.eigenvalues.entries)
        detail::require(std::abs(e.point) < 1.0, ErrorCode::outside_domain, what);
}

}  // namespace

std::vector<Complex> char_poly(const SquareMatrix& a) {
    const int n = a.order();
    detail::require(n >= 1, ErrorCode::invalid_argument, "empty matrix");
    detail::require_finite(a.data(), "matrix");

    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    c[0] = 1.0;
    SquareMatrix m = a;  // Faddeev-LeVerrier: M_1 = A
    c[1] = -m.trace();
    for (int k = 2; k <= n; ++k) {
        SquareMatrix shifted = m + SquareMatrix::identity(n).scaled(c[static_cast<size_t>(k) - 1]);
        m = a * shifted;
        c[static_cast<size_t>(k)] = -m.trace() / static_cast<double>(k);
    }
    return c;
}

SpectrumData spectrum(const SquareMatrix& a) {
    const int n = a.order();
    std::vector<Complex> cp = char_poly(a);
    std::span<const Complex> tail(cp.data() + 1, static_cast<size_t>(n));
    RootSolveReport roots = shared_solver().solve(tail);

    SpectrumData s;
    s.order = n;
    s.eigenvalues = std::move(roots.roots);
    s.minimal_multiplicities.assign(s.eigenvalues.entries.size(), 1);

    double scale = 0.0;
    for (const auto& e : s.eigenvalues.entries)
        scale = std::max(scale, std::abs(e.point));
    scale += 1.0;
    for (size_t i = 0; i < s.eigenvalues.entries.size(); ++i)
        for (size_t j = i + 1; j < s.eigenvalues.entries.size(); ++j)
            if (std::abs(s.eigenvalues.entries[i].point -
                         s.eigenvalues.entries[j].point) < 1e-3 * scale)
                s.cluster_warning = true;

    for (size_t idx = 0; idx < s.eigenvalues.entries.size(); ++idx) {
        const auto& e = s.eigenvalues.entries[idx];
        const int mu = e.multiplicity;
        if (mu == 1) continue;  // minimal multiplicity is pinned to 1

        SquareMatrix b = a - SquareMatrix::identity(n).scaled(e.point);
        auto ranked = [&](const SquareMatrix& p) {
            return p.rank(1e-8 * (1.0 + p.largest_column_norm()));
        };
        SquareMatrix p = b;
        int prev = ranked(p);
        if (prev == n) {
            // No kernel detected despite an eigenvalue cluster; the rank
            // test is operating below its resolution.
            s.cluster_warning = true;
            continue;
        }
        int m = mu;  // rank sequence stabilizes after at most mu steps
        for (int k = 1; k < mu; ++k) {
            p = p * b;
            int next = ranked(p);
            if (next == prev) {
                m = k;
                break;
            }
            prev = next;
        }
        s.minimal_multiplicities[idx] = m;
    }
    return s;
}

double spectral_radius(const SquareMatrix& a) {
    const int n = a.order();
    std::vector<Complex> cp = char_poly(a);
    std::span<const Complex> tail(cp.data() + 1, static_cast<size_t>(n));
    return shared_solver().max_root_modulus(tail);
}

GnPoint psi(const SquareMatrix& a) {
    std::vector<Complex> cp = char_poly(a);
    SpectrumData s = spectrum(a);
    std::vector<Complex> eigs = s.eigenvalues.expanded();
    GnPoint p = symmetrize(eigs);

    // The elementary symmetric values must match the characteristic
    // coefficients up to the alternating sign; root clustering of multiple
    // eigenvalues limits the agreement, hence the loose gate.
    double cscale = 0.0;
    for (Complex c : cp) cscale = std::max(cscale, std::abs(c));
    double sign = -1.0;
    for (int k = 0; k < p.n(); ++k) {
        Complex expect = sign * cp[static_cast<size_t>(k) + 1];
        detail::require(std::abs(p.sigma[static_cast<size_t>(k)] - expect) <=
                            1e-5 * (1.0 + cscale),
                        ErrorCode::internal,
                        "spectrum disagrees with characteristic coefficients");
        sign = -sign;
    }
    return p;
}

Complex minimal_blaschke_eval(const SpectrumData& sa, Complex t) {
    detail::require_disk(t, "t");
    require_inside_ball(sa, "matrix must lie in the open spectral unit ball");
    Complex prod = 1.0;
    for (size_t i = 0; i < sa.eigenvalues.entries.size(); ++i) {
        Complex lambda = sa.eigenvalues.entries[i].point;
        Complex factor = (t - lambda) / (1.0 - std::conj(lambda) * t);
        prod *= detail::cipow(factor, sa.minimal_multiplicities[i]);
    }
    return prod;
}

Complex minimal_blaschke_eval(const SquareMatrix& a, Complex t) {
    return minimal_blaschke_eval(spectrum(a), t);
}

SquareMatrix tilde_map(const SquareMatrix& a, const SquareMatrix& b) {
    detail::require(a.order() == b.order(), ErrorCode::invalid_argument,
                    "matrix orders must match");
    const int n = a.order();
    SpectrumData sa = spectrum(a);
    require_inside_ball(sa, "first matrix must lie in the open spectral unit ball");
    detail::require(spectral_radius(b) < 1.0, ErrorCode::outside_domain,
                    "second matrix must lie in the open spectral unit ball");

    SquareMatrix result = SquareMatrix::identity(n);
    // Entries are (real, imag)-sorted, fixing the factor order.
    for (size_t i = 0; i < sa.eigenvalues.entries.size(); ++i) {
        Complex lambda = sa.eigenvalues.entries[i].point;
        int m = sa.minimal_multiplicities[i];
        SquareMatrix denom =
            SquareMatrix::identity(n) - b.scaled(std::conj(lambda));
        SquareMatrix numer = b - SquareMatrix::identity(n).scaled(lambda);
        result = result * denom.inverse().power(m) * numer.power(m);
    }
    return result;
}

double bharali_margin(const SpectrumData& sz, const SpectrumData& sw, double m) {
    detail::require(m >= 0.0 && m < 1.0, ErrorCode::invalid_argument,
                    "pseudodistance must lie in [0, 1)");
    require_inside_ball(sz, "first spectrum leaves the open unit disk");
    require_inside_ball(sw, "second spectrum leaves the open unit disk");

    auto mixed = [](const SpectrumData& weighted, const SpectrumData& plain) {
        // Weighted side carries the minimal-multiplicity exponents; the
        // plain side only indexes the outer max.
        double best = 0.0;
        for (const auto& anchor : plain.eigenvalues.entries) {
            double prod = 1.0;
            for (size_t i = 0; i < weighted.eigenvalues.entries.size(); ++i) {
                double factor = mobius_disk(
                    weighted.eigenvalues.entries[i].point, anchor.point);
                prod *= detail::ipow(factor, weighted.minimal_multiplicities[i]);
            }
            best = std::max(best, prod);
        }
        return best;
    };
    return m - std::max(mixed(sz, sw), mixed(sw, sz));
}

}  // namespace schwarz
