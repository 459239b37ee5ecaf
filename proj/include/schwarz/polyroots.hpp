// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "schwarz/types.hpp"

namespace schwarz {

struct AberthOptions {
    int max_iterations = 200;
    int restarts = 3;          // additional attempts with rotated starting circles
    double update_tolerance = 1e-12;
    // Success gate on max_k |p(root_k)|, scaled by 1 + max coefficient modulus.
    // Multiple roots stall the update criterion long before it triggers, so
    // residual smallness is the authoritative signal.
    double residual_tolerance = 1e-9;
};

struct RootSolveReport {
    PointMultiset roots;       // multiplicities recovered by clustering
    double residual = 0.0;     // max |p| over cluster representatives
    int iterations = 0;        // summed over attempts
};

/// Aberth-Ehrlich simultaneous solver for monic polynomials
/// p(t) = t^n + c[0] t^(n-1) + ... + c[n-1], n = coeffs.size() >= 1.
///
/// Roots of multiplicity m are only determined to roughly eps^(1/m), so the
/// clustering pass merges with a radius that widens with the candidate
/// multiplicity (floored at 1e-6 * (1 + max |root|)); representatives are
/// cluster means, which cancel the leading error term of a symmetric
/// constellation.
class PolyRootSolver {
public:
    explicit PolyRootSolver(AberthOptions opts = {}) : opts_(opts) {}

    RootSolveReport solve(std::span<const Complex> coeffs);

    /// Max root modulus without polish/clustering; used for bulk membership
    /// screens where only the gauge matters.
    double max_root_modulus(std::span<const Complex> coeffs);

private:
    bool iterate(std::span<const Complex> coeffs, double rotation, int& iters);

    AberthOptions opts_;
    std::vector<Complex> z_;
};

inline RootSolveReport solve_monic(std::span<const Complex> coeffs,
                                   const AberthOptions& opts = {}) {
    PolyRootSolver solver(opts);
    return solver.solve(coeffs);
}

}  // namespace schwarz
