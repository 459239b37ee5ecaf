// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "schwarz/polyroots.hpp"
#include "schwarz/types.hpp"

namespace schwarz {

/// Point of the symmetrized polydisk G^n in coordinates
/// sigma = (sigma_1, ..., sigma_n), the elementary symmetric values of some
/// unordered n-tuple.  The associated monic polynomial is
/// t^n - sigma_1 t^(n-1) + sigma_2 t^(n-2) - ... + (-1)^n sigma_n.
struct GnPoint {
    std::vector<Complex> sigma;

    int n() const { return static_cast<int>(sigma.size()); }
};

/// Elementary symmetric values of the given points (the symmetrization map
/// onto G^n).  Order-independent up to rounding of the fixed accumulation
/// order used here.
GnPoint symmetrize(std::span<const Complex> pts);

/// Monic coefficient list (c[0] = -sigma_1, ..., c[n-1] = (-1)^n sigma_n) for
/// the polynomial whose root multiset maps to p under symmetrize.
std::vector<Complex> monic_coefficients(const GnPoint& p);

/// Fiber of the symmetrization map over p: root multiset of the associated
/// polynomial, with recovered multiplicities.
RootSolveReport gn_roots(const GnPoint& p);

/// Minkowski gauge of G^n at p: the maximum root modulus.  p lies in G^n
/// exactly when this is < 1.
double gn_minkowski(const GnPoint& p);

/// Image of x under the lift 1 -> n given by the n-th root construction:
/// all coordinates zero except sigma_n = (-1)^(n-1) x.  Its fiber is the set
/// of n-th roots of x.
GnPoint nth_root_map(Complex x, int n);

/// Hausdorff distance (mobius_disk metric) between the fibers over z and z0.
/// Both points must lie in G^n.  Multiplicities are collapsed.
double fiber_distance_h(const GnPoint& z, const GnPoint& z0);

enum class FiberWeighting {
    multiplicity,  // fibers expanded to n entries; repeated points weigh in
    collapsed      // distinct points only
};

/// Product-form fiber proximity: with fibers {z_i} and {a_j},
/// max( max_i prod_j m(z_i, a_j), max_j prod_i m(z_i, a_j) ) where m is
/// mobius_disk.  Symmetric in its arguments, valued in [0, 1).
double h1(const GnPoint& z, const GnPoint& z0,
          FiberWeighting weighting = FiberWeighting::multiplicity);

}  // namespace schwarz
