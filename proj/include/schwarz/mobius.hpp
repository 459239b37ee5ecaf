// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "schwarz/types.hpp"

namespace schwarz {

/// Mobius pseudodistance on the unit disk: |z - w| / |1 - conj(w) z|.
/// Both points must lie in the open disk; the value lands in [0, 1).
double mobius_disk(Complex z, Complex w);

/// Distance of z to the center of the ball B(center, radius), normalized to
/// [0, 1): |z - center| / radius.  Only the center-based form is defined.
double mobius_ball(std::span<const Complex> center, double radius,
                   std::span<const Complex> z);

/// Product-domain rule on the polydisk: max over coordinates of mobius_disk.
double mobius_polydisk(std::span<const Complex> z, std::span<const Complex> w);

/// Two-sided Hausdorff distance between finite subsets of the disk, measured
/// with mobius_disk.  Inputs are collapsed to their supports first (points
/// closer than 1e-9 merge), so multiplicities never influence the value.
/// Both directed suprema are always taken; over these finite fibers the
/// one-sided and two-sided values agree, which unit tests pin down.
double hausdorff_mobius(std::span<const Complex> a, std::span<const Complex> b);
double hausdorff_mobius(const PointMultiset& a, const PointMultiset& b);

/// Hausdorff distance in the Euclidean metric; convenience for tests and
/// spectrum comparisons.  No disk constraint.
double hausdorff_euclidean(std::span<const Complex> a,
                           std::span<const Complex> b);

/// Inverse of m = tanh(c): recovers the Caratheodory distance from the
/// Mobius pseudodistance.  Requires 0 <= m < 1.
double caratheodory_from_mobius(double m);

}  // namespace schwarz
