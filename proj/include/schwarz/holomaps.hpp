// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "schwarz/matrix.hpp"
#include "schwarz/sympoly.hpp"
#include "schwarz/types.hpp"

namespace schwarz {

enum class MapKind {
    poly_coords,      // one coefficient polynomial per target coordinate
    lifted_blaschke,  // n Blaschke products composed with symmetrize
    matrix_poly       // one coefficient polynomial per matrix entry
};

/// Target of a generated map.  G^1 is the disk itself, so disk-valued
/// families are simply gn with n = 1.
enum class MapTarget { gn, spectral };

std::string_view map_kind_name(MapKind k);

/// Finite Blaschke product with an extra unimodular phase; maps the open
/// disk into itself by construction.
struct BlaschkeProduct {
    Complex phase{1.0, 0.0};
    std::vector<Complex> zeros;  // all inside the open disk

    Complex eval(Complex x) const;
};

/// Holomorphic map of the open unit disk into G^n or the spectral unit
/// ball.  Construction (and the seeded generator below) guarantees the
/// image stays inside the open target.
struct HoloMap {
    MapKind kind = MapKind::poly_coords;
    MapTarget target = MapTarget::gn;
    int n = 1;
    std::uint64_t seed = 0;

    // poly_coords: coefficients[j][k] is the x^k coefficient of coordinate j
    // (n coordinates).  matrix_poly: n*n entry polynomials, row-major.
    std::vector<std::vector<Complex>> coefficients;
    // lifted_blaschke only.
    std::vector<BlaschkeProduct> lifted;

    /// Length of eval output: n for gn targets, n*n for spectral.
    int dimension() const;

    /// Value at x (|x| < 1 enforced), flattened for spectral targets.
    std::vector<Complex> eval(Complex x) const;

    /// Matrix value; matrix_poly maps only.
    SquareMatrix eval_matrix(Complex x) const;

    /// For lifted maps the fiber over eval(x) is available without root
    /// extraction: the tuple of Blaschke values.  Exact up to arithmetic
    /// rounding, unlike the solver route.
    std::vector<Complex> lifted_fiber(Complex x) const;

    /// Gauge of eval(x) in the target (max root modulus or spectral radius).
    double target_gauge(Complex x) const;

    static HoloMap polynomial(MapTarget target, int n,
                              std::vector<std::vector<Complex>> coefficients);
    static HoloMap lifted_map(std::vector<BlaschkeProduct> coords);
    /// The n-th root construction x -> (0, ..., 0, (-1)^(n-1) x) packaged as
    /// a poly_coords map.
    static HoloMap nth_root(int n);
};

/// Seeded map generator.  Coefficients are drawn from the unit disk, then
/// the map is rescaled by 1/(s + 0.01) per coordinate weight, where s is the
/// maximum target gauge over 512 boundary samples.  Identically-zero draws
/// regenerate with the next sub-seed (degenerate-map error after 16 tries).
/// Bit-reproducible for fixed arguments.
HoloMap random_map(std::uint64_t seed, MapKind kind, int n, int degree,
                   bool fix_origin);

/// Dense membership screen: target gauge < 1 on `points` seeded interior
/// samples.  Returns false on the first miss.
bool audit_membership(const HoloMap& f, int points, std::uint64_t audit_seed);

/// Margin of the distance-decreasing property of a disk-valued map
/// (target gn, n = 1): mobius(x, y) - mobius(g(x), g(y)).
double disk_contraction_margin(const HoloMap& g, Complex x, Complex y);

}  // namespace schwarz
