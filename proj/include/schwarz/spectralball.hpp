// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "schwarz/matrix.hpp"
#include "schwarz/sympoly.hpp"
#include "schwarz/types.hpp"

namespace schwarz {

/// Spectrum of a matrix with both algebraic multiplicities (from root
/// clustering of the characteristic polynomial) and minimal multiplicities
/// m(lambda): the smallest k with rank((A - lambda I)^k) equal to
/// rank((A - lambda I)^(k+1)).  Entries are sorted by (real, imag).
struct SpectrumData {
    PointMultiset eigenvalues;                 // algebraic multiplicities
    std::vector<int> minimal_multiplicities;   // parallel to eigenvalues.entries
    int order = 0;
    /// Set when clustered eigenvalues sit close enough that the rank-based
    /// multiplicities may be unreliable.
    bool cluster_warning = false;
};

/// Monic characteristic polynomial coefficients by the Faddeev-LeVerrier
/// recurrence: returns (1, c_1, ..., c_n) with
/// det(tI - A) = t^n + c_1 t^(n-1) + ... + c_n.
std::vector<Complex> char_poly(const SquareMatrix& a);

SpectrumData spectrum(const SquareMatrix& a);

/// Largest eigenvalue modulus; the gauge of the spectral unit ball.
double spectral_radius(const SquareMatrix& a);

/// Image of A in G^n: elementary symmetric values of the spectrum
/// (cross-checked against the characteristic coefficients).
GnPoint psi(const SquareMatrix& a);

/// Minimal Blaschke product of A evaluated at t:
/// prod over distinct eigenvalues of ((t - lambda)/(1 - conj(lambda) t))
/// raised to the minimal multiplicity.  Requires the spectrum and t inside
/// the open disk.
Complex minimal_blaschke_eval(const SpectrumData& sa, Complex t);
Complex minimal_blaschke_eval(const SquareMatrix& a, Complex t);

/// Matrix version of the minimal Blaschke product of A applied to B:
/// product over distinct eigenvalues (ascending (real, imag)) of
/// (I - conj(lambda) B)^(-m) (B - lambda I)^m, factors multiplied
/// left-to-right.  Annihilates A itself and maps the spectrum of B through
/// the scalar product.
SquareMatrix tilde_map(const SquareMatrix& a, const SquareMatrix& b);

/// Margin of the spectral Schwarz bound at pseudodistance m between base
/// points: m - max over the two mixed eigenvalue products
/// max_j prod_i mobius(mu_i, lambda_j)^{m_i}.  Non-negative when the bound
/// holds.
double bharali_margin(const SpectrumData& sz, const SpectrumData& sw, double m);

}  // namespace schwarz
