// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include <vector>

#include "doctest.h"
#include "schwarz/mobius.hpp"
#include "schwarz/spectralball.hpp"

using schwarz::Complex;
using schwarz::SpectrumData;
using schwarz::SquareMatrix;

namespace {

SquareMatrix diag2(double a, double b) {
    return SquareMatrix::diagonal(std::vector<Complex>{{a, 0.0}, {b, 0.0}});
}

}  // namespace

TEST_CASE("characteristic polynomial by trace recurrence") {
    std::vector<Complex> cp = schwarz::char_poly(diag2(0.5, -0.5));
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Complex(1.0, 0.0));
    CHECK(std::abs(cp[1]) <= 1e-15);
    CHECK(std::abs(cp[2] - Complex(-0.25, 0.0)) <= 1e-15);

    // General 2x2: t^2 - (a+d) t + (ad - bc).
    SquareMatrix m = SquareMatrix::from_rows({{Complex(0.2, 0.1), Complex(0.3, 0.0)},
                                              {Complex(-0.1, 0.0), Complex(0.4, -0.2)}});
    std::vector<Complex> cq = schwarz::char_poly(m);
    CHECK(std::abs(cq[1] + (m.at(0, 0) + m.at(1, 1))) <= 1e-15);
    Complex det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    CHECK(std::abs(cq[2] - det) <= 1e-15);
}

TEST_CASE("spectrum separates algebraic and minimal multiplicities") {
    SpectrumData s = schwarz::spectrum(diag2(0.5, -0.5));
    REQUIRE(s.eigenvalues.entries.size() == 2);
    CHECK(s.eigenvalues.entries[0].point.real() == doctest::Approx(-0.5));
    CHECK(s.eigenvalues.entries[1].point.real() == doctest::Approx(0.5));
    CHECK(s.minimal_multiplicities == std::vector<int>{1, 1});
    CHECK_FALSE(s.cluster_warning);

    // Jordan block: algebraic 2, minimal 2.
    SquareMatrix j = SquareMatrix::from_rows({{Complex(0.3, 0.0), Complex(1.0, 0.0)},
                                              {Complex(0.0, 0.0), Complex(0.3, 0.0)}});
    SpectrumData sj = schwarz::spectrum(j);
    REQUIRE(sj.eigenvalues.entries.size() == 1);
    CHECK(sj.eigenvalues.entries[0].multiplicity == 2);
    CHECK(sj.minimal_multiplicities == std::vector<int>{2});

    // Scaled identity: algebraic 2 but diagonalizable, so minimal 1.
    SpectrumData sd = schwarz::spectrum(diag2(0.3, 0.3));
    REQUIRE(sd.eigenvalues.entries.size() == 1);
    CHECK(sd.eigenvalues.entries[0].multiplicity == 2);
    CHECK(sd.minimal_multiplicities == std::vector<int>{1});
}

TEST_CASE("close but distinct eigenvalues raise the cluster warning") {
    SpectrumData s = schwarz::spectrum(diag2(0.3, 0.3 + 1e-5));
    CHECK(s.cluster_warning);
}

TEST_CASE("spectral radius") {
    CHECK(schwarz::spectral_radius(diag2(0.5, -0.25)) ==
          doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("symmetrized image of the spectrum") {
    schwarz::GnPoint p = schwarz::psi(diag2(0.5, -0.5));
    REQUIRE(p.n() == 2);
    CHECK(std::abs(p.sigma[0]) <= 1e-12);
    CHECK(std::abs(p.sigma[1] - Complex(-0.25, 0.0)) <= 1e-12);
}

TEST_CASE("scalar minimal product on known values") {
    Complex v = schwarz::minimal_blaschke_eval(diag2(0.5, -0.5), Complex(0.0, 0.0));
    CHECK(std::abs(v - Complex(-0.25, 0.0)) <= 1e-12);
    // At an eigenvalue the product vanishes.
    Complex at_ev =
        schwarz::minimal_blaschke_eval(diag2(0.5, -0.5), Complex(0.5, 0.0));
    CHECK(std::abs(at_ev) <= 1e-12);
}

TEST_CASE("matrix product at B = 0 matches the scalar value") {
    SquareMatrix z(2);
    SquareMatrix t = schwarz::tilde_map(diag2(0.5, -0.5), z);
    CHECK(std::abs(t.at(0, 0) - Complex(-0.25, 0.0)) <= 1e-12);
    CHECK(std::abs(t.at(1, 1) - Complex(-0.25, 0.0)) <= 1e-12);
    CHECK(std::abs(t.at(0, 1)) <= 1e-12);
}

TEST_CASE("the product annihilates its own matrix") {
    SquareMatrix a = SquareMatrix::from_rows({{Complex(0.5, 0.0), Complex(0.2, 0.0)},
                                              {Complex(0.0, 0.0), Complex(-0.3, 0.0)}});
    CHECK(schwarz::tilde_map(a, a).max_abs() <= 1e-10);

    SquareMatrix j = SquareMatrix::from_rows({{Complex(0.3, 0.0), Complex(0.5, 0.0)},
                                              {Complex(0.0, 0.0), Complex(0.3, 0.0)}});
    CHECK(schwarz::tilde_map(j, j).max_abs() <= 1e-8);
}

TEST_CASE("spectral mapping through the scalar product") {
    SquareMatrix a = diag2(0.5, -0.5);
    SquareMatrix b = diag2(0.1, 0.2);
    SpectrumData sa = schwarz::spectrum(a);
    SquareMatrix mapped = schwarz::tilde_map(a, b);
    std::vector<Complex> got = schwarz::spectrum(mapped).eigenvalues.support();
    std::vector<Complex> want{
        schwarz::minimal_blaschke_eval(sa, Complex(0.1, 0.0)),
        schwarz::minimal_blaschke_eval(sa, Complex(0.2, 0.0))};
    CHECK(schwarz::hausdorff_euclidean(got, want) <= 1e-8);
}

TEST_CASE("schwarz bound margin vanishes for the diagonal embedding") {
    // z -> diag(z, 0) sends the pseudodistance straight onto the mixed
    // product, so the margin is zero.
    SquareMatrix a = diag2(0.4, 0.0);
    SquareMatrix w(2);  // zero matrix
    double m = schwarz::mobius_disk(Complex(0.4, 0.0), Complex(0.0, 0.0));
    double margin =
        schwarz::bharali_margin(schwarz::spectrum(a), schwarz::spectrum(w), m);
    CHECK(std::abs(margin) <= 1e-12);

    // Strictly positive pseudodistance leaves slack for interior spectra.
    double loose = schwarz::bharali_margin(schwarz::spectrum(diag2(0.1, 0.05)),
                                           schwarz::spectrum(w), 0.9);
    CHECK(loose > 0.0);
}
