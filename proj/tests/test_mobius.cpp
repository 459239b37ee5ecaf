// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "schwarz/mobius.hpp"
#include "schwarz/rng.hpp"

using schwarz::Complex;
using schwarz::mobius_disk;

namespace {

Complex automorphism(Complex a, Complex phase, Complex w) {
    return phase * (w - a) / (Complex(1.0, 0.0) - std::conj(a) * w);
}

}  // namespace

TEST_CASE("disk pseudodistance on known pairs") {
    CHECK(mobius_disk(Complex(0.5, 0.0), 0.0) == 0.5);
    CHECK(mobius_disk(Complex(0.0, -0.25), 0.0) == 0.25);
    // |0.5 - 0.25| / |1 - 0.25 * 0.5| = 0.25 / 0.875 = 2/7
    CHECK(mobius_disk(Complex(0.5, 0.0), Complex(0.25, 0.0)) ==
          doctest::Approx(2.0 / 7.0).epsilon(1e-15));
    CHECK(mobius_disk(Complex(0.3, 0.1), Complex(0.3, 0.1)) == 0.0);
}

TEST_CASE("distance to the origin is exactly the modulus") {
    schwarz::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Complex z = rng.next_in_disk();
        CHECK(mobius_disk(z, 0.0) == std::abs(z));
    }
}

TEST_CASE("symmetry is bitwise") {
    schwarz::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Complex z = rng.next_in_disk();
        Complex w = rng.next_in_disk();
        CHECK(mobius_disk(z, w) == mobius_disk(w, z));
    }
}

TEST_CASE("values stay in [0,1)") {
    schwarz::Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        double m = mobius_disk(rng.next_in_disk(), rng.next_in_disk());
        CHECK(m >= 0.0);
        CHECK(m < 1.0);
    }
}

TEST_CASE("automorphism invariance") {
    schwarz::Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        Complex a = rng.next_in_disk(0.8);
        Complex phase = rng.next_phase();
        Complex z = rng.next_in_disk(0.95);
        Complex w = rng.next_in_disk(0.95);
        double before = mobius_disk(z, w);
        double after = mobius_disk(automorphism(a, phase, z),
                                   automorphism(a, phase, w));
        CHECK(std::abs(after - before) <= 1e-12);
    }
}

TEST_CASE("triangle inequality in the hyperbolic composition form") {
    schwarz::Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        Complex z = rng.next_in_disk(0.95);
        Complex u = rng.next_in_disk(0.95);
        Complex w = rng.next_in_disk(0.95);
        double a = mobius_disk(z, u);
        double b = mobius_disk(u, w);
        double bound = (a + b) / (1.0 + a * b);
        CHECK(mobius_disk(z, w) <= bound + 1e-12);
    }
}

TEST_CASE("sub-mean value for log of the pseudodistance") {
    schwarz::Rng rng(16);
    for (int i = 0; i < 20; ++i) {
        Complex c = rng.next_in_disk(0.5);
        Complex w = rng.next_in_disk(0.9);
        double center = mobius_disk(c, w);
        if (center < 1e-4) continue;
        double r = 0.05 + 0.3 * rng.next_unit();
        double avg = 0.0;
        bool degenerate = false;
        for (int k = 0; k < 256; ++k) {
            double v =
                mobius_disk(c + std::polar(r, 2.0 * M_PI * k / 256.0), w);
            if (v <= 0.0) {
                degenerate = true;
                break;
            }
            avg += std::log(v);
        }
        if (degenerate) continue;
        avg /= 256.0;
        CHECK(std::log(center) <= avg + 1e-6);
    }
}

TEST_CASE("boundary and outside points are rejected") {
    CHECK_THROWS_AS((void)mobius_disk(Complex(1.0, 0.0), 0.0), schwarz::Error);
    CHECK_THROWS_AS((void)mobius_disk(0.0, Complex(0.0, -1.2)), schwarz::Error);
}

TEST_CASE("ball form is the scaled distance to the center") {
    std::vector<Complex> center{{0.0, 0.0}, {0.0, 0.0}};
    std::vector<Complex> z{{0.2, 0.0}, {0.4, 0.0}};
    CHECK(schwarz::mobius_ball(center, 1.0, z) ==
          doctest::Approx(0.4472135954999579).epsilon(1e-15));
    std::vector<Complex> c2{{0.1, 0.0}};
    std::vector<Complex> z2{{0.1, 0.3}};
    CHECK(schwarz::mobius_ball(c2, 0.5, z2) == doctest::Approx(0.6));
    CHECK_THROWS_AS((void)schwarz::mobius_ball(center, 1.0, z2),
                    schwarz::Error);  // dimension mismatch
    CHECK_THROWS_AS((void)schwarz::mobius_ball(c2, 0.0, z2), schwarz::Error);
}

TEST_CASE("polydisk rule takes the coordinate maximum") {
    std::vector<Complex> z{{0.5, 0.0}, {0.1, 0.0}};
    std::vector<Complex> w{{0.0, 0.0}, {0.0, 0.0}};
    CHECK(schwarz::mobius_polydisk(z, w) == 0.5);
}

TEST_CASE("hausdorff distance over the disk metric") {
    std::vector<Complex> a{{0.3, 0.0}, {-0.3, 0.0}};
    std::vector<Complex> b{{0.0, 0.0}};
    CHECK(schwarz::hausdorff_mobius(a, b) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(schwarz::hausdorff_mobius(b, a) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(schwarz::hausdorff_mobius(a, a) == 0.0);

    // Near-duplicates collapse before measuring, so they carry no weight.
    std::vector<Complex> a2{{0.3, 0.0}, {0.3 + 1e-12, 0.0}};
    std::vector<Complex> b2{{0.3, 0.0}};
    CHECK(schwarz::hausdorff_mobius(a2, b2) <= 1e-11);
}

TEST_CASE("euclidean hausdorff has no disk constraint") {
    std::vector<Complex> a{{0.0, 0.0}, {2.0, 0.0}};
    std::vector<Complex> b{{0.0, 0.0}};
    CHECK(schwarz::hausdorff_euclidean(a, b) == 2.0);
}

TEST_CASE("tanh relation round trips") {
    CHECK(schwarz::caratheodory_from_mobius(0.0) == 0.0);
    double c = schwarz::caratheodory_from_mobius(std::tanh(1.0));
    CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
    schwarz::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        double m = 0.99 * rng.next_unit();
        CHECK(std::tanh(schwarz::caratheodory_from_mobius(m)) ==
              doctest::Approx(m).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)schwarz::caratheodory_from_mobius(1.0), schwarz::Error);
    CHECK_THROWS_AS((void)schwarz::caratheodory_from_mobius(-0.1), schwarz::Error);
}
