// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/holomaps.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/mobius.hpp"
#include "schwarz/polyroots.hpp"
#include "schwarz/rng.hpp"
#include "schwarz/spectralball.hpp"

namespace schwarz {

namespace {

constexpr std::uint64_t kGenSalt = 0x6d61702d67656e00ULL;

PolyRootSolver& shared_solver() {
    thread_local PolyRootSolver solver;
    return solver;
}

Complex horner(std::span<const Complex> coeffs, Complex x) {
    Complex v = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

// Value without the |x| < 1 precondition; rescaling samples the boundary.
std::vector<Complex> eval_raw(const HoloMap& f, Complex x) {
    switch (f.kind) {
        case MapKind::poly_coords:
        case MapKind::matrix_poly: {
            std::vector<Complex> out(f.coefficients.size());
            for (size_t j = 0; j < f.coefficients.size(); ++j)
                out[j] = horner(f.coefficients[j], x);
            return out;
        }
        case MapKind::lifted_blaschke: {
            std::vector<Complex> fiber(f.lifted.size());
            for (size_t j = 0; j < f.lifted.size(); ++j) {
                const BlaschkeProduct& b = f.lifted[j];
                Complex v = b.phase;
                for (Complex a : b.zeros)
                    v *= (x - a) / (1.0 - std::conj(a) * x);
                fiber[j] = v;
            }
            return symmetrize(fiber).sigma;
        }
    }
    throw Error(ErrorCode::internal, "unknown map kind");
}

// Gauge of a raw value vector in the target, on the fast solver path.
double fast_gauge(const HoloMap& f, std::span<const Complex> value) {
    if (f.target == MapTarget::gn) {
        if (value.size() == 1) return std::abs(value[0]);
        GnPoint p;
        p.sigma.assign(value.begin(), value.end());
        return shared_solver().max_root_modulus(monic_coefficients(p));
    }
    std::vector<Complex> cp = char_poly(SquareMatrix::from_flat(value));
    return shared_solver().max_root_modulus(
        std::span<const Complex>(cp.data() + 1, cp.size() - 1));
}

void validate_blaschke(const BlaschkeProduct& b) {
    double pm = std::abs(b.phase);
    detail::require(std::abs(pm - 1.0) <= 1e-12, ErrorCode::invalid_argument,
                    "phase must be unimodular");
    for (Complex a : b.zeros) detail::require_disk(a, "zero");
}

}  // namespace

std::string_view map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::poly_coords: return "poly-coords";
        case MapKind::lifted_blaschke: return "lifted-blaschke";
        case MapKind::matrix_poly: return "matrix-poly";
    }
    return "unknown";
}

Complex BlaschkeProduct::eval(Complex x) const {
    detail::require_disk(x, "x");
    Complex v = phase;
    for (Complex a : zeros) v *= (x - a) / (1.0 - std::conj(a) * x);
    return v;
}

int HoloMap::dimension() const {
    return target == MapTarget::gn ? n : n * n;
}

std::vector<Complex> HoloMap::eval(Complex x) const {
    detail::require_disk(x, "x");
    return eval_raw(*this, x);
}

SquareMatrix HoloMap::eval_matrix(Complex x) const {
    detail::require(kind == MapKind::matrix_poly, ErrorCode::invalid_argument,
                    "matrix values require a matrix_poly map");
    return SquareMatrix::from_flat(eval(x));
}

std::vector<Complex> HoloMap::lifted_fiber(Complex x) const {
    detail::require(kind == MapKind::lifted_blaschke,
                    ErrorCode::invalid_argument,
                    "explicit fibers require a lifted_blaschke map");
    detail::require_disk(x, "x");
    std::vector<Complex> fiber(lifted.size());
    for (size_t j = 0; j < lifted.size(); ++j) fiber[j] = lifted[j].eval(x);
    return fiber;
}

double HoloMap::target_gauge(Complex x) const {
    std::vector<Complex> v = eval(x);
    if (target == MapTarget::gn) {
        GnPoint p;
        p.sigma = std::move(v);
        return gn_minkowski(p);
    }
    return spectral_radius(SquareMatrix::from_flat(v));
}

HoloMap HoloMap::polynomial(MapTarget target, int n,
                            std::vector<std::vector<Complex>> coefficients) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    size_t want = target == MapTarget::gn ? static_cast<size_t>(n)
                                          : static_cast<size_t>(n) * n;
    detail::require(coefficients.size() == want, ErrorCode::invalid_argument,
                    "coordinate polynomial count must match the target");
    for (const auto& c : coefficients) {
        detail::require(!c.empty(), ErrorCode::invalid_argument,
                        "coordinate polynomials must be non-empty");
        detail::require_finite(c, "coefficients");
    }
    HoloMap f;
    f.kind = target == MapTarget::gn ? MapKind::poly_coords
                                     : MapKind::matrix_poly;
    f.target = target;
    f.n = n;
    f.coefficients = std::move(coefficients);
    return f;
}

HoloMap HoloMap::lifted_map(std::vector<BlaschkeProduct> coords) {
    detail::require(!coords.empty(), ErrorCode::invalid_argument,
                    "lifted maps need at least one coordinate");
    for (const auto& b : coords) validate_blaschke(b);
    HoloMap f;
    f.kind = MapKind::lifted_blaschke;
    f.target = MapTarget::gn;
    f.n = static_cast<int>(coords.size());
    f.lifted = std::move(coords);
    return f;
}

HoloMap HoloMap::nth_root(int n) {
    detail::require(n >= 1, ErrorCode::invalid_argument, "n must be positive");
    std::vector<std::vector<Complex>> coeffs(static_cast<size_t>(n),
                                             std::vector<Complex>{0.0});
    coeffs.back() = {0.0, (n % 2 == 0) ? Complex(-1.0) : Complex(1.0)};
    HoloMap f = polynomial(MapTarget::gn, n, std::move(coeffs));
    return f;
}

HoloMap random_map(std::uint64_t seed, MapKind kind, int n, int degree,
                   bool fix_origin) {
    detail::require(n >= 1 && n <= 8, ErrorCode::invalid_argument,
                    "n must lie in [1, 8]");
    detail::require(degree >= 1 && degree <= 12, ErrorCode::invalid_argument,
                    "degree must lie in [1, 12]");

    for (std::uint64_t sub = 0; sub < 16; ++sub) {
        Rng rng(Rng::mix(seed, kGenSalt + sub));
        HoloMap f;
        f.kind = kind;
        f.target =
            kind == MapKind::matrix_poly ? MapTarget::spectral : MapTarget::gn;
        f.n = n;
        f.seed = seed;

        if (kind == MapKind::lifted_blaschke) {
            f.lifted.resize(static_cast<size_t>(n));
            for (auto& b : f.lifted) {
                b.phase = rng.next_phase();
                b.zeros.resize(static_cast<size_t>(degree));
                for (auto& z : b.zeros) z = rng.next_in_disk();
                if (fix_origin) b.zeros[0] = 0.0;
            }
            return f;  // values live in the closed product of disk values < 1
        }

        size_t coords = f.kind == MapKind::matrix_poly
                            ? static_cast<size_t>(n) * n
                            : static_cast<size_t>(n);
        f.coefficients.assign(coords, {});
        for (auto& poly : f.coefficients) {
            poly.resize(static_cast<size_t>(degree) + 1);
            for (auto& c : poly) c = rng.next_in_disk();
            if (fix_origin) poly[0] = 0.0;
        }

        // Boundary gauge estimate drives the shrink factor.
        double s = 0.0;
        const double two_pi = 6.283185307179586476925286766559;
        for (int k = 0; k < 512; ++k) {
            Complex x = std::polar(1.0, two_pi * k / 512.0);
            s = std::max(s, fast_gauge(f, eval_raw(f, x)));
        }
        if (s == 0.0) continue;  // identically zero; next sub-seed

        double c = 1.0 / (s + 0.01);
        for (size_t j = 0; j < f.coefficients.size(); ++j) {
            double factor = f.kind == MapKind::matrix_poly
                                ? c
                                : detail::ipow(c, static_cast<int>(j) + 1);
            for (auto& v : f.coefficients[j]) v *= factor;
        }
        return f;
    }
    throw Error(ErrorCode::degenerate_map,
                "map generation degenerated for every sub-seed");
}

bool audit_membership(const HoloMap& f, int points, std::uint64_t audit_seed) {
    detail::require(points >= 1, ErrorCode::invalid_argument,
                    "audit needs at least one point");
    Rng rng(audit_seed);
    for (int k = 0; k < points; ++k) {
        Complex x = rng.next_in_disk();
        if (!(fast_gauge(f, eval_raw(f, x)) < 1.0)) return false;
    }
    return true;
}

double disk_contraction_margin(const HoloMap& g, Complex x, Complex y) {
    detail::require(g.target == MapTarget::gn && g.n == 1,
                    ErrorCode::invalid_argument,
                    "contraction margins require a disk-valued map");
    double inner = mobius_disk(x, y);
    Complex gx = g.eval(x)[0];
    Complex gy = g.eval(y)[0];
    return inner - mobius_disk(gx, gy);
}

}  // namespace schwarz
