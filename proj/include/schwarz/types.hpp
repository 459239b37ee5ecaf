// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace schwarz {

using Complex = std::complex<double>;

enum class ErrorCode {
    invalid_argument,
    outside_domain,
    no_convergence,
    origin_not_fixed,
    singular_factor,
    unbounded_gauge,
    monotonicity_violation,
    degenerate_map,
    io_failure,
    internal
};

/// All recoverable failures surface as this exception; the C layer maps
/// code() onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Finite multiset of complex points, stored as representative + multiplicity.
/// Entries are kept sorted by (real, imag) so downstream iteration order is
/// reproducible.
struct PointMultiset {
    struct Entry {
        Complex point;
        int multiplicity = 1;
    };

    std::vector<Entry> entries;

    int total() const;
    bool empty() const { return entries.empty(); }

    /// Representatives only, multiplicities dropped.
    std::vector<Complex> support() const;
    /// Each representative repeated by its multiplicity.
    std::vector<Complex> expanded() const;

    static PointMultiset singleton(Complex p, int multiplicity = 1);
    static PointMultiset from_points(std::span<const Complex> pts);  // all multiplicity 1
    /// Greedy single-linkage clustering at a fixed radius; representatives are
    /// cluster means.
    static PointMultiset cluster(std::span<const Complex> pts, double radius);
};

namespace detail {

inline double ipow(double x, int p) {
    double r = 1.0;
    for (int k = 0; k < p; ++k) r *= x;
    return r;
}

inline Complex cipow(Complex x, int p) {
    Complex r = 1.0;
    for (int k = 0; k < p; ++k) r *= x;
    return r;
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) throw Error(code, what);
}

inline void require_disk(Complex z, const char* name = "point") {
    if (!(std::abs(z) < 1.0))
        throw Error(ErrorCode::outside_domain,
                    std::string(name) + " must lie in the open unit disk");
}

inline void require_finite(std::span<const Complex> v, const char* name = "input") {
    for (Complex z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::invalid_argument,
                        std::string(name) + " has a non-finite entry");
}

}  // namespace detail

}  // namespace schwarz
