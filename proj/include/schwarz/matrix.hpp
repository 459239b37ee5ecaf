// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <span>

#include "schwarz/types.hpp"

namespace schwarz {

/// Dense complex square matrix, row-major.  Orders stay small (n <= 8), so
/// everything is plain O(n^3) elimination without pivoting tricks beyond
/// what correctness needs.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n);

    static SquareMatrix identity(int n);
    static SquareMatrix diagonal(std::span<const Complex> d);
    static SquareMatrix from_rows(
        std::initializer_list<std::initializer_list<Complex>> rows);
    /// Row-major flat data; size must be a perfect square.
    static SquareMatrix from_flat(std::span<const Complex> data);

    int order() const { return n_; }
    Complex& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const Complex& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * n_ + c];
    }
    std::span<const Complex> data() const { return a_; }

    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator-(const SquareMatrix& o) const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix scaled(Complex s) const;

    Complex trace() const;
    double max_abs() const;
    double largest_column_norm() const;

    SquareMatrix power(int k) const;  // k >= 0
    /// Gauss-Jordan with partial pivoting; throws singular_factor when a
    /// pivot vanishes.
    SquareMatrix inverse() const;
    /// Numerical rank by full-pivot elimination: count pivots above the
    /// threshold.
    int rank(double threshold) const;

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

}  // namespace schwarz
