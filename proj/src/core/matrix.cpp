// Copyright (C) 2026 schwarz-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "schwarz/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace schwarz {

SquareMatrix::SquareMatrix(int n) : n_(n) {
    detail::require(n >= 1, ErrorCode::invalid_argument,
                    "matrix order must be positive");
    a_.assign(static_cast<size_t>(n) * n, 0.0);
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const Complex> d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

SquareMatrix SquareMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    int r = 0;
    for (const auto& row : rows) {
        detail::require(static_cast<int>(row.size()) == m.n_,
                        ErrorCode::invalid_argument, "rows must be square");
        int c = 0;
        for (Complex v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

SquareMatrix SquareMatrix::from_flat(std::span<const Complex> data) {
    int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(data.size()))));
    detail::require(n >= 1 && static_cast<size_t>(n) * n == data.size(),
                    ErrorCode::invalid_argument,
                    "flat data length must be a perfect square");
    SquareMatrix m(n);
    std::copy(data.begin(), data.end(), m.a_.begin());
    return m;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    detail::require(n_ == o.n_, ErrorCode::invalid_argument, "order mismatch");
    SquareMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    detail::require(n_ == o.n_, ErrorCode::invalid_argument, "order mismatch");
    SquareMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    detail::require(n_ == o.n_, ErrorCode::invalid_argument, "order mismatch");
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            Complex aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

SquareMatrix SquareMatrix::scaled(Complex s) const {
    SquareMatrix r(n_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = s * a_[k];
    return r;
}

Complex SquareMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (Complex v : a_) m = std::max(m, std::abs(v));
    return m;
}

double SquareMatrix::largest_column_norm() const {
    double best = 0.0;
    for (int j = 0; j < n_; ++j) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::norm(at(i, j));
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

SquareMatrix SquareMatrix::power(int k) const {
    detail::require(k >= 0, ErrorCode::invalid_argument,
                    "exponent must be non-negative");
    SquareMatrix r = identity(n_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

SquareMatrix SquareMatrix::inverse() const {
    const int n = n_;
    detail::require(n >= 1, ErrorCode::invalid_argument, "empty matrix");
    SquareMatrix w(*this);
    SquareMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(w.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(w.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best))
            throw Error(ErrorCode::singular_factor, "matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Complex d = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = w.at(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                w.at(r, j) -= f * w.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

int SquareMatrix::rank(double threshold) const {
    SquareMatrix w(*this);
    const int n = n_;
    int rank = 0;
    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        double best = threshold;
        for (int i = step; i < n; ++i)
            for (int j = step; j < n; ++j) {
                double v = std::abs(w.at(i, j));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != step)
            for (int j = 0; j < n; ++j) std::swap(w.at(pr, j), w.at(step, j));
        if (pc != step)
            for (int i = 0; i < n; ++i) std::swap(w.at(i, pc), w.at(i, step));
        Complex d = w.at(step, step);
        for (int i = step + 1; i < n; ++i) {
            Complex f = w.at(i, step) / d;
            if (f == 0.0) continue;
            for (int j = step; j < n; ++j) w.at(i, j) -= f * w.at(step, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace schwarz
