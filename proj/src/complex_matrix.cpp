// Copyright 2026 The gbssim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbs/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gbs/errors.hpp"

namespace gbs {

namespace {

bool finite(const Complex &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    if (!all_finite()) {
        throw DomainError("matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged initializer rows");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite()) {
        throw DomainError("matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

const Complex &ComplexMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw IndexError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return entries_[i * cols_ + j];
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = std::conj(entries_[k]);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conjugate().transpose(); }

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw DimensionError("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " and " + std::to_string(other.rows_) + "x" +
                             std::to_string(other.cols_));
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("sum of mismatched shapes");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] + other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("difference of mismatched shapes");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] - other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = entries_[k] * scalar;
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) { return m * scalar; }

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex &z : entries_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double ComplexMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) {
            row_sum += std::abs((*this)(i, j));
        }
        best = std::max(best, row_sum);
    }
    return best;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("max_abs_diff of mismatched shapes");
    }
    double best = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        best = std::max(best, std::abs(entries_[k] - other.entries_[k]));
    }
    return best;
}

double ComplexMatrix::asymmetry() const {
    if (!is_square()) {
        throw DimensionError("asymmetry of a non-square matrix");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            best = std::max(best, std::abs((*this)(i, j) - (*this)(j, i)));
        }
    }
    return best;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        throw DimensionError("hermiticity_defect of a non-square matrix");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            best = std::max(best, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return best;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), finite);
}

ComplexMatrix ComplexMatrix::direct_sum(const ComplexMatrix &other) const {
    ComplexMatrix out(rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(i, j) = (*this)(i, j);
        }
    }
    for (std::size_t i = 0; i < other.rows_; ++i) {
        for (std::size_t j = 0; j < other.cols_; ++j) {
            out(rows_ + i, cols_ + j) = other(i, j);
        }
    }
    return out;
}

} // namespace gbs
