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

#ifndef GBS_COMPLEX_MATRIX_HPP
#define GBS_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace gbs {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major storage. The one substrate for all
/// state and combinatorial math in this library: covariance matrices,
/// interferometer unitaries, sampling matrices and their submatrices.
class ComplexMatrix {
  public:
    /// 0x0 matrix (determinant 1, hafnian 1 by the empty-product convention).
    ComplexMatrix() = default;

    /// rows x cols matrix of zeros.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// From row-major entries; throws DimensionError on a count mismatch and
    /// DomainError if any entry is NaN or infinite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// From nested braced rows, e.g. {{1, 2}, {2, 3}}; rows must be equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    /// Bounds-checked access; throws IndexError.
    const Complex &at(std::size_t i, std::size_t j) const;

    const std::vector<Complex> &entries() const { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator*(Complex scalar) const;

    /// Max |entry|.
    double max_abs() const;
    /// Max row sum of |entry| (the infinity norm).
    double inf_norm() const;
    /// ||this - other||_max; dimensions must agree.
    double max_abs_diff(const ComplexMatrix &other) const;
    /// ||this - this^t||_max.
    double asymmetry() const;
    /// ||this - this^dagger||_max.
    double hermiticity_defect() const;

    bool all_finite() const;

    /// [this, 0; 0, other] block-diagonal composition.
    ComplexMatrix direct_sum(const ComplexMatrix &other) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m);

} // namespace gbs

#endif // GBS_COMPLEX_MATRIX_HPP
