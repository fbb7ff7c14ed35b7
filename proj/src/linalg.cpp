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

#include "gbs/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "gbs/errors.hpp"

namespace gbs {

namespace {
std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

struct LuFactors {
    ComplexMatrix lu;           // L below the diagonal (unit diagonal), U on and above
    std::vector<std::size_t> pivots;
    int sign = 1;               // permutation parity
    double min_pivot = 0.0;     // smallest |pivot| seen
};

// In-place Doolittle LU with partial pivoting by pivot magnitude.
LuFactors lu_decompose(const ComplexMatrix &m) {
    const std::size_t n = m.rows();
    LuFactors f{m, std::vector<std::size_t>(n), 1, 0.0};
    ComplexMatrix &a = f.lu;
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        double best_mag = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double mag = std::abs(a(i, k));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        f.pivots[k] = best;
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(best, j));
            }
            f.sign = -f.sign;
        }
        if (first || best_mag < f.min_pivot) {
            f.min_pivot = best_mag;
            first = false;
        }
        const Complex pivot = a(k, k);
        if (pivot == Complex(0.0, 0.0)) {
            continue; // column already eliminated; determinant will be 0
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = a(i, k) / pivot;
            a(i, k) = factor;
            if (factor == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
            }
        }
    }
    return f;
}

void require_square(const ComplexMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw DimensionError(std::string(op) + " requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

} // namespace

Complex determinant(const ComplexMatrix &m) {
    require_square(m, "determinant");
    const std::size_t n = m.rows();
    if (n == 0) {
        return Complex(1.0, 0.0);
    }
    const LuFactors f = lu_decompose(m);
    Complex det(static_cast<double>(f.sign), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        det *= f.lu(k, k);
    }
    return det;
}

double log_abs_determinant(const ComplexMatrix &m) {
    require_square(m, "log_abs_determinant");
    const std::size_t n = m.rows();
    if (n == 0) {
        return 0.0;
    }
    const LuFactors f = lu_decompose(m);
    double log_det = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        log_det += std::log(std::abs(f.lu(k, k)));
    }
    return log_det;
}

ComplexMatrix inverse(const ComplexMatrix &m, const NumericConfig &cfg) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    if (n == 0) {
        return ComplexMatrix();
    }
    const double threshold = cfg.singular_pivot_rel * m.inf_norm();
    const LuFactors f = lu_decompose(m);
    if (f.min_pivot <= threshold) {
        throw SingularMatrixError("matrix is singular or nearly singular (pivot " +
                                      format_double(f.min_pivot) + ", threshold " +
                                      format_double(threshold) + ")",
                                  f.min_pivot);
    }
    // Solve A x = e_j column by column through the factors.
    ComplexMatrix inv(n, n);
    std::vector<Complex> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Complex(i == col ? 1.0 : 0.0, 0.0);
        }
        for (std::size_t k = 0; k < n; ++k) { // apply row swaps
            if (f.pivots[k] != k) {
                std::swap(x[k], x[f.pivots[k]]);
            }
        }
        for (std::size_t i = 1; i < n; ++i) { // forward: L y = P e_j
            for (std::size_t k = 0; k < i; ++k) {
                x[i] -= f.lu(i, k) * x[k];
            }
        }
        for (std::size_t i = n; i-- > 0;) { // backward: U x = y
            for (std::size_t k = i + 1; k < n; ++k) {
                x[i] -= f.lu(i, k) * x[k];
            }
            x[i] /= f.lu(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) {
            inv(i, col) = x[i];
        }
    }
    return inv;
}

bool is_hermitian_positive_definite(const ComplexMatrix &m, double tol) {
    require_square(m, "is_hermitian_positive_definite");
    const std::size_t n = m.rows();
    if (m.hermiticity_defect() > tol) {
        return false;
    }
    // Cholesky on the Hermitian part; every pivot must clear tol.
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = h(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            d -= std::norm(l(j, k));
        }
        if (!(d > tol)) {
            return false;
        }
        const double ljj = std::sqrt(d);
        l(j, j) = Complex(ljj, 0.0);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = h(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }
    return true;
}

ComplexMatrix submatrix_by_multiset(const ComplexMatrix &m,
                                    const std::vector<std::size_t> &row_indices,
                                    const std::vector<std::size_t> &col_indices) {
    for (std::size_t r : row_indices) {
        if (r >= m.rows()) {
            throw IndexError("row index " + std::to_string(r) + " outside " +
                             std::to_string(m.rows()) + " rows");
        }
    }
    for (std::size_t c : col_indices) {
        if (c >= m.cols()) {
            throw IndexError("column index " + std::to_string(c) + " outside " +
                             std::to_string(m.cols()) + " columns");
        }
    }
    ComplexMatrix out(row_indices.size(), col_indices.size());
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        for (std::size_t j = 0; j < col_indices.size(); ++j) {
            out(i, j) = m(row_indices[i], col_indices[j]);
        }
    }
    return out;
}

} // namespace gbs
