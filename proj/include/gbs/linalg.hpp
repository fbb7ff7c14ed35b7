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

#ifndef GBS_LINALG_HPP
#define GBS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gbs/complex_matrix.hpp"
#include "gbs/config.hpp"

namespace gbs {

/// Determinant via LU factorization with partial pivoting.
/// The 0x0 determinant is 1 (empty product). A vanishing pivot column makes
/// the determinant exactly 0; it is not an error here.
Complex determinant(const ComplexMatrix &m);

/// Inverse via LU with partial pivoting and per-column substitution.
/// Throws SingularMatrixError (carrying the pivot magnitude) when a pivot
/// falls to cfg.singular_pivot_rel times the max row norm or below.
ComplexMatrix inverse(const ComplexMatrix &m, const NumericConfig &cfg = default_config());

/// log |det m| from the LU pivots. Stays finite where the determinant itself
/// would overflow; -inf for a singular matrix.
double log_abs_determinant(const ComplexMatrix &m);

/// True iff ||m - m^dagger||_max <= tol and the Hermitian part (m + m^dagger)/2
/// admits a complete Cholesky factorization with every pivot > tol.
bool is_hermitian_positive_definite(const ComplexMatrix &m, double tol);

/// Submatrix picked by index multisets: out(i, j) = m(rows[i], cols[j]).
/// Indices may repeat, which is how multiply-occupied detector modes enter
/// the sampling submatrices. Order is preserved as given.
ComplexMatrix submatrix_by_multiset(const ComplexMatrix &m,
                                    const std::vector<std::size_t> &row_indices,
                                    const std::vector<std::size_t> &col_indices);

} // namespace gbs

#endif // GBS_LINALG_HPP
