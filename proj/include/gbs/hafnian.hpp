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

#ifndef GBS_HAFNIAN_HPP
#define GBS_HAFNIAN_HPP

#include "gbs/complex_matrix.hpp"
#include "gbs/config.hpp"

namespace gbs {

// The hafnian of a symmetric 2n x 2n matrix sums, over all (2n-1)!! ways of
// pairing up the indices {0..2n-1}, the product of the entries picked out by
// each pair. It plays the role for general graphs that the permanent plays
// for bipartite ones, and it is what photon-pattern probabilities of Gaussian
// states reduce to.
//
// Conventions shared by both algorithms:
//   - 0x0 input -> 1 (empty product),
//   - odd dimension -> 0 (pair sources cannot fill an odd pattern),
//   - input is symmetrized as (a + a^t)/2 when the asymmetry is within
//     cfg.symmetry_tol; larger asymmetry raises DomainError,
//   - dimension above cfg.hafnian_dim_cap raises ResourceLimitError.

/// Hafnian by direct enumeration of perfect matchings. Matchings are
/// generated by always pairing the lowest unmatched index first, which fixes
/// the summation order and makes results reproducible.
Complex hafnian_pmp(const ComplexMatrix &a, const NumericConfig &cfg = default_config());

/// Hafnian by first-row expansion:
///   Haf(a) = sum_{j>=1} a(0, j) * Haf(a with rows/cols 0 and j removed).
/// Independent code path used to cross-check hafnian_pmp.
Complex hafnian_recursive(const ComplexMatrix &a, const NumericConfig &cfg = default_config());

/// Permanent by Ryser inclusion-exclusion over column subsets with Gray-code
/// updates, O(2^n * n).
Complex permanent_ryser(const ComplexMatrix &g);

/// Evaluates Perm(g) through the hafnian of the 2n x 2n block matrix
/// [[0, g], [g^t, 0]]; must agree with permanent_ryser.
Complex hafnian_via_permanent_embedding(const ComplexMatrix &g,
                                        const NumericConfig &cfg = default_config());

} // namespace gbs

#endif // GBS_HAFNIAN_HPP
