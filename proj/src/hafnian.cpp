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

#include "gbs/hafnian.hpp"

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "gbs/errors.hpp"

namespace gbs {

namespace {

std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

// Shared validation: square, near-symmetric, within the dimension cap.
// Returns the symmetrized copy (a + a^t)/2.
ComplexMatrix prepare_hafnian_input(const ComplexMatrix &a, const NumericConfig &cfg,
                                    const char *op) {
    if (!a.is_square()) {
        throw DimensionError(std::string(op) + " requires a square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const std::size_t n = a.rows();
    if (n > 0 && a.asymmetry() > cfg.symmetry_tol) {
        throw DomainError(std::string(op) + ": input asymmetry " +
                          format_double(a.asymmetry()) + " exceeds tolerance " +
                          format_double(cfg.symmetry_tol));
    }
    const std::size_t cap = std::min(cfg.hafnian_dim_cap, NumericConfig::hafnian_hard_cap);
    if (n % 2 == 0 && n > cap) {
        throw ResourceLimitError(std::string(op) + ": dimension " + std::to_string(n) +
                                     " exceeds the cap of " + std::to_string(cap),
                                 n);
    }
    ComplexMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s(i, j) = 0.5 * (a(i, j) + a(j, i));
        }
    }
    return s;
}

// Depth-first walk over perfect matchings. alive holds the unmatched indices
// in increasing order; the front one is paired with every later one in turn,
// so terms are summed in a fixed order.
class PmpEnumerator {
  public:
    explicit PmpEnumerator(const ComplexMatrix &a) : a_(a) {
        scratch_.resize(a.rows() / 2);
        for (std::size_t depth = 0; depth < scratch_.size(); ++depth) {
            scratch_[depth].resize(a.rows() - 2 * (depth + 1));
        }
    }

    Complex run() {
        std::vector<std::size_t> alive(a_.rows());
        for (std::size_t i = 0; i < alive.size(); ++i) {
            alive[i] = i;
        }
        return sum_matchings(alive, 0);
    }

  private:
    Complex sum_matchings(const std::vector<std::size_t> &alive, std::size_t depth) {
        const std::size_t k = alive.size();
        if (k == 0) {
            return Complex(1.0, 0.0);
        }
        const std::size_t i = alive[0];
        std::vector<std::size_t> &rest = scratch_[depth];
        Complex total(0.0, 0.0);
        for (std::size_t pos = 1; pos < k; ++pos) {
            const Complex weight = a_(i, alive[pos]);
            if (weight == Complex(0.0, 0.0)) {
                continue;
            }
            std::size_t w = 0;
            for (std::size_t q = 1; q < k; ++q) {
                if (q != pos) {
                    rest[w++] = alive[q];
                }
            }
            total += weight * sum_matchings(rest, depth + 1);
        }
        return total;
    }

    const ComplexMatrix &a_;
    std::vector<std::vector<std::size_t>> scratch_;
};

ComplexMatrix minor_without_pair(const ComplexMatrix &a, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    ComplexMatrix out(n - 2, n - 2);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) {
            continue;
        }
        std::size_t oj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p || j == q) {
                continue;
            }
            out(oi, oj) = a(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

Complex first_row_expansion(const ComplexMatrix &a) {
    const std::size_t n = a.rows();
    if (n == 0) {
        return Complex(1.0, 0.0);
    }
    Complex total(0.0, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        const Complex weight = a(0, j);
        if (weight == Complex(0.0, 0.0)) {
            continue;
        }
        total += weight * first_row_expansion(minor_without_pair(a, 0, j));
    }
    return total;
}

} // namespace

Complex hafnian_pmp(const ComplexMatrix &a, const NumericConfig &cfg) {
    const ComplexMatrix s = prepare_hafnian_input(a, cfg, "hafnian_pmp");
    if (s.rows() % 2 != 0) {
        return Complex(0.0, 0.0);
    }
    return PmpEnumerator(s).run();
}

Complex hafnian_recursive(const ComplexMatrix &a, const NumericConfig &cfg) {
    const ComplexMatrix s = prepare_hafnian_input(a, cfg, "hafnian_recursive");
    if (s.rows() % 2 != 0) {
        return Complex(0.0, 0.0);
    }
    return first_row_expansion(s);
}

Complex permanent_ryser(const ComplexMatrix &g) {
    if (!g.is_square()) {
        throw DimensionError("permanent_ryser requires a square matrix, got " +
                             std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    }
    const std::size_t n = g.rows();
    if (n == 0) {
        return Complex(1.0, 0.0);
    }
    if (n >= 63) {
        throw ResourceLimitError("permanent_ryser: dimension " + std::to_string(n) +
                                     " exceeds the 2^n subset range",
                                 n);
    }
    // Gray-code walk over column subsets; row sums are updated by the one
    // column that enters or leaves the subset at each step.
    std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    std::uint64_t prev_gray = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t(1) << n); ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t changed = gray ^ prev_gray;
        const std::size_t col = static_cast<std::size_t>(__builtin_ctzll(changed));
        const double dir = (gray & changed) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            row_sums[i] += dir * g(i, col);
        }
        Complex prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            prod *= row_sums[i];
        }
        const bool odd_subset = __builtin_popcountll(gray) & 1;
        total += odd_subset ? -prod : prod;
        prev_gray = gray;
    }
    const bool odd_n = n & 1;
    return odd_n ? -total : total;
}

Complex hafnian_via_permanent_embedding(const ComplexMatrix &g, const NumericConfig &cfg) {
    if (!g.is_square()) {
        throw DimensionError("hafnian_via_permanent_embedding requires a square matrix");
    }
    const std::size_t n = g.rows();
    ComplexMatrix block(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            block(i, n + j) = g(i, j);
            block(n + j, i) = g(i, j);
        }
    }
    return hafnian_pmp(block, cfg);
}

} // namespace gbs
