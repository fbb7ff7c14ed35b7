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

#ifndef GBS_BIGINT_HPP
#define GBS_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gbs {

/// Unsigned big integer on base-1e9 limbs. Just enough arithmetic for exact
/// binomial coefficients and their squares; sampling-space sizes outgrow
/// 64 bits already around 8 photons.
class BigUint {
  public:
    BigUint() = default; // zero
    explicit BigUint(std::uint64_t value);

    BigUint &mul_small(std::uint32_t factor);
    /// Divide by a factor that is known to divide exactly; throws DomainError
    /// if a remainder shows up.
    BigUint &divexact_small(std::uint32_t divisor);
    BigUint operator*(const BigUint &other) const;

    bool operator==(const BigUint &other) const { return limbs_ == other.limbs_; }

    std::string to_string() const;

    /// Exact C(n, k) via alternating multiply/divide steps.
    static BigUint binomial(std::uint64_t n, std::uint64_t k);

  private:
    void trim();

    std::vector<std::uint32_t> limbs_; // little-endian, base 1e9; empty = 0
};

} // namespace gbs

#endif // GBS_BIGINT_HPP
