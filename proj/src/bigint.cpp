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

#include "gbs/bigint.hpp"

#include "gbs/errors.hpp"

namespace gbs {

namespace {
constexpr std::uint64_t kBase = 1000000000ULL;
} // namespace

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

BigUint &BigUint::mul_small(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (std::uint32_t &limb : limbs_) {
        const std::uint64_t v = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(v % kBase);
        carry = v / kBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
    return *this;
}

BigUint &BigUint::divexact_small(std::uint32_t divisor) {
    if (divisor == 0) {
        throw DomainError("division by zero");
    }
    std::uint64_t remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t v = remainder * kBase + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(v / divisor);
        remainder = v % divisor;
    }
    if (remainder != 0) {
        throw DomainError("divexact_small: division left a remainder");
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint &other) const {
    if (limbs_.empty() || other.limbs_.empty()) {
        return BigUint();
    }
    BigUint out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            const std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                    out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry != 0) {
            const std::uint64_t v = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
            ++k;
        }
    }
    out.trim();
    return out;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) {
        return "0";
    }
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string group = std::to_string(limbs_[i]);
        out += std::string(9 - group.size(), '0') + group;
    }
    return out;
}

BigUint BigUint::binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return BigUint();
    }
    if (k > n - k) {
        k = n - k;
    }
    if (n >= kBase) {
        // factors must fit one limb for mul_small
        throw DomainError("binomial argument too large for exact evaluation");
    }
    BigUint result(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        result.mul_small(static_cast<std::uint32_t>(n - i));
        result.divexact_small(static_cast<std::uint32_t>(i + 1));
    }
    return result;
}

} // namespace gbs
