// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_FIELD_HPP
#define SEMINORM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seminorm {

bool is_prime(std::int64_t p);

/// Characteristic of the coefficient field: 0 (rationals) or a prime p (F_p).
class CharSpec {
public:
    constexpr CharSpec() = default;
    explicit CharSpec(std::int64_t value) : value_(value) {
        if (value != 0 && !is_prime(value))
            throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(value));
    }
    static CharSpec zero() { return CharSpec(); }

    constexpr std::int64_t value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return value_ == 0; }
    /// Characteristic exponent: 1 in characteristic 0, p otherwise.
    constexpr std::int64_t exponent() const noexcept { return value_ == 0 ? 1 : value_; }

    constexpr bool operator==(const CharSpec&) const = default;

private:
    std::int64_t value_ = 0;
};

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace seminorm

#endif
