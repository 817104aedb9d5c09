// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "types.hpp"

namespace govaudit {

/// Unsigned 256-bit integer, little-endian limbs. Covers what calldata
/// decoding and token-amount rendering need; not a general bignum.
struct U256 {
    std::array<uint64_t, 4> limbs{};  // little-endian limb order

    bool operator==(const U256&) const = default;
    std::strong_ordering operator<=>(const U256& other) const {
        for (int i = 3; i >= 0; --i)
            if (limbs[static_cast<size_t>(i)] != other.limbs[static_cast<size_t>(i)])
                return limbs[static_cast<size_t>(i)] <=> other.limbs[static_cast<size_t>(i)];
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return limbs[0] == 0 && limbs[1] == 0 && limbs[2] == 0 && limbs[3] == 0; }
    bool high_bit_set() const { return (limbs[3] >> 63) != 0; }

    static U256 from_u64(uint64_t v) { return U256{{v, 0, 0, 0}}; }
    static U256 from_be_bytes(const Word& w);
    Word to_be_bytes() const;

    /// Fits-in-u64 view; nullopt when the value is wider.
    std::optional<uint64_t> as_u64() const;

    /// Decimal rendering without separators ("0" for zero).
    std::string to_decimal() const;

    /// Two's-complement negation, for int256 rendering.
    U256 negated() const;

    /// Parses a base-10 string of digits. Returns nullopt on bad input
    /// or overflow past 2^256.
    static std::optional<U256> from_decimal(std::string_view text);

    /// 10^exp, exp <= 77. Used for ERC-20 decimals scaling.
    static U256 pow10(unsigned exp);

    /// Quotient and remainder for a non-zero u64 divisor.
    friend std::pair<U256, uint64_t> divmod_u64(const U256& value, uint64_t divisor);
    friend U256 mul_u64(const U256& value, uint64_t factor);  // wraps mod 2^256
    friend U256 add_u64(const U256& value, uint64_t addend);  // wraps mod 2^256
};

/// Quotient and remainder of a division by 10^exp, as decimal strings:
/// used to render a token amount at a given decimals setting.
/// Example: value=1500000000000000000, exp=18 -> {"1", "5"} with the
/// remainder already trimmed of trailing zeros ("" when exact).
struct ScaledDecimal {
    std::string integral;
    std::string fraction;  // trimmed; empty when the division is exact

    std::string to_string() const { return fraction.empty() ? integral : integral + "." + fraction; }
};

ScaledDecimal scale_by_decimals(const U256& value, unsigned decimals);

}  // namespace govaudit
