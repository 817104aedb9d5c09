// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "u256.hpp"

#include <algorithm>

namespace govaudit {

U256 U256::from_be_bytes(const Word& w) {
    U256 v;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t acc = 0;
        for (int i = 0; i < 8; ++i)
            acc = acc << 8 | w.bytes[static_cast<size_t>((3 - limb) * 8 + i)];
        v.limbs[static_cast<size_t>(limb)] = acc;
    }
    return v;
}

Word U256::to_be_bytes() const {
    Word w;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t acc = limbs[static_cast<size_t>(limb)];
        for (int i = 7; i >= 0; --i) {
            w.bytes[static_cast<size_t>((3 - limb) * 8 + i)] = static_cast<uint8_t>(acc & 0xff);
            acc >>= 8;
        }
    }
    return w;
}

std::optional<uint64_t> U256::as_u64() const {
    if (limbs[1] != 0 || limbs[2] != 0 || limbs[3] != 0)
        return std::nullopt;
    return limbs[0];
}

std::pair<U256, uint64_t> divmod_u64(const U256& value, uint64_t divisor) {
    U256 quotient;
    unsigned __int128 rem = 0;
    for (int i = 3; i >= 0; --i) {
        const unsigned __int128 cur = (rem << 64) | value.limbs[static_cast<size_t>(i)];
        quotient.limbs[static_cast<size_t>(i)] = static_cast<uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    return {quotient, static_cast<uint64_t>(rem)};
}

U256 mul_u64(const U256& value, uint64_t factor) {
    U256 out;
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < 4; ++i) {
        const unsigned __int128 cur = static_cast<unsigned __int128>(value.limbs[i]) * factor + carry;
        out.limbs[i] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
    }
    return out;
}

U256 add_u64(const U256& value, uint64_t addend) {
    U256 out = value;
    unsigned __int128 carry = addend;
    for (size_t i = 0; i < 4 && carry != 0; ++i) {
        const unsigned __int128 cur = static_cast<unsigned __int128>(out.limbs[i]) + carry;
        out.limbs[i] = static_cast<uint64_t>(cur);
        carry = cur >> 64;
    }
    return out;
}

std::string U256::to_decimal() const {
    if (is_zero())
        return "0";
    std::string digits;
    U256 cur = *this;
    while (!cur.is_zero()) {
        auto [q, r] = divmod_u64(cur, 10);
        digits.push_back(static_cast<char>('0' + r));
        cur = q;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

U256 U256::negated() const {
    U256 out;
    for (size_t i = 0; i < 4; ++i)
        out.limbs[i] = ~limbs[i];
    return add_u64(out, 1);
}

std::optional<U256> U256::from_decimal(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    U256 v;
    for (char c : text) {
        if (c < '0' || c > '9')
            return std::nullopt;
        const U256 shifted = mul_u64(v, 10);
        // overflow check: shifting back must reproduce the value
        if (divmod_u64(shifted, 10).first != v)
            return std::nullopt;
        v = add_u64(shifted, static_cast<uint64_t>(c - '0'));
        if (v < shifted)
            return std::nullopt;
    }
    return v;
}

U256 U256::pow10(unsigned exp) {
    U256 v = from_u64(1);
    for (unsigned i = 0; i < exp; ++i)
        v = mul_u64(v, 10);
    return v;
}

ScaledDecimal scale_by_decimals(const U256& value, unsigned decimals) {
    std::string digits = value.to_decimal();
    if (decimals == 0)
        return {digits, ""};
    if (digits.size() <= decimals)
        digits.insert(0, decimals - digits.size() + 1, '0');
    std::string integral = digits.substr(0, digits.size() - decimals);
    std::string fraction = digits.substr(digits.size() - decimals);
    while (!fraction.empty() && fraction.back() == '0')
        fraction.pop_back();
    return {integral, fraction};
}

}  // namespace govaudit
