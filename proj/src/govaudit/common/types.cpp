// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "types.hpp"

#include <algorithm>

namespace govaudit {

namespace {

template <size_t N>
std::optional<std::array<uint8_t, N>> fixed_from_hex(std::string_view hex) {
    const auto raw = from_hex(hex);
    if (!raw || raw->size() != N)
        return std::nullopt;
    std::array<uint8_t, N> out;
    std::copy(raw->begin(), raw->end(), out.begin());
    return out;
}

}  // namespace

std::optional<Address> Address::from_hex(std::string_view hex) {
    const auto b = fixed_from_hex<20>(hex);
    if (!b) return std::nullopt;
    return Address{*b};
}

std::optional<Word> Word::from_hex(std::string_view hex) {
    const auto b = fixed_from_hex<32>(hex);
    if (!b) return std::nullopt;
    return Word{*b};
}

std::optional<Selector> Selector::from_hex(std::string_view hex) {
    const auto b = fixed_from_hex<4>(hex);
    if (!b) return std::nullopt;
    return Selector{*b};
}

}  // namespace govaudit
