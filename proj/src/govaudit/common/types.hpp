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

#include "hex.hpp"

namespace govaudit {

/// 20-byte account address.
struct Address {
    std::array<uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;

    std::string to_hex() const { return to_hex_prefixed(ByteView{bytes.data(), bytes.size()}); }
    bool is_zero() const {
        for (uint8_t b : bytes)
            if (b != 0) return false;
        return true;
    }

    static std::optional<Address> from_hex(std::string_view hex);
};

/// 32-byte word (hashes, storage slots, storage values).
struct Word {
    std::array<uint8_t, 32> bytes{};

    auto operator<=>(const Word&) const = default;

    std::string to_hex() const { return to_hex_prefixed(ByteView{bytes.data(), bytes.size()}); }

    /// Last 20 bytes interpreted as an address (ABI/storage convention).
    Address to_address() const {
        Address a;
        std::copy(bytes.begin() + 12, bytes.end(), a.bytes.begin());
        return a;
    }

    static Word from_address(const Address& a) {
        Word w;
        std::copy(a.bytes.begin(), a.bytes.end(), w.bytes.begin() + 12);
        return w;
    }

    static std::optional<Word> from_hex(std::string_view hex);
};

/// 4-byte function selector.
struct Selector {
    std::array<uint8_t, 4> bytes{};

    auto operator<=>(const Selector&) const = default;

    std::string to_hex() const { return to_hex_prefixed(ByteView{bytes.data(), bytes.size()}); }

    static std::optional<Selector> from_hex(std::string_view hex);
};

}  // namespace govaudit
