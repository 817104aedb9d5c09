// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace govaudit {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Lowercase hex without 0x prefix.
std::string to_hex(ByteView data);

/// Hex with 0x prefix, the canonical form used in reports.
std::string to_hex_prefixed(ByteView data);

/// Decodes hex with or without 0x prefix. Empty input yields empty bytes.
/// Returns nullopt on odd length or non-hex characters.
std::optional<Bytes> from_hex(std::string_view hex);

/// True if the string looks like hex data (optionally 0x-prefixed).
bool is_hex_string(std::string_view s);

}  // namespace govaudit
