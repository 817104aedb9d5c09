// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "../common/hex.hpp"

namespace govaudit::evm::rlp {

/// RLP string item. Single bytes below 0x80 encode as themselves.
Bytes encode_bytes(ByteView data);

/// Integers encode as their minimal big-endian byte string; zero is the
/// empty string (0x80).
Bytes encode_uint(uint64_t value);

/// RLP list from already-encoded items.
Bytes encode_list(const std::vector<Bytes>& encoded_items);

}  // namespace govaudit::evm::rlp
