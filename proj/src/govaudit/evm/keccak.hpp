// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "../common/hex.hpp"
#include "../common/types.hpp"

namespace govaudit::evm {

/// Keccak-256 as used by the EVM (original Keccak padding 0x01, not the
/// NIST SHA-3 variant).
Word keccak256(ByteView data);
Word keccak256(std::string_view text);

/// First 4 bytes of keccak256 over the canonical signature text,
/// e.g. "transfer(address,uint256)". The text must already be canonical:
/// no spaces, no parameter names, fully written-out types.
Selector compute_selector(std::string_view canonical_signature);

}  // namespace govaudit::evm
