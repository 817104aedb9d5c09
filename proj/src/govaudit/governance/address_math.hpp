// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "../common/hex.hpp"
#include "../common/types.hpp"

namespace govaudit::governance {

/// CREATE address: last 20 bytes of keccak256(rlp([creator, nonce])).
Address compute_create_address(const Address& creator, uint64_t nonce);

/// CREATE2 address: last 20 bytes of
/// keccak256(0xff ++ creator ++ salt ++ keccak256(init_code)).
/// Equal inputs give equal addresses: the redeploy-at-same-address
/// premise of metamorphic contracts.
Address compute_create2_address(const Address& creator, const Word& salt, ByteView init_code);

}  // namespace govaudit::governance
