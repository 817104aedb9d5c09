// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "address_math.hpp"

#include "../evm/keccak.hpp"
#include "../evm/rlp.hpp"

namespace govaudit::governance {

namespace {

Address last_20(const Word& digest) {
    Address a;
    std::copy(digest.bytes.begin() + 12, digest.bytes.end(), a.bytes.begin());
    return a;
}

}  // namespace

Address compute_create_address(const Address& creator, uint64_t nonce) {
    const Bytes encoded = evm::rlp::encode_list({
        evm::rlp::encode_bytes(ByteView{creator.bytes.data(), creator.bytes.size()}),
        evm::rlp::encode_uint(nonce),
    });
    return last_20(evm::keccak256(ByteView{encoded.data(), encoded.size()}));
}

Address compute_create2_address(const Address& creator, const Word& salt, ByteView init_code) {
    const Word code_hash = evm::keccak256(init_code);
    Bytes preimage;
    preimage.reserve(1 + 20 + 32 + 32);
    preimage.push_back(0xff);
    preimage.insert(preimage.end(), creator.bytes.begin(), creator.bytes.end());
    preimage.insert(preimage.end(), salt.bytes.begin(), salt.bytes.end());
    preimage.insert(preimage.end(), code_hash.bytes.begin(), code_hash.bytes.end());
    return last_20(evm::keccak256(ByteView{preimage.data(), preimage.size()}));
}

}  // namespace govaudit::governance
