// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "rlp.hpp"

namespace govaudit::evm::rlp {

namespace {

Bytes length_prefix(size_t length, uint8_t short_base, uint8_t long_base) {
    Bytes out;
    if (length <= 55) {
        out.push_back(static_cast<uint8_t>(short_base + length));
        return out;
    }
    Bytes len_be;
    for (size_t v = length; v > 0; v >>= 8)
        len_be.insert(len_be.begin(), static_cast<uint8_t>(v & 0xff));
    out.push_back(static_cast<uint8_t>(long_base + len_be.size()));
    out.insert(out.end(), len_be.begin(), len_be.end());
    return out;
}

}  // namespace

Bytes encode_bytes(ByteView data) {
    if (data.size() == 1 && data[0] < 0x80)
        return Bytes{data[0]};
    Bytes out = length_prefix(data.size(), 0x80, 0xb7);
    out.insert(out.end(), data.begin(), data.end());
    return out;
}

Bytes encode_uint(uint64_t value) {
    Bytes be;
    for (uint64_t v = value; v > 0; v >>= 8)
        be.insert(be.begin(), static_cast<uint8_t>(v & 0xff));
    return encode_bytes(be);
}

Bytes encode_list(const std::vector<Bytes>& encoded_items) {
    size_t payload = 0;
    for (const auto& item : encoded_items)
        payload += item.size();
    Bytes out = length_prefix(payload, 0xc0, 0xf7);
    for (const auto& item : encoded_items)
        out.insert(out.end(), item.begin(), item.end());
    return out;
}

}  // namespace govaudit::evm::rlp
