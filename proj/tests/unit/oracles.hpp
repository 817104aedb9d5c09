// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used as test oracles. These are
// deliberately written with different structure and different constant
// sources than the library code they check: the keccak here derives its
// round constants from the LFSR definition and its rotation offsets from
// the (t+1)(t+2)/2 walk instead of tables; the RLP builds on recursive
// string concatenation; the disassembler computes PUSH widths
// arithmetically with no opcode table.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <govaudit/common/hex.hpp>

namespace oracle {

using govaudit::Bytes;
using govaudit::ByteView;

std::array<uint8_t, 32> keccak256(ByteView data);

std::string rlp_bytes(const std::string& raw);
std::string rlp_uint(uint64_t value);
std::string rlp_list(const std::vector<std::string>& encoded);

struct RefInstruction {
    size_t offset;
    uint8_t opcode;
    Bytes immediate;  // zero-padded to full PUSH width

    bool operator==(const RefInstruction&) const = default;
};

std::vector<RefInstruction> disassemble(ByteView code);

/// Deterministic random bytecode generator for property suites.
Bytes random_bytecode(std::mt19937_64& rng, size_t max_len = 512);

}  // namespace oracle
