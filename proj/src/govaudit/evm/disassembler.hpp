// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "../common/hex.hpp"
#include "opcodes.hpp"

namespace govaudit::evm {

/// One decoded instruction. For a PUSHn the immediate holds exactly n
/// bytes; a PUSH truncated by the end of code is zero-padded to its full
/// width, mirroring how the EVM reads past the end of code.
struct Instruction {
    size_t offset = 0;
    uint8_t opcode = 0;
    Bytes immediate;

    bool operator==(const Instruction&) const = default;

    size_t encoded_size() const { return 1 + immediate.size(); }
    std::string to_string() const;
};

/// Total function: every byte sequence disassembles. Unassigned opcode
/// bytes are kept as INVALID-class instructions.
std::vector<Instruction> disassemble(ByteView code);

/// Inverse of disassemble up to the zero padding of a truncated trailing
/// PUSH immediate.
Bytes serialize(const std::vector<Instruction>& instructions);

/// Opcode ids in order with all PUSH immediates dropped.
std::vector<uint8_t> strip_push_arguments(const std::vector<Instruction>& instructions);

}  // namespace govaudit::evm
