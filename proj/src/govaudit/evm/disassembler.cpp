// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "disassembler.hpp"

namespace govaudit::evm {

std::string Instruction::to_string() const {
    std::string s{opcode_name(opcode)};
    if (!immediate.empty()) {
        s += " 0x";
        s += to_hex(immediate);
    }
    return s;
}

std::vector<Instruction> disassemble(ByteView code) {
    std::vector<Instruction> out;
    size_t pc = 0;
    while (pc < code.size()) {
        Instruction ins;
        ins.offset = pc;
        ins.opcode = code[pc];
        const size_t width = push_width(ins.opcode);
        if (width > 0) {
            ins.immediate.assign(width, 0);
            const size_t avail = std::min(width, code.size() - pc - 1);
            for (size_t i = 0; i < avail; ++i)
                ins.immediate[i] = code[pc + 1 + i];
        }
        pc += 1 + width;
        out.push_back(std::move(ins));
    }
    return out;
}

Bytes serialize(const std::vector<Instruction>& instructions) {
    Bytes out;
    for (const auto& ins : instructions) {
        out.push_back(ins.opcode);
        out.insert(out.end(), ins.immediate.begin(), ins.immediate.end());
    }
    return out;
}

std::vector<uint8_t> strip_push_arguments(const std::vector<Instruction>& instructions) {
    std::vector<uint8_t> out;
    out.reserve(instructions.size());
    for (const auto& ins : instructions)
        out.push_back(ins.opcode);
    return out;
}

}  // namespace govaudit::evm
