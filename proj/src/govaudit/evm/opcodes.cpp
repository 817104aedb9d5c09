// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "opcodes.hpp"

#include <array>
#include <string>

namespace govaudit::evm {

namespace {

struct NameTable {
    std::array<std::string, 256> names;

    NameTable() {
        for (size_t i = 0; i < 256; ++i) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "UNKNOWN_0x%02zx", i);
            names[i] = buf;
        }
        auto set = [this](uint8_t op, const char* n) { names[op] = n; };
        set(OP_STOP, "STOP");
        set(OP_ADD, "ADD");
        set(OP_MUL, "MUL");
        set(OP_SUB, "SUB");
        set(OP_DIV, "DIV");
        set(OP_SDIV, "SDIV");
        set(OP_MOD, "MOD");
        set(OP_SMOD, "SMOD");
        set(OP_ADDMOD, "ADDMOD");
        set(OP_MULMOD, "MULMOD");
        set(OP_EXP, "EXP");
        set(OP_SIGNEXTEND, "SIGNEXTEND");
        set(OP_LT, "LT");
        set(OP_GT, "GT");
        set(OP_SLT, "SLT");
        set(OP_SGT, "SGT");
        set(OP_EQ, "EQ");
        set(OP_ISZERO, "ISZERO");
        set(OP_AND, "AND");
        set(OP_OR, "OR");
        set(OP_XOR, "XOR");
        set(OP_NOT, "NOT");
        set(OP_BYTE, "BYTE");
        set(OP_SHL, "SHL");
        set(OP_SHR, "SHR");
        set(OP_SAR, "SAR");
        set(OP_KECCAK256, "KECCAK256");
        set(OP_ADDRESS, "ADDRESS");
        set(OP_BALANCE, "BALANCE");
        set(OP_ORIGIN, "ORIGIN");
        set(OP_CALLER, "CALLER");
        set(OP_CALLVALUE, "CALLVALUE");
        set(OP_CALLDATALOAD, "CALLDATALOAD");
        set(OP_CALLDATASIZE, "CALLDATASIZE");
        set(OP_CALLDATACOPY, "CALLDATACOPY");
        set(OP_CODESIZE, "CODESIZE");
        set(OP_CODECOPY, "CODECOPY");
        set(OP_GASPRICE, "GASPRICE");
        set(OP_EXTCODESIZE, "EXTCODESIZE");
        set(OP_EXTCODECOPY, "EXTCODECOPY");
        set(OP_RETURNDATASIZE, "RETURNDATASIZE");
        set(OP_RETURNDATACOPY, "RETURNDATACOPY");
        set(OP_EXTCODEHASH, "EXTCODEHASH");
        set(OP_BLOCKHASH, "BLOCKHASH");
        set(OP_COINBASE, "COINBASE");
        set(OP_TIMESTAMP, "TIMESTAMP");
        set(OP_NUMBER, "NUMBER");
        set(OP_PREVRANDAO, "PREVRANDAO");
        set(OP_GASLIMIT, "GASLIMIT");
        set(OP_CHAINID, "CHAINID");
        set(OP_SELFBALANCE, "SELFBALANCE");
        set(OP_BASEFEE, "BASEFEE");
        set(OP_BLOBHASH, "BLOBHASH");
        set(OP_BLOBBASEFEE, "BLOBBASEFEE");
        set(OP_POP, "POP");
        set(OP_MLOAD, "MLOAD");
        set(OP_MSTORE, "MSTORE");
        set(OP_MSTORE8, "MSTORE8");
        set(OP_SLOAD, "SLOAD");
        set(OP_SSTORE, "SSTORE");
        set(OP_JUMP, "JUMP");
        set(OP_JUMPI, "JUMPI");
        set(OP_PC, "PC");
        set(OP_MSIZE, "MSIZE");
        set(OP_GAS, "GAS");
        set(OP_JUMPDEST, "JUMPDEST");
        set(OP_TLOAD, "TLOAD");
        set(OP_TSTORE, "TSTORE");
        set(OP_MCOPY, "MCOPY");
        set(OP_PUSH0, "PUSH0");
        for (int i = 1; i <= 32; ++i)
            names[static_cast<size_t>(OP_PUSH0 + i)] = "PUSH" + std::to_string(i);
        for (int i = 1; i <= 16; ++i) {
            names[static_cast<size_t>(OP_DUP1 + i - 1)] = "DUP" + std::to_string(i);
            names[static_cast<size_t>(OP_SWAP1 + i - 1)] = "SWAP" + std::to_string(i);
        }
        for (int i = 0; i <= 4; ++i)
            names[static_cast<size_t>(OP_LOG0 + i)] = "LOG" + std::to_string(i);
        set(OP_CREATE, "CREATE");
        set(OP_CALL, "CALL");
        set(OP_CALLCODE, "CALLCODE");
        set(OP_RETURN, "RETURN");
        set(OP_DELEGATECALL, "DELEGATECALL");
        set(OP_CREATE2, "CREATE2");
        set(OP_STATICCALL, "STATICCALL");
        set(OP_REVERT, "REVERT");
        set(OP_INVALID, "INVALID");
        set(OP_SELFDESTRUCT, "SELFDESTRUCT");
    }
};

const NameTable& table() {
    static const NameTable t;
    return t;
}

}  // namespace

std::string_view opcode_name(uint8_t op) {
    return table().names[op];
}

bool is_invalid_class(uint8_t op) {
    return op == OP_INVALID || table().names[op].starts_with("UNKNOWN");
}

bool is_terminator(uint8_t op) {
    return is_terminator_known(op) || is_invalid_class(op);
}

}  // namespace govaudit::evm
