// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "builder.hpp"
#include "keccak.hpp"

namespace govaudit::evm::synth {

/// One dispatcher arm: selector plus the body emitted behind its
/// JUMPDEST. Bodies must end in a terminator of their own.
struct SynthFunction {
    Selector selector;
    Program body;
};

/// Assembles a runtime-bytecode skeleton in the shape solc emits: a
/// calldata-selector prologue, one PUSH4/EQ/JUMPI arm per function, a
/// revert fallback, then the bodies.
inline Bytes dispatcher_contract(const std::vector<SynthFunction>& functions) {
    Program p;
    // prologue: load the selector word from calldata
    p.push(uint64_t{0}).op(OP_CALLDATALOAD).push(uint64_t{0xe0}).op(OP_SHR);
    for (size_t i = 0; i < functions.size(); ++i) {
        p.op(OP_DUP1)
            .push(ByteView{functions[i].selector.bytes.data(), 4})
            .op(OP_EQ)
            .push_label("fn" + std::to_string(i))
            .op(OP_JUMPI);
    }
    // fallback: revert
    p.push(uint64_t{0}).push(uint64_t{0}).op(OP_REVERT);
    for (size_t i = 0; i < functions.size(); ++i) {
        p.label("fn" + std::to_string(i));
        p.append(functions[i].body, "fn" + std::to_string(i) + "/");
    }
    return p.assemble();
}

inline SynthFunction function_from_signature(const std::string& canonical_signature, Program body) {
    return {compute_selector(canonical_signature), std::move(body)};
}

/// Minimal terminating body: stores a marker and stops. The marker makes
/// bodies distinguishable in similarity profiles.
inline Program trivial_body(uint64_t marker) {
    Program p;
    p.push(marker).push(uint64_t{0}).op(OP_MSTORE).op(OP_STOP);
    return p;
}

}  // namespace govaudit::evm::synth
