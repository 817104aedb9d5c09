// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disassembler.hpp"

namespace govaudit::evm {

enum class EdgeKind { Fallthrough, Jump, Conditional };

struct Edge {
    size_t from = 0;
    size_t to = 0;
    EdgeKind kind = EdgeKind::Fallthrough;

    bool operator==(const Edge&) const = default;
};

/// Contiguous run of instructions. Blocks partition the instruction
/// sequence: [first, first + count) indexes into the owning CFG's list.
struct BasicBlock {
    size_t id = 0;
    size_t start_offset = 0;
    size_t first = 0;
    size_t count = 0;

    size_t end() const { return first + count; }
};

struct ControlFlowGraph {
    std::vector<Instruction> instructions;
    std::vector<BasicBlock> blocks;
    std::vector<Edge> edges;
    // offsets of JUMP/JUMPI instructions whose target could not be
    // resolved from a directly preceding PUSH
    std::vector<size_t> unresolved_jumps;

    const Instruction& instruction(size_t index) const { return instructions[index]; }
    std::optional<size_t> block_at_offset(size_t offset) const;
    std::vector<size_t> successors(size_t block_id) const;
};

/// Splits at every JUMPDEST and after each terminator. Jump edges resolve
/// only when the target is pushed immediately before the jump; anything
/// else is recorded in unresolved_jumps.
ControlFlowGraph build_cfg(std::vector<Instruction> instructions);
ControlFlowGraph build_cfg(ByteView code);

/// Graphviz rendering for debugging.
std::string to_dot(const ControlFlowGraph& cfg);

}  // namespace govaudit::evm
