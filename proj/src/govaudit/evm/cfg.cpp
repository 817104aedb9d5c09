// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cfg.hpp"

#include <map>
#include <sstream>

namespace govaudit::evm {

namespace {

std::optional<size_t> push_value_as_offset(const Instruction& ins) {
    if (!is_push(ins.opcode) || ins.immediate.size() > 8)
        return std::nullopt;
    size_t v = 0;
    for (uint8_t b : ins.immediate)
        v = v << 8 | b;
    return v;
}

}  // namespace

std::optional<size_t> ControlFlowGraph::block_at_offset(size_t offset) const {
    for (const auto& b : blocks)
        if (b.start_offset == offset)
            return b.id;
    return std::nullopt;
}

std::vector<size_t> ControlFlowGraph::successors(size_t block_id) const {
    std::vector<size_t> out;
    for (const auto& e : edges)
        if (e.from == block_id)
            out.push_back(e.to);
    return out;
}

ControlFlowGraph build_cfg(std::vector<Instruction> instructions) {
    ControlFlowGraph cfg;
    cfg.instructions = std::move(instructions);

    // block boundaries: instruction indices that start a block
    std::vector<size_t> leaders;
    for (size_t i = 0; i < cfg.instructions.size(); ++i) {
        const auto& ins = cfg.instructions[i];
        if (i == 0 || ins.opcode == OP_JUMPDEST || is_terminator(cfg.instructions[i - 1].opcode))
            leaders.push_back(i);
    }

    std::map<size_t, size_t> block_by_offset;
    for (size_t b = 0; b < leaders.size(); ++b) {
        BasicBlock block;
        block.id = b;
        block.first = leaders[b];
        block.count = (b + 1 < leaders.size() ? leaders[b + 1] : cfg.instructions.size()) - leaders[b];
        block.start_offset = cfg.instructions[block.first].offset;
        block_by_offset[block.start_offset] = b;
        cfg.blocks.push_back(block);
    }

    for (const auto& block : cfg.blocks) {
        const Instruction& last = cfg.instructions[block.end() - 1];
        const bool has_next_block = block.id + 1 < cfg.blocks.size();

        if (last.opcode == OP_JUMP || last.opcode == OP_JUMPI) {
            std::optional<size_t> target;
            if (block.count >= 2)
                target = push_value_as_offset(cfg.instructions[block.end() - 2]);
            const auto kind = last.opcode == OP_JUMP ? EdgeKind::Jump : EdgeKind::Conditional;
            if (target && block_by_offset.count(*target) &&
                cfg.instructions[cfg.blocks[block_by_offset[*target]].first].opcode == OP_JUMPDEST) {
                cfg.edges.push_back({block.id, block_by_offset[*target], kind});
            } else {
                cfg.unresolved_jumps.push_back(last.offset);
            }
            if (last.opcode == OP_JUMPI && has_next_block)
                cfg.edges.push_back({block.id, block.id + 1, EdgeKind::Fallthrough});
        } else if (!is_terminator(last.opcode) && has_next_block) {
            cfg.edges.push_back({block.id, block.id + 1, EdgeKind::Fallthrough});
        }
    }
    return cfg;
}

ControlFlowGraph build_cfg(ByteView code) {
    return build_cfg(disassemble(code));
}

std::string to_dot(const ControlFlowGraph& cfg) {
    std::ostringstream out;
    out << "digraph cfg {\n  node [shape=box fontname=monospace];\n";
    for (const auto& block : cfg.blocks) {
        out << "  b" << block.id << " [label=\"block " << block.id << " @" << block.start_offset
            << "\\l";
        for (size_t i = block.first; i < block.end(); ++i)
            out << cfg.instructions[i].to_string() << "\\l";
        out << "\"];\n";
    }
    for (const auto& e : cfg.edges) {
        const char* style = e.kind == EdgeKind::Fallthrough ? "solid"
                            : e.kind == EdgeKind::Jump      ? "bold"
                                                            : "dashed";
        out << "  b" << e.from << " -> b" << e.to << " [style=" << style << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace govaudit::evm
