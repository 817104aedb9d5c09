// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "functions.hpp"

#include <algorithm>
#include <set>

namespace govaudit::evm {

namespace {

struct DispatcherArm {
    size_t block_id;
    Selector selector;
    size_t target_block;
};

// An arm is a block ending in JUMPI whose comparison chain contains
// PUSH4 <sel> followed by EQ, with the jump target pushed right before
// the JUMPI.
std::optional<DispatcherArm> match_arm(const ControlFlowGraph& cfg, const BasicBlock& block) {
    if (block.count < 2)
        return std::nullopt;
    const Instruction& last = cfg.instructions[block.end() - 1];
    if (last.opcode != OP_JUMPI)
        return std::nullopt;

    const Instruction& target_push = cfg.instructions[block.end() - 2];
    if (!is_push(target_push.opcode) || target_push.immediate.size() > 8)
        return std::nullopt;
    size_t target_offset = 0;
    for (uint8_t b : target_push.immediate)
        target_offset = target_offset << 8 | b;
    const auto target_block = cfg.block_at_offset(target_offset);
    if (!target_block || cfg.instructions[cfg.blocks[*target_block].first].opcode != OP_JUMPDEST)
        return std::nullopt;

    std::optional<Selector> last_push4;
    std::optional<Selector> matched;
    for (size_t i = block.first; i + 2 < block.end(); ++i) {
        const Instruction& ins = cfg.instructions[i];
        if (ins.opcode == OP_PUSH4) {
            Selector s;
            std::copy(ins.immediate.begin(), ins.immediate.end(), s.bytes.begin());
            last_push4 = s;
        } else if (ins.opcode == OP_EQ && last_push4) {
            matched = last_push4;
        }
    }
    if (!matched)
        return std::nullopt;
    return DispatcherArm{block.id, *matched, *target_block};
}

std::set<size_t> reachable_from(const ControlFlowGraph& cfg, size_t start,
                                const std::set<size_t>& excluded) {
    std::set<size_t> seen;
    std::vector<size_t> work{start};
    while (!work.empty()) {
        const size_t cur = work.back();
        work.pop_back();
        if (seen.count(cur) || excluded.count(cur))
            continue;
        seen.insert(cur);
        for (size_t next : cfg.successors(cur))
            work.push_back(next);
    }
    return seen;
}

FunctionBody make_body(const ControlFlowGraph& cfg, Selector selector, size_t entry,
                       const std::set<size_t>& blocks) {
    FunctionBody body;
    body.selector = selector;
    body.entry_block = entry;
    body.block_ids.assign(blocks.begin(), blocks.end());
    std::sort(body.block_ids.begin(), body.block_ids.end(), [&](size_t a, size_t b) {
        return cfg.blocks[a].start_offset < cfg.blocks[b].start_offset;
    });
    for (size_t id : body.block_ids) {
        const auto& block = cfg.blocks[id];
        for (size_t i = block.first; i < block.end(); ++i)
            body.instructions.push_back(cfg.instructions[i]);
    }
    return body;
}

}  // namespace

FunctionExtraction extract_functions(const ControlFlowGraph& cfg) {
    FunctionExtraction result;
    if (cfg.blocks.empty())
        return result;

    std::vector<DispatcherArm> arms;
    std::set<size_t> dispatcher_blocks{0};

    // walk the fallthrough chain from the entry block, collecting arms;
    // the dispatcher is this chain of selector comparisons
    size_t cur = 0;
    while (true) {
        if (auto arm = match_arm(cfg, cfg.blocks[cur])) {
            arms.push_back(*arm);
            dispatcher_blocks.insert(cur);
        } else if (cur != 0) {
            break;  // first non-arm block past the chain: fallback entry
        }
        std::optional<size_t> next;
        for (const auto& e : cfg.edges)
            if (e.from == cur && e.kind == EdgeKind::Fallthrough) {
                next = e.to;
                break;
            }
        if (!next)
            break;
        cur = *next;
    }

    if (arms.empty())
        return result;
    result.dispatcher_found = true;

    for (const auto& arm : arms) {
        const auto blocks = reachable_from(cfg, arm.target_block, dispatcher_blocks);
        result.functions.push_back(make_body(cfg, arm.selector, arm.target_block, blocks));
    }

    // residual: whatever the dispatcher falls through to when no
    // selector matched
    if (cur != 0 && !dispatcher_blocks.count(cur)) {
        const auto blocks = reachable_from(cfg, cur, dispatcher_blocks);
        result.residual = make_body(cfg, Selector{}, cur, blocks);
    }
    return result;
}

}  // namespace govaudit::evm
