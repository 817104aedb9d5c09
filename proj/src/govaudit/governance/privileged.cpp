// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "privileged.hpp"

#include <algorithm>

namespace govaudit::governance {

using namespace govaudit::evm;

std::string to_string(Controller c) {
    switch (c) {
        case Controller::SelfGoverned: return "SelfGoverned";
        case Controller::External: return "External";
        case Controller::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

namespace {

bool is_address_mask(const Instruction& ins) {
    return ins.opcode == OP_PUSH20 &&
           std::all_of(ins.immediate.begin(), ins.immediate.end(),
                       [](uint8_t b) { return b == 0xff; });
}

bool allowed_between_caller_and_eq(uint8_t op) {
    return is_push(op) || is_dup(op) || is_swap(op) || op == OP_AND || op == OP_SLOAD;
}

bool allowed_between_eq_and_jumpi(uint8_t op) {
    return is_push(op) || is_dup(op) || is_swap(op) || op == OP_ISZERO;
}

// nearest comparand in [begin, end): a PUSH20 that is not the address
// mask, or a PUSH immediately feeding an SLOAD
std::optional<ComparandSource> comparand_in_range(const std::vector<Instruction>& ins, size_t begin,
                                                  size_t end, bool prefer_last) {
    std::optional<ComparandSource> found;
    for (size_t i = begin; i < end; ++i) {
        std::optional<ComparandSource> candidate;
        if (ins[i].opcode == OP_PUSH20 && !is_address_mask(ins[i])) {
            ComparandSource src;
            src.kind = ComparandSource::Kind::Push20Immediate;
            std::copy(ins[i].immediate.begin(), ins[i].immediate.end(), src.immediate.bytes.begin());
            candidate = src;
        } else if (ins[i].opcode == OP_SLOAD && i > begin && is_push(ins[i - 1].opcode) &&
                   ins[i - 1].immediate.size() <= 32) {
            ComparandSource src;
            src.kind = ComparandSource::Kind::StorageSlot;
            const auto& imm = ins[i - 1].immediate;
            std::copy(imm.begin(), imm.end(), src.slot.bytes.end() - static_cast<long>(imm.size()));
            candidate = src;
        }
        if (candidate) {
            found = candidate;
            if (!prefer_last)
                return found;
        }
    }
    return found;
}

}  // namespace

std::vector<PrivilegedFunctionFinding> detect_privileged_functions(
    ByteView runtime_bytecode, const Address& governance_address,
    chaindata::ChainDataProvider* state_provider) {
    std::vector<PrivilegedFunctionFinding> findings;

    const auto cfg = build_cfg(runtime_bytecode);
    const auto extraction = extract_functions(cfg);

    for (const auto& function : extraction.functions) {
        const auto& ins = function.instructions;
        // per-block scan; block boundaries are where offsets stop being
        // contiguous or a JUMPDEST begins
        size_t block_start = 0;
        for (size_t i = 0; i <= ins.size(); ++i) {
            const bool boundary =
                i == ins.size() || (i > block_start && (ins[i].opcode == OP_JUMPDEST ||
                                                        is_terminator(ins[i - 1].opcode)));
            if (!boundary)
                continue;

            // [block_start, i) is one block
            for (size_t c = block_start; c < i; ++c) {
                if (ins[c].opcode != OP_CALLER)
                    continue;
                // find the EQ reachable through the allowed window
                size_t eq = c + 1;
                while (eq < i && allowed_between_caller_and_eq(ins[eq].opcode))
                    ++eq;
                if (eq >= i || ins[eq].opcode != OP_EQ)
                    continue;
                // the comparison must steer the block's JUMPI
                size_t j = eq + 1;
                while (j < i && allowed_between_eq_and_jumpi(ins[j].opcode))
                    ++j;
                if (j >= i || ins[j].opcode != OP_JUMPI)
                    continue;

                PrivilegedFunctionFinding finding;
                finding.selector = function.selector;
                finding.caller_offset = ins[c].offset;

                // comparand: between CALLER and EQ first, else the
                // nearest one computed before CALLER in this block
                auto comparand = comparand_in_range(ins, c + 1, eq, /*prefer_last=*/false);
                if (!comparand)
                    comparand = comparand_in_range(ins, block_start, c, /*prefer_last=*/true);
                if (comparand)
                    finding.comparand = *comparand;

                switch (finding.comparand.kind) {
                    case ComparandSource::Kind::Push20Immediate:
                        finding.resolved_address = finding.comparand.immediate;
                        break;
                    case ComparandSource::Kind::StorageSlot:
                        if (state_provider) {
                            const Word value =
                                state_provider->get_storage(governance_address, finding.comparand.slot);
                            finding.resolved_address = value.to_address();
                        }
                        break;
                    case ComparandSource::Kind::Unresolved:
                        break;
                }

                if (finding.resolved_address)
                    finding.controller = *finding.resolved_address == governance_address
                                             ? Controller::SelfGoverned
                                             : Controller::External;
                findings.push_back(std::move(finding));
                break;  // one finding per block
            }
            block_start = i;
        }
    }
    return findings;
}

}  // namespace govaudit::governance
