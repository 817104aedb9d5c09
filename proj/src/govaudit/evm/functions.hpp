// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "../common/types.hpp"
#include "cfg.hpp"

namespace govaudit::evm {

/// A selector-dispatched function: the blocks reachable from its
/// dispatcher arm's jump target, dispatcher blocks excluded.
struct FunctionBody {
    Selector selector;
    size_t entry_block = 0;
    std::vector<size_t> block_ids;            // sorted by start offset
    std::vector<Instruction> instructions;    // ordered by offset
};

struct FunctionExtraction {
    bool dispatcher_found = false;
    std::vector<FunctionBody> functions;
    // blocks past the last dispatcher arm: fallback/receive handling,
    // kept for completeness but outside selector-based analyses
    std::optional<FunctionBody> residual;
};

/// Recognizes the PUSH4 <selector> ... EQ ... JUMPI dispatcher pattern.
/// Contracts without it yield an empty list with dispatcher_found=false.
FunctionExtraction extract_functions(const ControlFlowGraph& cfg);

}  // namespace govaudit::evm
