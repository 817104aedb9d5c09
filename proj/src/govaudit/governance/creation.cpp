// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "creation.hpp"

#include <set>

#include "../common/errors.hpp"
#include "../evm/disassembler.hpp"

namespace govaudit::governance {

using chaindata::CreationKind;

CreationChain build_creation_chain(const Address& address, chaindata::ChainDataProvider& provider) {
    CreationChain chain;
    std::set<Address> visited;

    Address current = address;
    while (true) {
        if (visited.count(current))
            throw IntegrityError("creator cycle detected at " + current.to_hex());
        visited.insert(current);

        const auto info = provider.get_creation(current);
        if (!info) {
            if (chain.steps.empty())
                throw DataError("no creation record for " + current.to_hex());
            // an address without a creation record and without code is
            // the chain's originating EOA
            if (!provider.get_code(current).empty())
                throw DataError("contract " + current.to_hex() + " has code but no creation record");
            chain.terminal_eoa = current;
            return chain;
        }

        chain.steps.push_back({current, info->creator, info->kind, info->tx_id});
        current = info->creator;
    }
}

Destructibility destructibility_of(ByteView runtime_bytecode) {
    Destructibility d;
    for (const auto& ins : evm::disassemble(runtime_bytecode)) {
        if (ins.opcode == evm::OP_SELFDESTRUCT)
            d.has_selfdestruct = true;
        else if (ins.opcode == evm::OP_DELEGATECALL)
            d.has_delegatecall = true;
    }
    return d;
}

bool can_self_destruct(ByteView runtime_bytecode) {
    return destructibility_of(runtime_bytecode).can_destruct();
}

MutabilityVerdict assess_mutability(const CreationChain& chain,
                                    chaindata::ChainDataProvider& provider) {
    MutabilityVerdict verdict;
    verdict.destructibility.reserve(chain.steps.size());
    for (const auto& step : chain.steps) {
        const Bytes code = provider.get_code(step.created);
        verdict.destructibility.push_back(destructibility_of(ByteView{code.data(), code.size()}));
    }

    bool prefix_destructible = true;
    for (size_t i = 0; i < chain.steps.size(); ++i) {
        prefix_destructible = prefix_destructible && verdict.destructibility[i].can_destruct();
        if (!prefix_destructible)
            break;

        const auto& step = chain.steps[i];
        bool is_create2 = step.kind == CreationKind::Create2;
        bool trace_confirmed = false;
        if (!step.tx_id.empty()) {
            try {
                const auto opcodes = provider.get_trace_opcodes(step.tx_id);
                const bool trace_has_create2 =
                    std::find(opcodes.begin(), opcodes.end(), "CREATE2") != opcodes.end();
                is_create2 = trace_has_create2;
                trace_confirmed = true;
            } catch (const CapabilityError&) {
                verdict.notes.push_back("trace unavailable for " + step.created.to_hex() +
                                        "; using creation-record kind (reduced confidence)");
            }
        }

        if (is_create2) {
            verdict.mutable_code = true;
            verdict.pivot_index = i;
            verdict.pivot_trace_confirmed = trace_confirmed;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace govaudit::governance
