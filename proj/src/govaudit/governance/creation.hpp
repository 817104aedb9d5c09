// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../chaindata/provider.hpp"
#include "../common/types.hpp"

namespace govaudit::governance {

struct CreationStep {
    Address created;
    Address creator;
    chaindata::CreationKind kind = chaindata::CreationKind::Unknown;
    std::string tx_id;
};

/// The deployment ancestry of a contract: step k's creator is step k+1's
/// created address, ending at the externally owned account that started
/// the chain.
struct CreationChain {
    std::vector<CreationStep> steps;
    Address terminal_eoa;
};

/// Why a contract counts as able to erase or swap its own code.
struct Destructibility {
    bool has_selfdestruct = false;
    bool has_delegatecall = false;  // proxy-style logic mutability

    bool can_destruct() const { return has_selfdestruct || has_delegatecall; }
};

struct MutabilityVerdict {
    bool mutable_code = false;
    std::optional<size_t> pivot_index;       // the CREATE2-created step
    std::vector<Destructibility> destructibility;  // one per chain step
    bool pivot_trace_confirmed = false;
    std::vector<std::string> notes;
};

/// Walks creator-of records until an address without a creation record
/// and without code. Destroyed intermediate contracts (creation record
/// present, code gone) stay in the chain. Throws DataError when the
/// audited address has no creation record, IntegrityError on cycles.
CreationChain build_creation_chain(const Address& address, chaindata::ChainDataProvider& provider);

/// Whole-code scan for SELFDESTRUCT or DELEGATECALL, including
/// unreachable regions.
Destructibility destructibility_of(ByteView runtime_bytecode);
bool can_self_destruct(ByteView runtime_bytecode);

/// A chain is mutable when some step was created by CREATE2 (confirmed
/// against the deployment trace when the provider can serve one) and
/// every step from the audited contract up to and including that pivot
/// can destruct itself.
MutabilityVerdict assess_mutability(const CreationChain& chain,
                                    chaindata::ChainDataProvider& provider);

}  // namespace govaudit::governance
