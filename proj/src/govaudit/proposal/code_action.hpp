// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "../chaindata/provider.hpp"
#include "abi.hpp"
#include "proposal.hpp"

namespace govaudit::proposal {

/// One proposal call enriched into natural-language terms: symbol for
/// the target, canonical name for the selector, decoded parameters.
/// Fields that cannot be established stay absent; nothing is guessed.
struct CodeAction {
    Address target_address;
    std::optional<std::string> target_symbol;  // name tag first, then symbol()
    U256 value;
    std::optional<Selector> function_signature;
    std::optional<std::string> function_name;  // canonical signature text
    std::vector<TypedParam> function_parameters;
    std::vector<std::string> name_candidates;  // every candidate considered
    std::vector<std::string> diagnostics;
};

/// Enriches every call of the proposal: metadata (name tag, symbol, ABI)
/// through the provider, selector-to-name lookups through the signature
/// database for closed-source targets, calldata decoding once a name is
/// known. Multi-candidate lookups keep the candidate whose decode
/// succeeds, ties broken toward fewer parameters.
std::vector<CodeAction> extract_code_actions(const ProposalRecord& proposal,
                                             chaindata::ChainDataProvider& provider);

}  // namespace govaudit::proposal
