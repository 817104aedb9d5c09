// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "code_action.hpp"

#include <algorithm>

#include "../evm/keccak.hpp"

namespace govaudit::proposal {

namespace {

std::optional<Selector> selector_of(const ProposalCall& call) {
    if (call.signature)
        return call.signature;
    if (call.calldata.size() >= 4) {
        Selector sel;
        std::copy(call.calldata.begin(), call.calldata.begin() + 4, sel.bytes.begin());
        return sel;
    }
    return std::nullopt;
}

// name from a verified ABI: the canonical signature whose selector
// matches
std::optional<std::string> name_from_abi(const std::vector<std::string>& abi,
                                         const Selector& selector,
                                         std::vector<std::string>& diagnostics) {
    for (const auto& signature : abi) {
        try {
            if (evm::compute_selector(signature) == selector)
                return signature;
        } catch (const UsageError& e) {
            diagnostics.push_back(std::string("skipping non-canonical ABI entry: ") + e.what());
        }
    }
    return std::nullopt;
}

struct Candidate {
    std::string signature;
    size_t param_count = 0;
    std::vector<TypedParam> decoded;
};

}  // namespace

std::vector<CodeAction> extract_code_actions(const ProposalRecord& proposal,
                                             chaindata::ChainDataProvider& provider) {
    std::vector<CodeAction> actions;

    for (const auto& call : proposal.calls) {
        CodeAction action;
        action.target_address = call.target;
        action.value = call.value;

        try {
            const auto metadata = provider.get_metadata(call.target);
            if (metadata.name_tag)
                action.target_symbol = metadata.name_tag;
            else if (metadata.symbol)
                action.target_symbol = metadata.symbol;

            action.function_signature = selector_of(call);
            if (action.function_signature) {
                if (metadata.verified && metadata.abi) {
                    action.function_name = name_from_abi(*metadata.abi, *action.function_signature,
                                                         action.diagnostics);
                    if (action.function_name)
                        action.name_candidates.push_back(*action.function_name);
                }
                if (!action.function_name) {
                    // closed-source or selector not in the ABI: consult
                    // the signature database
                    const auto candidates = provider.lookup_signature(*action.function_signature);
                    action.name_candidates = candidates;
                    std::vector<Candidate> decodable;
                    for (const auto& signature : candidates) {
                        try {
                            Candidate c;
                            c.signature = signature;
                            c.decoded = decode_calldata(
                                signature, ByteView{call.calldata.data(), call.calldata.size()});
                            c.param_count = c.decoded.size();
                            decodable.push_back(std::move(c));
                        } catch (const std::exception&) {
                            // candidate does not fit this calldata
                        }
                    }
                    if (!decodable.empty()) {
                        const auto best = std::min_element(
                            decodable.begin(), decodable.end(),
                            [](const Candidate& a, const Candidate& b) {
                                return a.param_count < b.param_count;
                            });
                        action.function_name = best->signature;
                        action.function_parameters = std::move(best->decoded);
                    } else if (!candidates.empty()) {
                        action.diagnostics.push_back(
                            "no signature-database candidate decodes this calldata");
                    }
                }
                if (action.function_name && action.function_parameters.empty() &&
                    !call.calldata.empty()) {
                    try {
                        action.function_parameters = decode_calldata(
                            *action.function_name,
                            ByteView{call.calldata.data(), call.calldata.size()});
                    } catch (const std::exception& e) {
                        action.diagnostics.push_back(std::string("calldata decode failed: ") +
                                                     e.what());
                    }
                }
            }
        } catch (const DataError& e) {
            // provider trouble degrades to absent fields, never a hard stop
            action.diagnostics.push_back(std::string("provider degraded: ") + e.what());
        }
        actions.push_back(std::move(action));
    }
    return actions;
}

}  // namespace govaudit::proposal
