// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "consistency.hpp"

namespace govaudit::proposal {

std::string to_string(InconsistencyCategory c) {
    switch (c) {
        case InconsistencyCategory::LackOfDescriptionIntention: return "LackOfDescriptionIntention";
        case InconsistencyCategory::LackOfCodeAction: return "LackOfCodeAction";
        case InconsistencyCategory::IncompleteFunction: return "IncompleteFunction";
        case InconsistencyCategory::IncompleteParameter: return "IncompleteParameter";
        case InconsistencyCategory::IncorrectProposal: return "IncorrectProposal";
    }
    return "?";
}

std::vector<DescriptionIntention> extract_all_intentions(const std::string& description,
                                                         const Lexicon& lexicon) {
    std::vector<DescriptionIntention> intentions;
    PatternParseProvider provider(lexicon);
    for (const auto& sentence : split_sentences(description)) {
        if (!classify_code_related(sentence, lexicon))
            continue;
        auto extracted = extract_intentions(sentence, provider);
        intentions.insert(intentions.end(), std::make_move_iterator(extracted.begin()),
                          std::make_move_iterator(extracted.end()));
    }
    return intentions;
}

namespace {

std::string describe_action(const CodeAction& action) {
    std::string s = action.target_address.to_hex();
    if (action.target_symbol)
        s += " (" + *action.target_symbol + ")";
    if (action.function_name)
        s += " " + *action.function_name;
    else if (action.function_signature)
        s += " selector " + action.function_signature->to_hex();
    return s;
}

}  // namespace

ConsistencyReport detect_inconsistencies(const ProposalRecord& proposal,
                                         const std::vector<DescriptionIntention>& intentions,
                                         const std::vector<CodeAction>& code_actions,
                                         const TextSimilarity& similarity,
                                         chaindata::ChainDataProvider& provider,
                                         double threshold) {
    ConsistencyReport report;

    if (!code_actions.empty() && intentions.empty()) {
        report.findings.push_back({InconsistencyCategory::LackOfDescriptionIntention,
                                   "proposal " + proposal.id,
                                   "code actions present but no description intention extracted"});
        report.normal = false;
        return report;
    }
    if (code_actions.empty() && !intentions.empty()) {
        report.findings.push_back({InconsistencyCategory::LackOfCodeAction,
                                   "proposal " + proposal.id,
                                   "description intentions present but the proposal carries no code"});
        report.normal = false;
        return report;
    }

    for (const auto& action : code_actions) {
        ActionConsistency consistency;
        consistency.function_match = match_function(action, intentions, similarity, threshold);

        if (consistency.function_match.mentioned && consistency.function_match.negative_mentioned) {
            report.findings.push_back(
                {InconsistencyCategory::IncorrectProposal, describe_action(action),
                 "function is mentioned by a description intention tagged negative"});
        } else if (!consistency.function_match.mentioned) {
            report.findings.push_back(
                {InconsistencyCategory::IncompleteFunction, describe_action(action),
                 "function/symbol not mentioned by any description intention (best score " +
                     std::to_string(consistency.function_match.best_score) + ")"});
        }

        std::vector<std::string> missing;
        for (const auto& param : action.function_parameters) {
            auto match = match_parameter(param, action, intentions, provider);
            if (!match.mentioned)
                missing.push_back(param.solidity_type + " " + param.value.to_display() + ": " +
                                  match.detail);
            consistency.parameter_matches.push_back(std::move(match));
        }
        if (!missing.empty()) {
            std::string explanation = "parameters absent from the description:";
            for (const auto& m : missing)
                explanation += " [" + m + "]";
            report.findings.push_back({InconsistencyCategory::IncompleteParameter,
                                       describe_action(action), explanation});
        }
        report.per_action.push_back(std::move(consistency));
    }

    report.normal = report.findings.empty();
    return report;
}

TargetImmutabilityResult check_target_immutability(const ProposalCall& call,
                                                   const std::optional<Address>& governance_address,
                                                   chaindata::ChainDataProvider& provider) {
    TargetImmutabilityResult result;
    if (governance_address && call.target == *governance_address) {
        result.skipped = true;
        return result;
    }
    result.open_source = provider.is_verified(call.target);
    const auto chain = governance::build_creation_chain(call.target, provider);
    result.create2_risk = governance::assess_mutability(chain, provider);
    return result;
}

}  // namespace govaudit::proposal
