// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "../governance/creation.hpp"
#include "matching.hpp"
#include "sentences.hpp"

namespace govaudit::proposal {

enum class InconsistencyCategory {
    LackOfDescriptionIntention,
    LackOfCodeAction,
    IncompleteFunction,
    IncompleteParameter,
    IncorrectProposal,
};

std::string to_string(InconsistencyCategory c);

struct InconsistencyFinding {
    InconsistencyCategory category;
    std::string subject;      // the code action or intention involved
    std::string explanation;
};

struct ActionConsistency {
    FunctionMatch function_match;
    std::vector<ParameterMatch> parameter_matches;
};

struct ConsistencyReport {
    std::vector<InconsistencyFinding> findings;
    std::vector<ActionConsistency> per_action;
    bool normal = false;  // no finding of any category
};

/// Runs the five-category detector over already-extracted intentions and
/// code actions. Proposal-level lacks are mutually exclusive by
/// construction; per-action function/parameter findings are reported
/// independently.
ConsistencyReport detect_inconsistencies(const ProposalRecord& proposal,
                                         const std::vector<DescriptionIntention>& intentions,
                                         const std::vector<CodeAction>& code_actions,
                                         const TextSimilarity& similarity,
                                         chaindata::ChainDataProvider& provider,
                                         double threshold = kFunctionMatchThreshold);

struct TargetImmutabilityResult {
    bool skipped = false;  // target is the governance contract itself
    bool open_source = false;
    std::optional<governance::MutabilityVerdict> create2_risk;
};

/// Scanner verification plus the creation-chain CREATE2 assessment for
/// one call's target. Targets equal to the governance contract are
/// skipped (they are covered by the governance audit).
TargetImmutabilityResult check_target_immutability(const ProposalCall& call,
                                                   const std::optional<Address>& governance_address,
                                                   chaindata::ChainDataProvider& provider);

/// Extraction pipeline: sentence split, code-related classification,
/// intention extraction with the default pattern provider.
std::vector<DescriptionIntention> extract_all_intentions(const std::string& description,
                                                         const Lexicon& lexicon);

}  // namespace govaudit::proposal
