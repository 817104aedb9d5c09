// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>

#include "../chaindata/provider.hpp"
#include "../similarity/ngram.hpp"
#include "../similarity/templates.hpp"

namespace govaudit::governance {

enum class SoundnessEvidence {
    CreatorMatchesPlatformDeployer,
    BytecodeMatchesTemplate,
    HasProposeVoteExecute,
    DocumentedOpenSource,
};

std::string to_string(SoundnessEvidence e);

struct SoundnessVerdict {
    bool sound = false;
    std::optional<SoundnessEvidence> evidence;  // set exactly when sound
    // per-check traces: best template score, per-role function scores,
    // matched platform, notes
    std::optional<std::string> matched_platform;
    std::optional<std::string> matched_template;
    double best_template_score = 0.0;
    std::map<std::string, double> role_scores;  // propose/vote/execute
    std::vector<std::string> notes;
};

/// Tries the acceptance routes in order: platform deployer match,
/// whole-bytecode template similarity, presence of propose/vote/execute
/// function bodies, then a documented-open-source attestation. Sound iff
/// one of them succeeds.
SoundnessVerdict check_soundness(const Address& governance_address,
                                 chaindata::ChainDataProvider& provider,
                                 const similarity::TemplateStore& store, uint64_t chain_id,
                                 double threshold = similarity::kDefaultThreshold);

}  // namespace govaudit::governance
