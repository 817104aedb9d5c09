// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "soundness.hpp"

#include <algorithm>

namespace govaudit::governance {

std::string to_string(SoundnessEvidence e) {
    switch (e) {
        case SoundnessEvidence::CreatorMatchesPlatformDeployer: return "creatorMatchesPlatformDeployer";
        case SoundnessEvidence::BytecodeMatchesTemplate: return "bytecodeMatchesTemplate";
        case SoundnessEvidence::HasProposeVoteExecute: return "hasProposeVoteExecute";
        case SoundnessEvidence::DocumentedOpenSource: return "documentedOpenSource";
    }
    return "unknown";
}

SoundnessVerdict check_soundness(const Address& governance_address,
                                 chaindata::ChainDataProvider& provider,
                                 const similarity::TemplateStore& store, uint64_t chain_id,
                                 double threshold) {
    SoundnessVerdict verdict;

    // route 1: the contract was deployed by a known platform deployer
    if (const auto creation = provider.get_creation(governance_address)) {
        if (const auto platform = store.deployer_platform(creation->creator, chain_id)) {
            verdict.sound = true;
            verdict.evidence = SoundnessEvidence::CreatorMatchesPlatformDeployer;
            verdict.matched_platform = *platform;
            return verdict;
        }
    } else {
        verdict.notes.push_back("no creation record; deployer route skipped");
    }

    const Bytes code = provider.get_code(governance_address);
    const ByteView code_view{code.data(), code.size()};

    // route 2: whole-bytecode similarity against platform templates
    for (const auto& tmpl : store.contract_templates(chain_id)) {
        const auto decision = similarity::contracts_similar(
            code_view, ByteView{tmpl.runtime_bytecode.data(), tmpl.runtime_bytecode.size()},
            threshold);
        if (decision.score > verdict.best_template_score) {
            verdict.best_template_score = decision.score;
            verdict.matched_template = tmpl.name;
        }
        if (decision.similar) {
            verdict.sound = true;
            verdict.evidence = SoundnessEvidence::BytecodeMatchesTemplate;
            verdict.matched_template = tmpl.name;
            return verdict;
        }
    }

    // route 3: all three governance functions present by similarity
    const auto extraction = evm::extract_functions(evm::build_cfg(code_view));
    if (!extraction.dispatcher_found)
        verdict.notes.push_back("no selector dispatcher recognized in bytecode");
    bool all_roles = true;
    for (const std::string role : {"propose", "vote", "execute"}) {
        const auto variants = store.function_variants(chain_id, role);
        double best = 0.0;
        if (!variants.empty()) {
            for (const auto& fn : extraction.functions) {
                const auto decision = similarity::function_similar(fn, variants, threshold);
                best = std::max(best, decision.score);
            }
        } else {
            verdict.notes.push_back("no template variants for role " + role);
        }
        verdict.role_scores[role] = best;
        all_roles = all_roles && best >= threshold;
    }
    if (all_roles && !extraction.functions.empty()) {
        verdict.sound = true;
        verdict.evidence = SoundnessEvidence::HasProposeVoteExecute;
        return verdict;
    }

    // route 4: documented open-source attestation
    if (store.attested_open_source(governance_address)) {
        verdict.sound = true;
        verdict.evidence = SoundnessEvidence::DocumentedOpenSource;
        return verdict;
    }

    return verdict;
}

}  // namespace govaudit::governance
