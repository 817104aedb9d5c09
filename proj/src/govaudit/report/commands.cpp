// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <fstream>

#include "../chaindata/http_provider.hpp"
#include "../governance/privileged.hpp"

namespace govaudit::report {

using nlohmann::ordered_json;

namespace {

ordered_json json_of_mutability(const governance::MutabilityVerdict& verdict) {
    ordered_json j;
    j["mutable"] = verdict.mutable_code;
    j["pivotIndex"] =
        verdict.pivot_index ? ordered_json(*verdict.pivot_index) : ordered_json(nullptr);
    j["destructibility"] = ordered_json::array();
    for (const auto& d : verdict.destructibility)
        j["destructibility"].push_back(
            {{"selfdestruct", d.has_selfdestruct}, {"delegatecall", d.has_delegatecall}});
    j["pivotTraceConfirmed"] = verdict.pivot_trace_confirmed;
    j["notes"] = verdict.notes;
    return j;
}

ordered_json json_of_chain(const governance::CreationChain& chain) {
    ordered_json j;
    j["steps"] = ordered_json::array();
    for (const auto& step : chain.steps)
        j["steps"].push_back({{"created", step.created.to_hex()},
                              {"creator", step.creator.to_hex()},
                              {"kind", chaindata::to_string(step.kind)},
                              {"txId", step.tx_id}});
    j["terminalEoa"] = chain.terminal_eoa.to_hex();
    return j;
}

ordered_json json_of_intention(const proposal::DescriptionIntention& intention) {
    return ordered_json{{"action", intention.action},
                        {"targetObject", intention.target_object},
                        {"parameters", intention.parameters},
                        {"negative", intention.negative},
                        {"sentence", intention.source_sentence}};
}

ordered_json json_of_code_action(const proposal::CodeAction& action) {
    ordered_json j;
    j["targetAddress"] = action.target_address.to_hex();
    j["targetSymbol"] =
        action.target_symbol ? ordered_json(*action.target_symbol) : ordered_json(nullptr);
    j["value"] = action.value.to_decimal();
    j["functionSignature"] = action.function_signature
                                 ? ordered_json(action.function_signature->to_hex())
                                 : ordered_json(nullptr);
    j["functionName"] =
        action.function_name ? ordered_json(*action.function_name) : ordered_json(nullptr);
    j["functionParameters"] = ordered_json::array();
    for (const auto& p : action.function_parameters)
        j["functionParameters"].push_back(
            {{"type", p.solidity_type}, {"value", p.value.to_display()}});
    j["nameCandidates"] = action.name_candidates;
    return j;
}

}  // namespace

std::shared_ptr<chaindata::ChainDataProvider> make_provider(
    const chaindata::ProviderConfig& config) {
    const auto mode =
        chaindata::mode_from_string(config.mode.empty() ? "live" : config.mode);
    if (!mode)
        throw UsageError("unknown provider mode: " + config.mode);
    if (*mode == chaindata::Mode::Replay) {
        if (config.cache_dir.empty())
            throw UsageError("replay mode requires a cache directory");
        return std::make_shared<chaindata::CachingProvider>(nullptr, *mode, config.cache_dir,
                                                            config.chain_id);
    }
    auto upstream = std::make_shared<chaindata::HttpProvider>(chaindata::make_http_transport(),
                                                              config);
    return std::make_shared<chaindata::CachingProvider>(std::move(upstream), *mode,
                                                        config.cache_dir, config.chain_id);
}

AuditReport run_governance(const Address& governance_address,
                           chaindata::ChainDataProvider& provider,
                           const similarity::TemplateStore& store, uint64_t chain_id,
                           double threshold, const std::string& provenance) {
    AuditReport report;
    report.subject_kind = "governance";
    report.subject_id = governance_address.to_hex();
    report.provenance_mode = provenance;

    try {
        const auto soundness =
            governance::check_soundness(governance_address, provider, store, chain_id, threshold);
        ordered_json soundness_json;
        soundness_json["sound"] = soundness.sound;
        soundness_json["evidence"] =
            soundness.evidence ? ordered_json(to_string(*soundness.evidence)) : ordered_json(nullptr);
        soundness_json["matchedPlatform"] = soundness.matched_platform
                                                ? ordered_json(*soundness.matched_platform)
                                                : ordered_json(nullptr);
        soundness_json["matchedTemplate"] = soundness.matched_template
                                                ? ordered_json(*soundness.matched_template)
                                                : ordered_json(nullptr);
        soundness_json["bestTemplateScore"] = soundness.best_template_score;
        soundness_json["roleScores"] = soundness.role_scores;
        soundness_json["notes"] = soundness.notes;
        report.verdicts["soundness"] = soundness_json;
        if (!soundness.sound)
            report.findings.push_back({"NotSound", report.subject_id,
                                       "no soundness evidence route succeeded"});

        const Bytes code = provider.get_code(governance_address);
        const auto findings = governance::detect_privileged_functions(
            ByteView{code.data(), code.size()}, governance_address, &provider);
        report.verdicts["privilegedFunctions"] = ordered_json::array();
        for (const auto& f : findings) {
            ordered_json fj;
            fj["selector"] = f.selector.to_hex();
            switch (f.comparand.kind) {
                case governance::ComparandSource::Kind::Push20Immediate:
                    fj["comparand"] = {{"kind", "push20Immediate"},
                                       {"address", f.comparand.immediate.to_hex()}};
                    break;
                case governance::ComparandSource::Kind::StorageSlot:
                    fj["comparand"] = {{"kind", "storageSlot"}, {"slot", f.comparand.slot.to_hex()}};
                    break;
                case governance::ComparandSource::Kind::Unresolved:
                    fj["comparand"] = {{"kind", "unresolved"}};
                    break;
            }
            fj["resolvedAddress"] = f.resolved_address ? ordered_json(f.resolved_address->to_hex())
                                                       : ordered_json(nullptr);
            fj["controller"] = to_string(f.controller);
            report.verdicts["privilegedFunctions"].push_back(fj);

            if (f.controller == governance::Controller::External)
                report.findings.push_back(
                    {"ExternalPrivilegedFunction", "selector " + f.selector.to_hex(),
                     "caller gate compares against " +
                         (f.resolved_address ? f.resolved_address->to_hex()
                                             : std::string("an external address"))});
            else if (f.controller == governance::Controller::Unresolved)
                report.findings.push_back(
                    {"UnresolvedPrivilegedFunction", "selector " + f.selector.to_hex(),
                     "caller gate found but the comparand could not be resolved"});
        }

        const auto chain = governance::build_creation_chain(governance_address, provider);
        report.verdicts["creationChain"] = json_of_chain(chain);
        const auto mutability = governance::assess_mutability(chain, provider);
        report.verdicts["mutability"] = json_of_mutability(mutability);
        if (mutability.mutable_code)
            report.findings.push_back(
                {"MutableGovernanceCode", report.subject_id,
                 "creation chain permits CREATE2 redeployment at the same address"});
        for (const auto& note : mutability.notes)
            report.diagnostics.push_back({"warning", "trace-confidence", note});
    } catch (const DataError& e) {
        report.incomplete = true;
        report.diagnostics.push_back({"error", "data", e.what()});
    }
    return report;
}

AuditReport run_proposal(const proposal::ProposalRecord& record,
                         chaindata::ChainDataProvider& provider, const proposal::Lexicon& lexicon,
                         const std::optional<Address>& governance, double threshold,
                         const std::string& provenance) {
    AuditReport report;
    report.subject_kind = "proposal";
    report.subject_id = record.id.empty() ? "(unnamed proposal)" : record.id;
    report.provenance_mode = provenance;

    try {
        // immutability of every call target
        bool any_mutable = false;
        report.verdicts["calls"] = ordered_json::array();
        for (const auto& call : record.calls) {
            ordered_json cj;
            cj["target"] = call.target.to_hex();
            const auto immutability =
                proposal::check_target_immutability(call, governance, provider);
            cj["skipped"] = immutability.skipped;
            if (!immutability.skipped) {
                cj["openSource"] = immutability.open_source;
                cj["create2Risk"] = json_of_mutability(*immutability.create2_risk);
                if (immutability.create2_risk->mutable_code) {
                    any_mutable = true;
                    report.findings.push_back(
                        {"TargetCodeMutable", call.target.to_hex(),
                         "target can be destructed and redeployed via CREATE2"});
                }
                if (!immutability.open_source)
                    report.diagnostics.push_back({"warning", "closed-source",
                                                  "target " + call.target.to_hex() +
                                                      " has no verified source"});
            }
            report.verdicts["calls"].push_back(cj);
        }

        // consistency pipeline
        const auto intentions = proposal::extract_all_intentions(record.description, lexicon);
        const auto actions = proposal::extract_code_actions(record, provider);
        const auto consistency = proposal::detect_inconsistencies(
            record, intentions, actions, proposal::lexical_similarity(lexicon), provider,
            threshold);

        report.verdicts["intentions"] = ordered_json::array();
        for (const auto& i : intentions)
            report.verdicts["intentions"].push_back(json_of_intention(i));
        report.verdicts["codeActions"] = ordered_json::array();
        for (const auto& a : actions) {
            report.verdicts["codeActions"].push_back(json_of_code_action(a));
            for (const auto& d : a.diagnostics)
                report.diagnostics.push_back({"warning", "enrichment", d});
        }

        ordered_json consistency_json;
        consistency_json["normal"] = consistency.normal;
        consistency_json["findings"] = ordered_json::array();
        for (const auto& f : consistency.findings) {
            consistency_json["findings"].push_back({{"category", to_string(f.category)},
                                                    {"subject", f.subject},
                                                    {"explanation", f.explanation}});
            report.findings.push_back({to_string(f.category), f.subject, f.explanation});
        }
        report.verdicts["consistency"] = consistency_json;

        // headline classification: mutability first, then the
        // proposal-level lacks, then the per-action categories
        std::string classification = "Normal";
        const auto has = [&](proposal::InconsistencyCategory c) {
            for (const auto& f : consistency.findings)
                if (f.category == c)
                    return true;
            return false;
        };
        using Category = proposal::InconsistencyCategory;
        if (any_mutable)
            classification = "CodeMutability";
        else if (has(Category::LackOfDescriptionIntention))
            classification = "LackOfDescriptionIntention";
        else if (has(Category::LackOfCodeAction))
            classification = "LackOfCodeAction";
        else if (has(Category::IncorrectProposal))
            classification = "IncorrectProposal";
        else if (has(Category::IncompleteFunction))
            classification = "IncompleteFunction";
        else if (has(Category::IncompleteParameter))
            classification = "IncompleteParameter";
        report.verdicts["classification"] = classification;
    } catch (const DataError& e) {
        report.incomplete = true;
        report.diagnostics.push_back({"error", "data", e.what()});
    }
    return report;
}

AuditReport run_docs(const std::string& subject_id, const std::string& document,
                     docaudit::LlmClient& client, const docaudit::RuleSet& rules,
                     const std::string& provenance) {
    AuditReport report;
    report.subject_kind = "documentation";
    report.subject_id = subject_id;
    report.provenance_mode = provenance;

    const auto audit = docaudit::audit_documentation(document, client, rules);
    report.verdicts["rules"] = ordered_json::array();
    for (const auto& result : audit.results) {
        ordered_json rj;
        rj["id"] = to_string(result.rule_id);
        rj["satisfied"] = result.satisfied;
        rj["complete"] = result.complete;
        if (!result.error.empty())
            rj["error"] = result.error;
        rj["transcript"] = ordered_json::array();
        for (const auto& entry : result.transcript) {
            rj["transcript"].push_back({{"question", entry.question},
                                        {"chunk", entry.chunk_index},
                                        {"yes", entry.yes},
                                        {"reason", entry.reason},
                                        {"verified", entry.verified},
                                        {"demoted", entry.demoted},
                                        {"retries", entry.retries},
                                        {"parseFailed", entry.parse_failed},
                                        {"fromCache", entry.from_cache}});
        }
        report.verdicts["rules"].push_back(rj);

        if (!result.complete) {
            report.incomplete = true;
            report.diagnostics.push_back({"error", "llm", result.error});
        } else if (!result.satisfied) {
            report.findings.push_back({"RuleUnsatisfied", to_string(result.rule_id),
                                       "documentation does not establish this rule"});
        }
    }
    return report;
}

AuditReport run_similarity(const std::string& subject_id, ByteView code_a, ByteView code_b,
                           double threshold, const std::string& provenance) {
    AuditReport report;
    report.subject_kind = "similarity";
    report.subject_id = subject_id;
    report.provenance_mode = provenance;

    const auto decision = similarity::contracts_similar(code_a, code_b, threshold);
    report.verdicts["score"] = decision.score;
    report.verdicts["threshold"] = decision.threshold;
    report.verdicts["similar"] = decision.similar;
    if (!decision.similar)
        report.findings.push_back(
            {"NotSimilar", subject_id,
             "similarity " + std::to_string(decision.score) + " is below the threshold"});
    return report;
}

Bytes load_bytecode_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open bytecode file " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), {});
    // trim whitespace for hex files
    std::string trimmed = content;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    const auto last = trimmed.find_last_not_of(" \t\r\n");
    trimmed.erase(last == std::string::npos ? 0 : last + 1);
    if (is_hex_string(trimmed))
        return *from_hex(trimmed);
    return Bytes(content.begin(), content.end());
}

AuditReport cmd_governance(const Address& governance_address, const CommandOptions& options) {
    const auto provider = make_provider(options.provider);
    const auto store = similarity::TemplateStore::load(options.fixtures_dir);
    const std::string provenance = options.provider.mode.empty() ? "live" : options.provider.mode;
    return run_governance(governance_address, *provider, store, options.provider.chain_id,
                          options.threshold.value_or(similarity::kDefaultThreshold), provenance);
}

AuditReport cmd_proposal(const std::filesystem::path& proposal_file,
                         const CommandOptions& options) {
    const auto record = proposal::load_proposal_file(proposal_file);
    const auto provider = make_provider(options.provider);
    const auto lexicon = proposal::Lexicon::load(options.data_dir);
    const std::string provenance = options.provider.mode.empty() ? "live" : options.provider.mode;
    return run_proposal(record, *provider, lexicon, options.governance,
                        options.threshold.value_or(proposal::kFunctionMatchThreshold), provenance);
}

AuditReport cmd_docs(const std::filesystem::path& doc_file, const CommandOptions& options) {
    std::ifstream in(doc_file);
    if (!in)
        throw InputError("cannot open documentation file " + doc_file.string());
    const std::string document((std::istreambuf_iterator<char>(in)), {});

    const auto rules = docaudit::RuleSet::load(options.data_dir);
    std::unique_ptr<docaudit::LlmClient> client;
    std::string provenance = "live";
    if (!options.llm_script.empty()) {
        client = std::make_unique<docaudit::ScriptedLlmClient>(
            docaudit::ScriptedLlmClient::from_file(options.llm_script));
        provenance = "replay";
    } else if (!options.llm_endpoint.empty()) {
        client = std::make_unique<docaudit::HttpLlmClient>(chaindata::make_http_transport(),
                                                           options.llm_endpoint, options.llm_key);
    } else {
        throw UsageError("docs audit needs --llm-script or an LLM endpoint");
    }
    return run_docs(doc_file.filename().string(), document, *client, rules, provenance);
}

AuditReport cmd_similarity(const std::filesystem::path& bytecode_a,
                           const std::filesystem::path& bytecode_b,
                           const CommandOptions& options) {
    const Bytes a = load_bytecode_file(bytecode_a);
    const Bytes b = load_bytecode_file(bytecode_b);
    return run_similarity(bytecode_a.filename().string() + " vs " + bytecode_b.filename().string(),
                          ByteView{a.data(), a.size()}, ByteView{b.data(), b.size()},
                          options.threshold.value_or(similarity::kDefaultThreshold), "live");
}

}  // namespace govaudit::report
