// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "../chaindata/caching_provider.hpp"
#include "../chaindata/config.hpp"
#include "../docaudit/audit.hpp"
#include "../governance/soundness.hpp"
#include "../proposal/consistency.hpp"
#include "report.hpp"

namespace govaudit::report {

/// Everything a subcommand needs, resolved from flags + environment.
struct CommandOptions {
    chaindata::ProviderConfig provider;
    std::filesystem::path fixtures_dir;  // templates/deployers/attestations
    std::filesystem::path data_dir = "data";
    std::optional<double> threshold;     // override for similarity decisions
    std::optional<Address> governance;   // proposal audits: skip-marker target
    std::filesystem::path llm_script;    // docs: scripted client
    std::string llm_endpoint;
    std::string llm_key;
};

/// Builds the provider stack for the configured mode: replay serves
/// purely from cache; live/record wrap an HTTP provider.
std::shared_ptr<chaindata::ChainDataProvider> make_provider(const chaindata::ProviderConfig& config);

AuditReport cmd_governance(const Address& governance_address, const CommandOptions& options);
AuditReport cmd_proposal(const std::filesystem::path& proposal_file, const CommandOptions& options);
AuditReport cmd_docs(const std::filesystem::path& doc_file, const CommandOptions& options);
AuditReport cmd_similarity(const std::filesystem::path& bytecode_a,
                           const std::filesystem::path& bytecode_b, const CommandOptions& options);

// dependency-injected cores, used by the commands and by tests

AuditReport run_governance(const Address& governance_address,
                           chaindata::ChainDataProvider& provider,
                           const similarity::TemplateStore& store, uint64_t chain_id,
                           double threshold, const std::string& provenance);

AuditReport run_proposal(const proposal::ProposalRecord& record,
                         chaindata::ChainDataProvider& provider, const proposal::Lexicon& lexicon,
                         const std::optional<Address>& governance, double threshold,
                         const std::string& provenance);

AuditReport run_docs(const std::string& subject_id, const std::string& document,
                     docaudit::LlmClient& client, const docaudit::RuleSet& rules,
                     const std::string& provenance);

AuditReport run_similarity(const std::string& subject_id, ByteView code_a, ByteView code_b,
                           double threshold, const std::string& provenance);

/// Reads a bytecode file: hex text (with or without 0x) or raw bytes.
Bytes load_bytecode_file(const std::filesystem::path& path);

}  // namespace govaudit::report
