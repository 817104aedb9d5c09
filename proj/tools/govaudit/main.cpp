// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include <govaudit/report/commands.hpp>

namespace {

using govaudit::Address;
using govaudit::report::AuditReport;
using govaudit::report::CommandOptions;

struct GlobalFlags {
    CommandOptions options;
    bool json = false;
};

void add_provider_flags(CLI::App* cmd, GlobalFlags& flags) {
    cmd->add_option("--chain-id", flags.options.provider.chain_id, "Chain id for provider queries");
    cmd->add_option("--mode", flags.options.provider.mode, "Provider mode: live|record|replay");
    cmd->add_option("--cache-dir", flags.options.provider.cache_dir,
                    "Record/replay cache directory");
    cmd->add_option("--rpc-url", flags.options.provider.rpc_endpoint, "JSON-RPC endpoint");
    cmd->add_option("--scanner-url", flags.options.provider.scanner_endpoint, "Scanner endpoint");
    cmd->add_option("--scanner-key", flags.options.provider.scanner_key, "Scanner API key");
    cmd->add_option("--sig-db-url", flags.options.provider.sig_db_endpoint,
                    "Signature database endpoint");
    cmd->add_flag("--json", flags.json, "Emit the structured report on stdout");
    cmd->add_option("--data-dir", flags.options.data_dir,
                    "Directory holding verbs.txt/synonyms.txt/question_chains.json");
    cmd->add_option("--fixtures", flags.options.fixtures_dir,
                    "Directory holding templates.jsonl/deployers.jsonl/attestations.jsonl");
    cmd->add_option("--threshold", flags.options.threshold, "Similarity decision threshold");
}

int emit(const AuditReport& report, bool json) {
    if (json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_human();
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DAO governance auditing toolkit"};
    app.require_subcommand(1);

    GlobalFlags flags;
    std::string address_text;
    std::string proposal_file;
    std::string doc_file;
    std::string governance_text;
    std::string llm_script;
    std::string llm_url;
    std::string code_a;
    std::string code_b;

    auto* governance_cmd =
        app.add_subcommand("governance", "Audit a governance contract: soundness, independence, "
                                         "immutability");
    governance_cmd->add_option("address", address_text, "Governance contract address")->required();
    add_provider_flags(governance_cmd, flags);

    auto* proposal_cmd =
        app.add_subcommand("proposal", "Audit a proposal file for description/code consistency");
    proposal_cmd->add_option("file", proposal_file, "Proposal JSON file")->required();
    proposal_cmd->add_option("--governance", governance_text,
                             "Governance contract address (targets equal to it are skipped)");
    add_provider_flags(proposal_cmd, flags);

    auto* docs_cmd = app.add_subcommand("docs", "Audit governance documentation against the six "
                                                "rules");
    docs_cmd->add_option("file", doc_file, "Documentation text/markdown file")->required();
    docs_cmd->add_option("--llm-script", llm_script, "Scripted LLM responses (JSONL)");
    docs_cmd->add_option("--llm-url", llm_url, "Live LLM endpoint");
    add_provider_flags(docs_cmd, flags);

    auto* similarity_cmd =
        app.add_subcommand("similarity", "Score two bytecode files for opcode-profile similarity");
    similarity_cmd->add_option("fileA", code_a, "First bytecode file")->required();
    similarity_cmd->add_option("fileB", code_b, "Second bytecode file")->required();
    add_provider_flags(similarity_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return govaudit::report::kExitUsage;
    }

    try {
        // flags win; the environment fills whatever they left empty
        flags.options.provider.fill_from_env();
        if (!llm_script.empty())
            flags.options.llm_script = llm_script;
        if (!llm_url.empty())
            flags.options.llm_endpoint = llm_url;
        if (flags.options.llm_endpoint.empty())
            if (const char* env = std::getenv("GOVAUDIT_LLM_URL"))
                flags.options.llm_endpoint = env;
        if (const char* env = std::getenv("GOVAUDIT_LLM_KEY"))
            flags.options.llm_key = env;

        if (governance_cmd->parsed()) {
            const auto address = Address::from_hex(address_text);
            if (!address)
                throw govaudit::UsageError("malformed governance address: " + address_text);
            return emit(govaudit::report::cmd_governance(*address, flags.options), flags.json);
        }
        if (proposal_cmd->parsed()) {
            if (!governance_text.empty()) {
                const auto governance = Address::from_hex(governance_text);
                if (!governance)
                    throw govaudit::UsageError("malformed --governance address");
                flags.options.governance = governance;
            }
            return emit(govaudit::report::cmd_proposal(proposal_file, flags.options), flags.json);
        }
        if (docs_cmd->parsed())
            return emit(govaudit::report::cmd_docs(doc_file, flags.options), flags.json);
        if (similarity_cmd->parsed())
            return emit(govaudit::report::cmd_similarity(code_a, code_b, flags.options),
                        flags.json);
    } catch (const govaudit::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return govaudit::report::kExitUsage;
    } catch (const govaudit::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return govaudit::report::kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return govaudit::report::kExitIncomplete;
    }
    return govaudit::report::kExitUsage;
}
