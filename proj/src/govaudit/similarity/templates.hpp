// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "../common/types.hpp"
#include "../evm/functions.hpp"

namespace govaudit::similarity {

/// One line of templates.jsonl. Contract-role records carry whole
/// governance-contract bytecode; propose/vote/execute records carry a
/// contract whose named selector marks the template function body, one
/// record per compiler version.
struct TemplateRecord {
    std::string name;
    std::string platform;
    uint64_t chain_id = 0;
    std::string role;  // contract | propose | vote | execute
    std::string compiler_version;
    Bytes runtime_bytecode;
    std::vector<Selector> function_selectors;
};

struct DeployerRecord {
    std::string platform;
    uint64_t chain_id = 0;
    std::vector<Address> addresses;
};

/// Static fixtures backing the soundness checks: template bytecodes,
/// platform deployer lists and documented-open-source attestations.
/// Loaded from a fixtures directory holding templates.jsonl,
/// deployers.jsonl and attestations.jsonl (each optional).
class TemplateStore {
  public:
    static TemplateStore load(const std::filesystem::path& fixtures_dir);

    std::vector<TemplateRecord> contract_templates(uint64_t chain_id) const;

    /// Template function bodies for one governance role, all compiler
    /// versions.
    std::vector<evm::FunctionBody> function_variants(uint64_t chain_id,
                                                     const std::string& role) const;

    std::optional<std::string> deployer_platform(const Address& deployer, uint64_t chain_id) const;
    bool attested_open_source(const Address& address) const;

    const std::vector<TemplateRecord>& records() const { return records_; }

  private:
    std::vector<TemplateRecord> records_;
    std::vector<DeployerRecord> deployers_;
    std::vector<Address> attestations_;
};

}  // namespace govaudit::similarity
