// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "../common/types.hpp"
#include "../common/u256.hpp"

namespace govaudit::proposal {

/// One call the governance contract would execute: what event logs carry.
struct ProposalCall {
    Address target;
    U256 value;  // wei
    std::optional<Selector> signature;
    Bytes calldata;
};

struct ProposalRecord {
    std::string id;
    std::string description;
    std::vector<ProposalCall> calls;
};

/// Parses the proposal file format documented in docs/formats.md:
/// {"id", "description", "calls": [{"target","value","signature","calldata"}]}.
/// Throws InputError on malformed input. When a signature is present the
/// calldata must begin with it.
ProposalRecord parse_proposal(const std::string& json_text);
ProposalRecord load_proposal_file(const std::filesystem::path& path);

}  // namespace govaudit::proposal
