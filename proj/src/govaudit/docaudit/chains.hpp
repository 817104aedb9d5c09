// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace govaudit::docaudit {

enum class RuleId {
    MemberParticipation,
    MemberExit,
    VotingPower,
    MinorityProtection,
    GovernanceProcessGuide,
    AppointmentOfGuardian,
};

std::string to_string(RuleId id);
std::optional<RuleId> rule_id_from_string(const std::string& s);

struct Question {
    std::string key;
    std::string text;
    bool reconstructed = false;
};

/// One documentation rule: the ordered questions on its chain path. A
/// rule is satisfied only when every question answers a verified Yes.
struct DocumentationRule {
    RuleId id;
    std::vector<Question> questions;
};

/// Node of the merged question DAG: rules sharing a prefix share nodes.
struct QuestionChainNode {
    std::string question;
    std::vector<std::shared_ptr<QuestionChainNode>> children;
};

class RuleSet {
  public:
    /// Loads question_chains.json from the data directory.
    static RuleSet load(const std::filesystem::path& data_dir);

    const std::vector<DocumentationRule>& rules() const { return rules_; }
    const DocumentationRule& rule(RuleId id) const;

    /// The merged DAG: shared question prefixes collapse to one node.
    std::shared_ptr<QuestionChainNode> merged_chain() const;

  private:
    std::vector<DocumentationRule> rules_;
};

}  // namespace govaudit::docaudit
