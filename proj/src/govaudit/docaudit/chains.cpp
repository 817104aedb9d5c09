// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "chains.hpp"

#include <fstream>
#include <optional>

#include <json.hpp>

#include "../common/errors.hpp"

namespace govaudit::docaudit {

using nlohmann::json;

std::string to_string(RuleId id) {
    switch (id) {
        case RuleId::MemberParticipation: return "MemberParticipation";
        case RuleId::MemberExit: return "MemberExit";
        case RuleId::VotingPower: return "VotingPower";
        case RuleId::MinorityProtection: return "MinorityProtection";
        case RuleId::GovernanceProcessGuide: return "GovernanceProcessGuide";
        case RuleId::AppointmentOfGuardian: return "AppointmentOfGuardian";
    }
    return "?";
}

std::optional<RuleId> rule_id_from_string(const std::string& s) {
    if (s == "MemberParticipation") return RuleId::MemberParticipation;
    if (s == "MemberExit") return RuleId::MemberExit;
    if (s == "VotingPower") return RuleId::VotingPower;
    if (s == "MinorityProtection") return RuleId::MinorityProtection;
    if (s == "GovernanceProcessGuide") return RuleId::GovernanceProcessGuide;
    if (s == "AppointmentOfGuardian") return RuleId::AppointmentOfGuardian;
    return std::nullopt;
}

RuleSet RuleSet::load(const std::filesystem::path& data_dir) {
    const auto path = data_dir / "question_chains.json";
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }

    std::map<std::string, Question> questions;
    for (const auto& [key, q] : doc.at("questions").items()) {
        Question question;
        question.key = key;
        question.text = q.at("text").get<std::string>();
        question.reconstructed = q.value("reconstructed", true);
        questions[key] = std::move(question);
    }

    RuleSet set;
    for (const auto& rule_doc : doc.at("rules")) {
        const auto id = rule_id_from_string(rule_doc.at("id").get<std::string>());
        if (!id)
            throw InputError("question_chains.json: unknown rule id " +
                             rule_doc.at("id").get<std::string>());
        DocumentationRule rule;
        rule.id = *id;
        for (const auto& key : rule_doc.at("path")) {
            const auto q = questions.find(key.get<std::string>());
            if (q == questions.end())
                throw InputError("question_chains.json: rule references unknown question " +
                                 key.get<std::string>());
            rule.questions.push_back(q->second);
        }
        if (rule.questions.empty())
            throw InputError("question_chains.json: rule " + to_string(*id) + " has no questions");
        set.rules_.push_back(std::move(rule));
    }
    if (set.rules_.size() != 6)
        throw InputError("question_chains.json must define exactly the six rules");
    return set;
}

const DocumentationRule& RuleSet::rule(RuleId id) const {
    for (const auto& rule : rules_)
        if (rule.id == id)
            return rule;
    throw UsageError("rule not loaded: " + to_string(id));
}

std::shared_ptr<QuestionChainNode> RuleSet::merged_chain() const {
    auto root = std::make_shared<QuestionChainNode>();
    root->question = "";  // sentinel root
    for (const auto& rule : rules_) {
        auto current = root;
        for (const auto& question : rule.questions) {
            std::shared_ptr<QuestionChainNode> next;
            for (const auto& child : current->children)
                if (child->question == question.text) {
                    next = child;
                    break;
                }
            if (!next) {
                next = std::make_shared<QuestionChainNode>();
                next->question = question.text;
                current->children.push_back(next);
            }
            current = next;
        }
    }
    return root;
}

}  // namespace govaudit::docaudit
