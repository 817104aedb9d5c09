// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>

#include "chains.hpp"
#include "chunker.hpp"
#include "llm_client.hpp"

namespace govaudit::docaudit {

struct LlmAnswer {
    bool yes = false;
    std::string reason;
    std::string raw;
    unsigned retries = 0;
    bool parse_failed = false;  // recorded as No after exhausted retries
};

/// Parses the mandated "Result: Yes/No" (+ optional "Reason: ...")
/// format; nullopt when the text does not follow it.
std::optional<LlmAnswer> parse_llm_answer(const std::string& raw);

struct AuditConfig {
    size_t chunk_size = kDefaultChunkTokens;
    size_t chunk_overlap = kDefaultOverlapTokens;
    unsigned parse_retries = 3;      // total attempts on malformed output
    unsigned transport_retries = 3;  // total attempts on transport errors
    unsigned backoff_ms = 100;
};

/// One question asked against one chunk: prompt assembled as task
/// statement, question, answer-format directive, then the document.
/// Malformed responses are retried then recorded as a flagged No;
/// transport failures are retried then raised as AuditIncompleteError.
LlmAnswer ask(const std::string& question, const Chunk& chunk, LlmClient& client,
              const AuditConfig& config = {});

/// The hallucination guard: asks whether the model's stated reason is
/// actually in the chunk. A Yes whose reason fails this check is demoted.
bool cross_verify(const std::string& reason, const Chunk& chunk, LlmClient& client,
                  const AuditConfig& config = {});

struct TranscriptEntry {
    std::string question;
    size_t chunk_index = 0;
    bool yes = false;
    std::string reason;
    bool verified = false;
    bool demoted = false;  // Yes that failed (or skipped) verification
    unsigned retries = 0;
    bool parse_failed = false;
    bool from_cache = false;  // answered earlier on a shared chain prefix
};

struct DocRuleResult {
    RuleId rule_id;
    bool satisfied = false;
    bool complete = true;  // false when the audit aborted mid-rule
    std::string error;     // audit-incomplete detail
    std::vector<TranscriptEntry> transcript;
};

/// Memo of per-question outcomes so chains sharing a prefix ask each
/// merged question once per document.
using QuestionCache = std::map<std::string, std::pair<bool, std::vector<TranscriptEntry>>>;

/// Walks the rule's chain: a question counts Yes when any chunk yields a
/// verified Yes (first verified Yes short-circuits the remaining
/// chunks); a No stops the chain without asking descendants.
DocRuleResult evaluate_rule(const DocumentationRule& rule, const std::string& document,
                            LlmClient& client, const AuditConfig& config = {},
                            QuestionCache* cache = nullptr);

struct DocAuditReport {
    std::vector<DocRuleResult> results;  // one per rule, rule-set order
};

/// All six rules over one document; per-rule failures are recorded
/// independently rather than aborting the whole audit.
DocAuditReport audit_documentation(const std::string& document, LlmClient& client,
                                   const RuleSet& rules, const AuditConfig& config = {});

}  // namespace govaudit::docaudit
