// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "audit.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <thread>

#include "../common/errors.hpp"

namespace govaudit::docaudit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string ask_prompt(const std::string& question, const Chunk& chunk) {
    return "Your task is to answer the question based on the provided document. "
           "Here is the question: " +
           question +
           " Your answer format should be Result: Yes/No. Reason: [REASON]. "
           "The document is provided below: " +
           chunk.text;
}

std::string verify_prompt(const std::string& reason, const Chunk& chunk) {
    return "Your task is to check if the sentence content is mentioned in the document. "
           "Here is the sentence: " +
           reason +
           " Your answer format should be Result: Yes/No. "
           "The document is provided below: " +
           chunk.text;
}

std::string complete_with_transport_retries(LlmClient& client, const std::string& prompt,
                                            const AuditConfig& config) {
    unsigned attempt = 0;
    while (true) {
        try {
            return client.complete(prompt);
        } catch (const DataError& e) {
            if (++attempt >= std::max(config.transport_retries, 1u))
                throw AuditIncompleteError(std::string("LLM endpoint unavailable: ") + e.what());
            std::this_thread::sleep_for(std::chrono::milliseconds(config.backoff_ms * attempt));
        }
    }
}

}  // namespace

std::optional<LlmAnswer> parse_llm_answer(const std::string& raw) {
    const std::string folded = lower(raw);
    const auto result_pos = folded.find("result:");
    if (result_pos == std::string::npos)
        return std::nullopt;
    size_t i = result_pos + 7;
    while (i < folded.size() && std::isspace(static_cast<unsigned char>(folded[i])))
        ++i;
    LlmAnswer answer;
    answer.raw = raw;
    if (folded.compare(i, 3, "yes") == 0)
        answer.yes = true;
    else if (folded.compare(i, 2, "no") == 0)
        answer.yes = false;
    else
        return std::nullopt;

    const auto reason_pos = folded.find("reason:", i);
    if (reason_pos != std::string::npos) {
        std::string reason = raw.substr(reason_pos + 7);
        reason.erase(0, reason.find_first_not_of(" \t\n"));
        reason.erase(reason.find_last_not_of(" \t\n") + 1);
        answer.reason = reason;
    }
    return answer;
}

LlmAnswer ask(const std::string& question, const Chunk& chunk, LlmClient& client,
              const AuditConfig& config) {
    const std::string prompt = ask_prompt(question, chunk);
    std::string raw;
    for (unsigned attempt = 0; attempt < std::max(config.parse_retries, 1u); ++attempt) {
        raw = complete_with_transport_retries(client, prompt, config);
        if (auto answer = parse_llm_answer(raw)) {
            answer->retries = attempt;
            return *answer;
        }
    }
    // unparseable after retries: recorded as No with the flag set
    LlmAnswer answer;
    answer.yes = false;
    answer.raw = raw;
    answer.retries = std::max(config.parse_retries, 1u) - 1;
    answer.parse_failed = true;
    return answer;
}

bool cross_verify(const std::string& reason, const Chunk& chunk, LlmClient& client,
                  const AuditConfig& config) {
    const std::string prompt = verify_prompt(reason, chunk);
    for (unsigned attempt = 0; attempt < std::max(config.parse_retries, 1u); ++attempt) {
        const std::string raw = complete_with_transport_retries(client, prompt, config);
        if (const auto answer = parse_llm_answer(raw))
            return answer->yes;
    }
    return false;  // unverifiable confirmations do not count
}

namespace {

// one question over all chunks: first verified Yes wins
std::pair<bool, std::vector<TranscriptEntry>> evaluate_question(const std::string& question,
                                                                const std::vector<Chunk>& chunks,
                                                                LlmClient& client,
                                                                const AuditConfig& config) {
    std::vector<TranscriptEntry> transcript;
    for (const auto& chunk : chunks) {
        const LlmAnswer answer = ask(question, chunk, client, config);
        TranscriptEntry entry;
        entry.question = question;
        entry.chunk_index = chunk.index;
        entry.yes = answer.yes;
        entry.reason = answer.reason;
        entry.retries = answer.retries;
        entry.parse_failed = answer.parse_failed;

        if (answer.yes) {
            if (answer.reason.empty()) {
                // nothing to verify; the guard demotes it
                entry.demoted = true;
            } else if (cross_verify(answer.reason, chunk, client, config)) {
                entry.verified = true;
                transcript.push_back(std::move(entry));
                return {true, std::move(transcript)};
            } else {
                entry.demoted = true;
            }
        }
        transcript.push_back(std::move(entry));
    }
    return {false, std::move(transcript)};
}

}  // namespace

DocRuleResult evaluate_rule(const DocumentationRule& rule, const std::string& document,
                            LlmClient& client, const AuditConfig& config, QuestionCache* cache) {
    DocRuleResult result;
    result.rule_id = rule.id;

    const auto chunks = chunk_document(document, config.chunk_size, config.chunk_overlap);

    try {
        for (const auto& question : rule.questions) {
            std::pair<bool, std::vector<TranscriptEntry>> outcome;
            bool from_cache = false;
            if (cache) {
                const auto hit = cache->find(question.text);
                if (hit != cache->end()) {
                    outcome = hit->second;
                    from_cache = true;
                }
            }
            if (!from_cache) {
                outcome = evaluate_question(question.text, chunks, client, config);
                if (cache)
                    (*cache)[question.text] = outcome;
            }
            for (auto entry : outcome.second) {
                entry.from_cache = from_cache;
                result.transcript.push_back(std::move(entry));
            }
            if (!outcome.first) {
                result.satisfied = false;
                return result;  // chain gating: descendants are not asked
            }
        }
        result.satisfied = true;
    } catch (const AuditIncompleteError& e) {
        result.complete = false;
        result.error = e.what();
        result.satisfied = false;
    }
    return result;
}

DocAuditReport audit_documentation(const std::string& document, LlmClient& client,
                                   const RuleSet& rules, const AuditConfig& config) {
    DocAuditReport report;
    QuestionCache cache;
    for (const auto& rule : rules.rules())
        report.results.push_back(evaluate_rule(rule, document, client, config, &cache));
    return report;
}

}  // namespace govaudit::docaudit
