// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "../chaindata/transport.hpp"

namespace govaudit::docaudit {

/// Prompt-in, text-out client. Transport failures surface as DataError.
class LlmClient {
  public:
    virtual ~LlmClient() = default;
    virtual std::string complete(const std::string& prompt) = 0;
};

/// Deterministic mock driven by an ordered script of
/// {"match": substring, "response": text} records (JSONL). The first
/// unconsumed record whose match occurs in the prompt answers it;
/// records default to reusable, {"consume": true} one-shots support
/// retry scripts, {"error": "..."} simulates transport failure. Prompts
/// nothing matches get a flat "Result: No" and are counted.
class ScriptedLlmClient : public LlmClient {
  public:
    struct Entry {
        std::string match;
        std::string response;
        bool consume = false;
        bool consumed = false;
        std::string error;  // non-empty: throw DataError(error)
    };

    static ScriptedLlmClient from_file(const std::filesystem::path& script);
    static ScriptedLlmClient from_entries(std::vector<Entry> entries);

    std::string complete(const std::string& prompt) override;

    size_t unmatched_prompts() const { return unmatched_; }
    size_t calls() const { return calls_; }

  private:
    std::vector<Entry> entries_;
    size_t unmatched_ = 0;
    size_t calls_ = 0;
};

/// Live client for an endpoint speaking {"prompt": ...} -> {"text": ...}.
/// Configured via GOVAUDIT_LLM_URL and GOVAUDIT_LLM_KEY.
class HttpLlmClient : public LlmClient {
  public:
    HttpLlmClient(std::unique_ptr<chaindata::Transport> transport, std::string endpoint,
                  std::string api_key);
    std::string complete(const std::string& prompt) override;

  private:
    std::unique_ptr<chaindata::Transport> transport_;
    std::string endpoint_;
    std::string api_key_;
};

}  // namespace govaudit::docaudit
