// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "llm_client.hpp"

#include <fstream>

#include <json.hpp>

#include "../common/errors.hpp"

namespace govaudit::docaudit {

using nlohmann::json;

ScriptedLlmClient ScriptedLlmClient::from_file(const std::filesystem::path& script) {
    std::ifstream in(script);
    if (!in)
        throw InputError("cannot open LLM script " + script.string());
    std::vector<Entry> entries;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::exception& e) {
            throw InputError(script.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        Entry entry;
        entry.match = doc.value("match", "");
        entry.response = doc.value("response", "");
        entry.consume = doc.value("consume", false);
        entry.error = doc.value("error", "");
        entries.push_back(std::move(entry));
    }
    return from_entries(std::move(entries));
}

ScriptedLlmClient ScriptedLlmClient::from_entries(std::vector<Entry> entries) {
    ScriptedLlmClient client;
    client.entries_ = std::move(entries);
    return client;
}

std::string ScriptedLlmClient::complete(const std::string& prompt) {
    ++calls_;
    for (auto& entry : entries_) {
        if (entry.consumed)
            continue;
        if (!entry.match.empty() && prompt.find(entry.match) == std::string::npos)
            continue;
        if (entry.consume)
            entry.consumed = true;
        if (!entry.error.empty())
            throw DataError(entry.error);
        return entry.response;
    }
    ++unmatched_;
    return "Result: No. Reason: no scripted answer matched.";
}

HttpLlmClient::HttpLlmClient(std::unique_ptr<chaindata::Transport> transport, std::string endpoint,
                             std::string api_key)
    : transport_(std::move(transport)), endpoint_(std::move(endpoint)), api_key_(std::move(api_key)) {
    if (endpoint_.empty())
        throw UsageError("LLM endpoint is not configured");
}

std::string HttpLlmClient::complete(const std::string& prompt) {
    json body{{"prompt", prompt}};
    if (!api_key_.empty())
        body["apiKey"] = api_key_;
    const std::string response = transport_->post_json(endpoint_, body.dump());
    try {
        const json doc = json::parse(response);
        if (doc.contains("text"))
            return doc["text"].get<std::string>();
    } catch (const json::exception&) {
        // fall through: some endpoints answer with plain text
    }
    return response;
}

}  // namespace govaudit::docaudit
