// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cache.hpp"

#include <fstream>

#include <json.hpp>

#include "../common/errors.hpp"
#include "../evm/keccak.hpp"

namespace govaudit::chaindata {

using nlohmann::ordered_json;

ResponseCache::ResponseCache(std::filesystem::path dir, uint64_t chain_id)
    : dir_(std::move(dir)), chain_id_(chain_id) {}

std::string ResponseCache::key_of(const std::string& method, const nlohmann::json& params) const {
    return "v1|chain:" + std::to_string(chain_id_) + "|" + method + "|" + params.dump();
}

std::filesystem::path ResponseCache::file_for(const std::string& key) const {
    const Word digest = evm::keccak256(key);
    return dir_ / (to_hex(ByteView{digest.bytes.data(), 16}) + ".json");
}

std::optional<nlohmann::json> ResponseCache::load(const std::string& method,
                                                  const nlohmann::json& params) const {
    const auto path = file_for(key_of(method, params));
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("corrupt cache file " + path.string() + ": " + e.what());
    }
    if (!doc.contains("govaudit_cache") || doc["govaudit_cache"].get<int>() != kFormatVersion)
        throw DataError("unsupported cache format in " + path.string());
    return doc.at("result");
}

void ResponseCache::store(const std::string& method, const nlohmann::json& params,
                          const nlohmann::json& result) const {
    std::filesystem::create_directories(dir_);
    const std::string key = key_of(method, params);
    const auto path = file_for(key);

    ordered_json doc;
    doc["govaudit_cache"] = kFormatVersion;
    doc["chainId"] = chain_id_;
    doc["method"] = method;
    doc["params"] = params;
    doc["result"] = result;

    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw DataError("cannot write cache file " + tmp);
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace govaudit::chaindata
