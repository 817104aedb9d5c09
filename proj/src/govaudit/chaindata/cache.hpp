// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "../common/hex.hpp"

namespace govaudit::chaindata {

/// One structured-text file per response, named by the hash of the
/// request key and carrying a version header plus the readable key
/// fields, so fixture diffs stay reviewable.
class ResponseCache {
  public:
    static constexpr int kFormatVersion = 1;

    ResponseCache(std::filesystem::path dir, uint64_t chain_id);

    /// Human-readable cache key for a request.
    std::string key_of(const std::string& method, const nlohmann::json& params) const;

    std::optional<nlohmann::json> load(const std::string& method,
                                       const nlohmann::json& params) const;

    /// Atomic write (temp file + rename).
    void store(const std::string& method, const nlohmann::json& params,
               const nlohmann::json& result) const;

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path file_for(const std::string& key) const;

    std::filesystem::path dir_;
    uint64_t chain_id_;
};

}  // namespace govaudit::chaindata
