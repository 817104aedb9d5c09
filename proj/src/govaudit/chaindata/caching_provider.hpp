// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>

#include "cache.hpp"
#include "provider.hpp"

namespace govaudit::chaindata {

enum class Mode { Live, Record, Replay };

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& s);

/// Record-replay wrapper around any provider.
///  - live:   pass through; responses are cached when a cache dir is set
///  - record: pass through and always cache
///  - replay: serve from cache only; a miss raises ReplayMissError with
///    the exact key, and the upstream is never touched
class CachingProvider : public ChainDataProvider {
  public:
    CachingProvider(std::shared_ptr<ChainDataProvider> upstream, Mode mode,
                    std::filesystem::path cache_dir, uint64_t chain_id);

    Bytes get_code(const Address& address) override;
    Word get_storage(const Address& address, const Word& slot) override;
    std::optional<CreationInfo> get_creation(const Address& address) override;
    std::vector<std::string> get_trace_opcodes(const std::string& tx_id) override;
    bool is_verified(const Address& address) override;
    ContractMetadata get_metadata(const Address& address) override;
    std::optional<uint32_t> get_token_decimals(const Address& address) override;
    std::vector<std::string> lookup_signature(const Selector& selector) override;

    Mode mode() const { return mode_; }

  private:
    nlohmann::json round_trip(const std::string& method, const nlohmann::json& params,
                              const std::function<nlohmann::json()>& fetch);

    std::shared_ptr<ChainDataProvider> upstream_;
    Mode mode_;
    ResponseCache cache_;
};

}  // namespace govaudit::chaindata
