// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <semaphore>

#include "config.hpp"
#include "provider.hpp"
#include "transport.hpp"

namespace govaudit::chaindata {

/// Live provider over generic JSON-over-HTTP endpoints: a JSON-RPC node,
/// a scanner (creation records, verification, ABI, name tags, traces)
/// and a signature database. Response shapes are normalized here; see
/// docs/formats.md for the wire contracts. Requests are retried per the
/// configured policy and bounded to max_in_flight concurrent calls.
class HttpProvider : public ChainDataProvider {
  public:
    HttpProvider(std::unique_ptr<Transport> transport, ProviderConfig config);

    Bytes get_code(const Address& address) override;
    Word get_storage(const Address& address, const Word& slot) override;
    std::optional<CreationInfo> get_creation(const Address& address) override;
    std::vector<std::string> get_trace_opcodes(const std::string& tx_id) override;
    bool is_verified(const Address& address) override;
    ContractMetadata get_metadata(const Address& address) override;
    std::optional<uint32_t> get_token_decimals(const Address& address) override;
    std::vector<std::string> lookup_signature(const Selector& selector) override;

  private:
    std::string fetch_get(const std::string& url);
    std::string rpc_call(const std::string& method, const std::string& params_json);
    std::string with_retries(const std::function<std::string()>& op);
    std::optional<Bytes> eth_call(const Address& to, const Selector& selector);
    std::string scanner_url(const std::string& action, const std::string& query) const;

    std::unique_ptr<Transport> transport_;
    ProviderConfig config_;
    std::counting_semaphore<64> in_flight_;
};

}  // namespace govaudit::chaindata
