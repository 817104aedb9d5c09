// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "provider.hpp"

namespace govaudit::chaindata {

/// Map-backed provider. Serves unit tests and acts as the seeded
/// upstream when recording fixture caches.
class InMemoryProvider : public ChainDataProvider {
  public:
    Bytes get_code(const Address& address) override {
        const auto it = code_.find(address);
        return it == code_.end() ? Bytes{} : it->second;
    }

    Word get_storage(const Address& address, const Word& slot) override {
        const auto it = storage_.find({address, slot});
        return it == storage_.end() ? Word{} : it->second;
    }

    std::optional<CreationInfo> get_creation(const Address& address) override {
        const auto it = creations_.find(address);
        if (it == creations_.end())
            return std::nullopt;
        return it->second;
    }

    std::vector<std::string> get_trace_opcodes(const std::string& tx_id) override {
        const auto it = traces_.find(tx_id);
        if (it == traces_.end())
            throw CapabilityError("no trace available for tx " + tx_id);
        return it->second;
    }

    bool is_verified(const Address& address) override {
        const auto it = metadata_.find(address);
        return it != metadata_.end() && it->second.verified;
    }

    ContractMetadata get_metadata(const Address& address) override {
        const auto it = metadata_.find(address);
        if (it != metadata_.end())
            return it->second;
        ContractMetadata blank;
        blank.address = address;
        return blank;
    }

    std::optional<uint32_t> get_token_decimals(const Address& address) override {
        const auto it = decimals_.find(address);
        if (it == decimals_.end())
            return std::nullopt;
        return it->second;
    }

    std::vector<std::string> lookup_signature(const Selector& selector) override {
        const auto it = signatures_.find(selector);
        return it == signatures_.end() ? std::vector<std::string>{} : it->second;
    }

    // seeding
    void set_code(const Address& a, Bytes code) { code_[a] = std::move(code); }
    void set_storage(const Address& a, const Word& slot, const Word& value) {
        storage_[{a, slot}] = value;
    }
    void set_creation(const Address& a, CreationInfo info) { creations_[a] = std::move(info); }
    void set_trace(const std::string& tx, std::vector<std::string> opcodes) {
        traces_[tx] = std::move(opcodes);
    }
    void set_metadata(ContractMetadata md) { metadata_[md.address] = std::move(md); }
    void set_decimals(const Address& a, uint32_t d) { decimals_[a] = d; }
    void add_signature(const Selector& sel, const std::string& canonical) {
        signatures_[sel].push_back(canonical);
    }

  private:
    std::map<Address, Bytes> code_;
    std::map<std::pair<Address, Word>, Word> storage_;
    std::map<Address, CreationInfo> creations_;
    std::map<std::string, std::vector<std::string>> traces_;
    std::map<Address, ContractMetadata> metadata_;
    std::map<Address, uint32_t> decimals_;
    std::map<Selector, std::vector<std::string>> signatures_;
};

}  // namespace govaudit::chaindata
