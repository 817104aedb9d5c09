// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "caching_provider.hpp"

namespace govaudit::chaindata {

using nlohmann::json;

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Live: return "live";
        case Mode::Record: return "record";
        case Mode::Replay: return "replay";
    }
    return "live";
}

std::optional<Mode> mode_from_string(const std::string& s) {
    if (s == "live") return Mode::Live;
    if (s == "record") return Mode::Record;
    if (s == "replay") return Mode::Replay;
    return std::nullopt;
}

CachingProvider::CachingProvider(std::shared_ptr<ChainDataProvider> upstream, Mode mode,
                                 std::filesystem::path cache_dir, uint64_t chain_id)
    : upstream_(std::move(upstream)), mode_(mode), cache_(std::move(cache_dir), chain_id) {
    if (mode_ != Mode::Replay && !upstream_)
        throw UsageError("live/record modes require an upstream provider");
}

json CachingProvider::round_trip(const std::string& method, const json& params,
                                 const std::function<json()>& fetch) {
    if (mode_ == Mode::Replay) {
        auto cached = cache_.load(method, params);
        if (!cached)
            throw ReplayMissError(cache_.key_of(method, params));
        return *cached;
    }
    const json result = fetch();
    if (mode_ == Mode::Record || !cache_.dir().empty())
        cache_.store(method, params, result);
    return result;
}

Bytes CachingProvider::get_code(const Address& address) {
    const json result = round_trip("get_code", json::array({address.to_hex()}), [&] {
        return json{{"code", to_hex_prefixed(upstream_->get_code(address))}};
    });
    return *from_hex(result.at("code").get<std::string>());
}

Word CachingProvider::get_storage(const Address& address, const Word& slot) {
    const json params = json::array({address.to_hex(), slot.to_hex()});
    const json result = round_trip("get_storage", params, [&] {
        return json{{"value", upstream_->get_storage(address, slot).to_hex()}};
    });
    return *Word::from_hex(result.at("value").get<std::string>());
}

std::optional<CreationInfo> CachingProvider::get_creation(const Address& address) {
    const json result = round_trip("get_creation", json::array({address.to_hex()}), [&] {
        const auto info = upstream_->get_creation(address);
        if (!info)
            return json{{"found", false}};
        return json{{"found", true},
                    {"creator", info->creator.to_hex()},
                    {"txId", info->tx_id},
                    {"kind", to_string(info->kind)},
                    {"kindSource", info->kind_source == KindSource::Trace ? "trace" : "record"}};
    });
    if (!result.at("found").get<bool>())
        return std::nullopt;
    CreationInfo info;
    info.creator = *Address::from_hex(result.at("creator").get<std::string>());
    info.tx_id = result.at("txId").get<std::string>();
    info.kind = creation_kind_from_string(result.at("kind").get<std::string>())
                    .value_or(CreationKind::Unknown);
    info.kind_source =
        result.at("kindSource").get<std::string>() == "trace" ? KindSource::Trace : KindSource::Record;
    return info;
}

std::vector<std::string> CachingProvider::get_trace_opcodes(const std::string& tx_id) {
    const json result = round_trip("trace_opcodes", json::array({tx_id}), [&]() -> json {
        try {
            return json{{"opcodes", upstream_->get_trace_opcodes(tx_id)}};
        } catch (const CapabilityError& e) {
            // cache the capability gap so replay reproduces it
            return json{{"error", "capability"}, {"message", e.what()}};
        }
    });
    if (result.contains("error"))
        throw CapabilityError(result.at("message").get<std::string>());
    return result.at("opcodes").get<std::vector<std::string>>();
}

bool CachingProvider::is_verified(const Address& address) {
    const json result = round_trip("is_verified", json::array({address.to_hex()}), [&] {
        return json{{"verified", upstream_->is_verified(address)}};
    });
    return result.at("verified").get<bool>();
}

ContractMetadata CachingProvider::get_metadata(const Address& address) {
    const json result = round_trip("metadata", json::array({address.to_hex()}), [&] {
        const auto md = upstream_->get_metadata(address);
        json j{{"verified", md.verified}};
        j["abi"] = md.abi ? json(*md.abi) : json(nullptr);
        j["nameTag"] = md.name_tag ? json(*md.name_tag) : json(nullptr);
        j["symbol"] = md.symbol ? json(*md.symbol) : json(nullptr);
        return j;
    });
    ContractMetadata md;
    md.address = address;
    md.verified = result.at("verified").get<bool>();
    if (!result.at("abi").is_null())
        md.abi = result.at("abi").get<std::vector<std::string>>();
    if (!result.at("nameTag").is_null())
        md.name_tag = result.at("nameTag").get<std::string>();
    if (!result.at("symbol").is_null())
        md.symbol = result.at("symbol").get<std::string>();
    return md;
}

std::optional<uint32_t> CachingProvider::get_token_decimals(const Address& address) {
    const json result = round_trip("decimals", json::array({address.to_hex()}), [&] {
        const auto d = upstream_->get_token_decimals(address);
        return json{{"decimals", d ? json(*d) : json(nullptr)}};
    });
    if (result.at("decimals").is_null())
        return std::nullopt;
    return result.at("decimals").get<uint32_t>();
}

std::vector<std::string> CachingProvider::lookup_signature(const Selector& selector) {
    const json result = round_trip("sig_lookup", json::array({selector.to_hex()}), [&] {
        return json{{"candidates", upstream_->lookup_signature(selector)}};
    });
    return result.at("candidates").get<std::vector<std::string>>();
}

}  // namespace govaudit::chaindata
