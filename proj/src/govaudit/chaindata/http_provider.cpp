// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "http_provider.hpp"

#include <chrono>
#include <functional>
#include <thread>

#include <json.hpp>

namespace govaudit::chaindata {

using nlohmann::json;

namespace {

class SemaphoreGuard {
  public:
    explicit SemaphoreGuard(std::counting_semaphore<64>& sem) : sem_(sem) { sem_.acquire(); }
    ~SemaphoreGuard() { sem_.release(); }
    SemaphoreGuard(const SemaphoreGuard&) = delete;
    SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

  private:
    std::counting_semaphore<64>& sem_;
};

json parse(const std::string& body, const std::string& context) {
    try {
        return json::parse(body);
    } catch (const json::exception& e) {
        throw DataError("malformed response from " + context + ": " + e.what());
    }
}

}  // namespace

HttpProvider::HttpProvider(std::unique_ptr<Transport> transport, ProviderConfig config)
    : transport_(std::move(transport)),
      config_(std::move(config)),
      in_flight_(static_cast<std::ptrdiff_t>(
          std::min<unsigned>(std::max<unsigned>(config_.max_in_flight, 1), 64))) {}

std::string HttpProvider::with_retries(const std::function<std::string()>& op) {
    unsigned attempt = 0;
    while (true) {
        try {
            SemaphoreGuard guard(in_flight_);
            return op();
        } catch (const DataError&) {
            if (++attempt >= std::max(config_.retry.attempts, 1u))
                throw;
            std::this_thread::sleep_for(std::chrono::milliseconds(config_.retry.backoff_ms * attempt));
        }
    }
}

std::string HttpProvider::fetch_get(const std::string& url) {
    return with_retries([&] { return transport_->get(url); });
}

std::string HttpProvider::rpc_call(const std::string& method, const std::string& params_json) {
    if (config_.rpc_endpoint.empty())
        throw UsageError("RPC endpoint is not configured");
    const std::string body =
        R"({"jsonrpc":"2.0","id":1,"method":")" + method + R"(","params":)" + params_json + "}";
    const std::string response =
        with_retries([&] { return transport_->post_json(config_.rpc_endpoint, body); });
    const json doc = parse(response, config_.rpc_endpoint);
    if (doc.contains("error"))
        throw DataError("RPC error from " + method + ": " + doc["error"].dump());
    if (!doc.contains("result"))
        throw DataError("RPC response for " + method + " lacks a result");
    return doc["result"].is_string() ? doc["result"].get<std::string>() : doc["result"].dump();
}

std::string HttpProvider::scanner_url(const std::string& action, const std::string& query) const {
    if (config_.scanner_endpoint.empty())
        throw UsageError("scanner endpoint is not configured");
    std::string url = config_.scanner_endpoint + "/api?action=" + action + "&" + query;
    if (!config_.scanner_key.empty())
        url += "&apikey=" + config_.scanner_key;
    return url;
}

Bytes HttpProvider::get_code(const Address& address) {
    const std::string result = rpc_call("eth_getCode", R"([")" + address.to_hex() + R"(","latest"])");
    const auto bytes = from_hex(result);
    if (!bytes)
        throw DataError("eth_getCode returned non-hex data");
    return *bytes;
}

Word HttpProvider::get_storage(const Address& address, const Word& slot) {
    const std::string result = rpc_call(
        "eth_getStorageAt", R"([")" + address.to_hex() + R"(",")" + slot.to_hex() + R"(","latest"])");
    const auto word = Word::from_hex(result);
    if (!word)
        throw DataError("eth_getStorageAt returned a malformed word");
    return *word;
}

std::optional<CreationInfo> HttpProvider::get_creation(const Address& address) {
    const std::string body = fetch_get(scanner_url("getcreation", "address=" + address.to_hex()));
    const json doc = parse(body, "scanner getcreation");
    if (doc.is_null() || (doc.contains("found") && !doc["found"].get<bool>()))
        return std::nullopt;
    CreationInfo info;
    const auto creator = Address::from_hex(doc.at("creator").get<std::string>());
    if (!creator)
        throw DataError("scanner returned a malformed creator address");
    info.creator = *creator;
    info.tx_id = doc.value("txHash", "");
    info.kind = creation_kind_from_string(doc.value("kind", "unknown")).value_or(CreationKind::Unknown);
    info.kind_source = KindSource::Record;
    return info;
}

std::vector<std::string> HttpProvider::get_trace_opcodes(const std::string& tx_id) {
    json doc;
    try {
        const std::string body = fetch_get(scanner_url("traceopcodes", "tx=" + tx_id));
        doc = parse(body, "scanner traceopcodes");
    } catch (const DataError& e) {
        throw CapabilityError(std::string("trace endpoint unavailable: ") + e.what());
    }
    if (!doc.contains("opcodes") || !doc["opcodes"].is_array())
        throw CapabilityError("endpoint does not support opcode tracing");
    return doc["opcodes"].get<std::vector<std::string>>();
}

bool HttpProvider::is_verified(const Address& address) {
    const std::string body = fetch_get(scanner_url("verified", "address=" + address.to_hex()));
    return parse(body, "scanner verified").value("verified", false);
}

std::optional<Bytes> HttpProvider::eth_call(const Address& to, const Selector& selector) {
    try {
        const std::string result = rpc_call(
            "eth_call",
            R"([{"to":")" + to.to_hex() + R"(","data":")" + selector.to_hex() + R"("},"latest"])");
        return from_hex(result);
    } catch (const DataError&) {
        return std::nullopt;  // reverting calls degrade to absent fields
    }
}

ContractMetadata HttpProvider::get_metadata(const Address& address) {
    ContractMetadata md;
    md.address = address;
    md.verified = is_verified(address);
    if (md.verified) {
        const std::string body = fetch_get(scanner_url("abi", "address=" + address.to_hex()));
        const json doc = parse(body, "scanner abi");
        if (doc.contains("functions") && doc["functions"].is_array())
            md.abi = doc["functions"].get<std::vector<std::string>>();
    }
    const std::string tag_body = fetch_get(scanner_url("nametag", "address=" + address.to_hex()));
    const json tag_doc = parse(tag_body, "scanner nametag");
    if (tag_doc.contains("nameTag") && tag_doc["nameTag"].is_string())
        md.name_tag = tag_doc["nameTag"].get<std::string>();

    // symbol() == 0x95d89b41; ABI-encoded dynamic string return
    static const Selector kSymbolSelector{{0x95, 0xd8, 0x9b, 0x41}};
    if (const auto ret = eth_call(address, kSymbolSelector); ret && ret->size() >= 64) {
        size_t length = 0;
        for (size_t i = 32; i < 64; ++i)
            length = length << 8 | (*ret)[i];
        if (length > 0 && 64 + length <= ret->size())
            md.symbol = std::string(ret->begin() + 64, ret->begin() + 64 + static_cast<long>(length));
    }
    return md;
}

std::optional<uint32_t> HttpProvider::get_token_decimals(const Address& address) {
    // decimals() == 0x313ce567; uint8 return
    static const Selector kDecimalsSelector{{0x31, 0x3c, 0xe5, 0x67}};
    const auto ret = eth_call(address, kDecimalsSelector);
    if (!ret || ret->size() < 32)
        return std::nullopt;
    return (*ret)[31];
}

std::vector<std::string> HttpProvider::lookup_signature(const Selector& selector) {
    if (config_.sig_db_endpoint.empty())
        return {};
    const std::string body =
        fetch_get(config_.sig_db_endpoint + "/signatures?hex=" + to_hex(ByteView{selector.bytes.data(), 4}));
    const json doc = parse(body, "signature database");
    std::vector<std::string> out;
    if (doc.contains("results") && doc["results"].is_array()) {
        for (const auto& item : doc["results"]) {
            if (item.is_string())
                out.push_back(item.get<std::string>());
            else if (item.is_object() && item.contains("text"))
                out.push_back(item["text"].get<std::string>());
        }
    }
    return out;
}

}  // namespace govaudit::chaindata
