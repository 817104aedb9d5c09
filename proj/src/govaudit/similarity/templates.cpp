// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "templates.hpp"

#include <fstream>
#include <functional>

#include <json.hpp>

#include "../common/errors.hpp"

namespace govaudit::similarity {

using nlohmann::json;

namespace {

json parse_line(const std::string& line, const std::filesystem::path& file, size_t lineno) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw InputError(file.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
}

void for_each_record(const std::filesystem::path& file,
                     const std::function<void(const json&)>& fn) {
    std::ifstream in(file);
    if (!in)
        return;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        fn(parse_line(line, file, lineno));
    }
}

Address require_address(const json& j, const std::filesystem::path& file) {
    const auto a = Address::from_hex(j.get<std::string>());
    if (!a)
        throw InputError(file.string() + ": malformed address " + j.get<std::string>());
    return *a;
}

}  // namespace

TemplateStore TemplateStore::load(const std::filesystem::path& fixtures_dir) {
    TemplateStore store;

    for_each_record(fixtures_dir / "templates.jsonl", [&](const json& j) {
        TemplateRecord rec;
        rec.name = j.value("name", "");
        rec.platform = j.value("platform", "");
        rec.chain_id = j.value("chainId", uint64_t{0});
        rec.role = j.value("role", "contract");
        rec.compiler_version = j.value("compilerVersion", "");
        const auto code = from_hex(j.at("runtimeBytecodeHex").get<std::string>());
        if (!code)
            throw InputError("templates.jsonl: malformed runtimeBytecodeHex in record " + rec.name);
        rec.runtime_bytecode = *code;
        if (j.contains("functionSelectors"))
            for (const auto& s : j["functionSelectors"]) {
                const auto sel = Selector::from_hex(s.get<std::string>());
                if (!sel)
                    throw InputError("templates.jsonl: malformed selector in record " + rec.name);
                rec.function_selectors.push_back(*sel);
            }
        store.records_.push_back(std::move(rec));
    });

    for_each_record(fixtures_dir / "deployers.jsonl", [&](const json& j) {
        DeployerRecord rec;
        rec.platform = j.value("platform", "");
        rec.chain_id = j.value("chainId", uint64_t{0});
        for (const auto& a : j.at("addresses"))
            rec.addresses.push_back(require_address(a, fixtures_dir / "deployers.jsonl"));
        store.deployers_.push_back(std::move(rec));
    });

    for_each_record(fixtures_dir / "attestations.jsonl", [&](const json& j) {
        store.attestations_.push_back(
            require_address(j.at("address"), fixtures_dir / "attestations.jsonl"));
    });

    return store;
}

std::vector<TemplateRecord> TemplateStore::contract_templates(uint64_t chain_id) const {
    std::vector<TemplateRecord> out;
    for (const auto& rec : records_)
        if (rec.role == "contract" && (rec.chain_id == 0 || rec.chain_id == chain_id))
            out.push_back(rec);
    return out;
}

std::vector<evm::FunctionBody> TemplateStore::function_variants(uint64_t chain_id,
                                                                const std::string& role) const {
    std::vector<evm::FunctionBody> out;
    for (const auto& rec : records_) {
        if (rec.role != role || (rec.chain_id != 0 && rec.chain_id != chain_id))
            continue;
        if (rec.function_selectors.empty())
            throw InputError("template record " + rec.name + " lacks a function selector");
        const auto cfg = evm::build_cfg(
            ByteView{rec.runtime_bytecode.data(), rec.runtime_bytecode.size()});
        const auto extraction = evm::extract_functions(cfg);
        for (const auto& fn : extraction.functions)
            if (fn.selector == rec.function_selectors.front())
                out.push_back(fn);
    }
    return out;
}

std::optional<std::string> TemplateStore::deployer_platform(const Address& deployer,
                                                            uint64_t chain_id) const {
    for (const auto& rec : deployers_)
        if (rec.chain_id == 0 || rec.chain_id == chain_id)
            for (const auto& a : rec.addresses)
                if (a == deployer)
                    return rec.platform;
    return std::nullopt;
}

bool TemplateStore::attested_open_source(const Address& address) const {
    for (const auto& a : attestations_)
        if (a == address)
            return true;
    return false;
}

}  // namespace govaudit::similarity
