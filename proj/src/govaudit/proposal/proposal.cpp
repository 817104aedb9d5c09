// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "proposal.hpp"

#include <fstream>

#include <json.hpp>

#include "../common/errors.hpp"

namespace govaudit::proposal {

using nlohmann::json;

ProposalRecord parse_proposal(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InputError(std::string("proposal file is not valid JSON: ") + e.what());
    }
    ProposalRecord record;
    try {
        record.id = doc.value("id", "");
        record.description = doc.value("description", "");
        for (const auto& call_doc : doc.value("calls", json::array())) {
            ProposalCall call;
            const auto target = Address::from_hex(call_doc.at("target").get<std::string>());
            if (!target)
                throw InputError("proposal call has a malformed target address");
            call.target = *target;

            if (call_doc.contains("value") && !call_doc["value"].is_null()) {
                std::string value_text = call_doc["value"].is_string()
                                             ? call_doc["value"].get<std::string>()
                                             : call_doc["value"].dump();
                const auto value = U256::from_decimal(value_text);
                if (!value)
                    throw InputError("proposal call value is not a decimal wei amount: " +
                                     value_text);
                call.value = *value;
            }

            if (call_doc.contains("calldata") && !call_doc["calldata"].is_null()) {
                const auto data = from_hex(call_doc["calldata"].get<std::string>());
                if (!data)
                    throw InputError("proposal calldata is not hex");
                call.calldata = *data;
            }

            if (call_doc.contains("signature") && !call_doc["signature"].is_null()) {
                const auto sel = Selector::from_hex(call_doc["signature"].get<std::string>());
                if (!sel)
                    throw InputError("proposal call signature must be 4 bytes of hex");
                call.signature = *sel;
                if (call.calldata.size() >= 4 &&
                    !std::equal(sel->bytes.begin(), sel->bytes.end(), call.calldata.begin()))
                    throw InputError("proposal calldata does not begin with the stated signature");
            }
            record.calls.push_back(std::move(call));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("proposal file structure: ") + e.what());
    }
    return record;
}

ProposalRecord load_proposal_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open proposal file " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), {});
    return parse_proposal(text);
}

}  // namespace govaudit::proposal
