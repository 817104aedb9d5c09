// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Regenerates everything under fixtures/: synthetic governor templates,
// deployer/attestation lists, disassembler fixture bytecodes, the 13
// incident proposals with their replay cache, governance demo contracts,
// and the documentation-audit scripts. Deterministic: rerunning produces
// byte-identical files (the cache is keyed by request hashes).
//
//   make_fixtures [output-dir] [data-dir]
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include <govaudit/chaindata/caching_provider.hpp>
#include <govaudit/chaindata/memory_provider.hpp>
#include <govaudit/evm/synth.hpp>
#include <govaudit/report/commands.hpp>

namespace fs = std::filesystem;
using namespace govaudit;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr uint64_t kChainId = 31337;

Address fill_addr(uint8_t b) {
    Address a;
    a.bytes.fill(b);
    return a;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

// ---- synthetic governor bodies (role-distinct opcode textures) ----

evm::Program role_body(uint8_t interior_op, uint64_t marker, int reps = 10) {
    evm::Program p;
    p.push(marker & 0xff);
    for (int i = 0; i < reps; ++i)
        p.op(interior_op).op(evm::OP_POP);
    p.push(uint64_t{0}).op(evm::OP_MSTORE).op(evm::OP_STOP);
    return p;
}

struct GovernorVariant {
    std::string compiler_version;
    Bytes bytecode;
};

const char* kProposeSig = "propose(address[],uint256[],string[],bytes[],string)";
const char* kVoteSig = "castVote(uint256,uint8)";
const char* kExecuteSig = "execute(uint256)";

Bytes governor_bytecode(uint64_t marker_base, int extra_padding) {
    return evm::synth::dispatcher_contract({
        evm::synth::function_from_signature(kProposeSig,
                                            role_body(evm::OP_DUP1, marker_base, 10 + extra_padding)),
        evm::synth::function_from_signature(kVoteSig,
                                            role_body(evm::OP_CALLVALUE, marker_base + 1, 10)),
        evm::synth::function_from_signature(kExecuteSig, role_body(evm::OP_PC, marker_base + 2, 10)),
    });
}

std::vector<GovernorVariant> governor_variants() {
    // two compiler generations: identical shapes with different push
    // immediates, plus one with longer propose padding
    return {
        {"synth-0.8.19", governor_bytecode(0x11, 0)},
        {"synth-0.8.24", governor_bytecode(0x41, 0)},
        {"synth-0.7.6", governor_bytecode(0x21, 2)},
    };
}

void write_localtest_fixtures(const fs::path& out) {
    std::string templates;
    const auto selector_hex = [](const char* sig) {
        return evm::compute_selector(sig).to_hex();
    };
    for (const auto& variant : governor_variants()) {
        const std::string hexcode =
            to_hex_prefixed(ByteView{variant.bytecode.data(), variant.bytecode.size()});
        const auto record = [&](const std::string& name, const std::string& role,
                                const std::string& selector) {
            ordered_json j;
            j["name"] = name + "-" + variant.compiler_version;
            j["platform"] = "localtest";
            j["chainId"] = kChainId;
            j["role"] = role;
            j["compilerVersion"] = variant.compiler_version;
            j["runtimeBytecodeHex"] = hexcode;
            j["functionSelectors"] = {selector};
            templates += j.dump() + "\n";
        };
        record("localtest-governor", "contract", selector_hex(kProposeSig));
        record("governor-propose", "propose", selector_hex(kProposeSig));
        record("governor-vote", "vote", selector_hex(kVoteSig));
        record("governor-execute", "execute", selector_hex(kExecuteSig));
    }
    write_file(out / "localtest/templates.jsonl", templates);

    ordered_json deployers;
    deployers["platform"] = "localtest";
    deployers["chainId"] = kChainId;
    deployers["addresses"] = {fill_addr(0xdd).to_hex()};
    write_file(out / "localtest/deployers.jsonl", deployers.dump() + "\n");

    ordered_json attestation;
    attestation["address"] = fill_addr(0x77).to_hex();
    attestation["note"] = "documentation names this governor and links verified source";
    write_file(out / "localtest/attestations.jsonl", attestation.dump() + "\n");
}

// ---- disassembler fixture corpus ----

void write_bytecode_fixtures(const fs::path& out) {
    std::vector<Bytes> fixtures;
    for (const auto& variant : governor_variants())
        fixtures.push_back(variant.bytecode);

    // dispatchers of growing arity with varied bodies
    const char* signatures[] = {
        "totalSupply()",          "balanceOf(address)",
        "transfer(address,uint256)", "approve(address,uint256)",
        "transferFrom(address,address,uint256)", "decimals()",
        "name()",                 "symbol()",
    };
    for (size_t count = 1; count <= 8; ++count) {
        std::vector<evm::synth::SynthFunction> fns;
        for (size_t i = 0; i < count; ++i)
            fns.push_back(evm::synth::function_from_signature(
                signatures[i], role_body(static_cast<uint8_t>(evm::OP_DUP1 + i), 0x30 + i,
                                         4 + static_cast<int>(i))));
        fixtures.push_back(evm::synth::dispatcher_contract(fns));
    }

    // loops, storage walks, raw data tails, truncated push
    {
        evm::Program loop;
        loop.label("top").push(uint64_t{1}).push(uint64_t{0}).op(evm::OP_SLOAD).op(evm::OP_ADD);
        loop.push(uint64_t{0}).op(evm::OP_SSTORE).push_label("top").op(evm::OP_JUMP);
        fixtures.push_back(loop.assemble());
    }
    {
        evm::Program data_tail;
        data_tail.push(uint64_t{0}).op(evm::OP_CALLDATALOAD).op(evm::OP_STOP);
        data_tail.raw(*from_hex("fe00112233445566778899aabbccddeeff"));
        fixtures.push_back(data_tail.assemble());
    }
    {
        Bytes truncated = *from_hex("60016002017f1122");  // PUSH32 cut short
        fixtures.push_back(truncated);
    }
    {
        evm::Program wide;
        Bytes big(32, 0xab);
        wide.push(ByteView{big.data(), big.size()}).push(uint64_t{0}).op(evm::OP_MSTORE);
        wide.op(evm::OP_PUSH0).op(evm::OP_MLOAD).op(evm::OP_POP).op(evm::OP_STOP);
        fixtures.push_back(wide.assemble());
    }
    {
        evm::Program invalids;
        invalids.op(0x0c).op(0x21).op(0xfc).op(evm::OP_INVALID).op(evm::OP_SELFDESTRUCT);
        fixtures.push_back(invalids.assemble());
    }
    {
        evm::Program proxy;
        proxy.push(uint64_t{0}).op(evm::OP_CALLDATASIZE).push(uint64_t{0}).push(uint64_t{0});
        proxy.op(evm::OP_CALLDATACOPY).push(uint64_t{0}).push(uint64_t{0}).op(evm::OP_CALLDATASIZE);
        proxy.push(uint64_t{0});
        Bytes impl(20, 0x1c);
        proxy.push(ByteView{impl.data(), impl.size()}).op(evm::OP_GAS).op(evm::OP_DELEGATECALL);
        proxy.op(evm::OP_STOP);
        fixtures.push_back(proxy.assemble());
    }
    {
        evm::Program caller_gate;  // the privileged-function shape
        Bytes admin(20, 0xad);
        caller_gate.op(evm::OP_CALLER)
            .push(ByteView{admin.data(), admin.size()})
            .op(evm::OP_EQ)
            .push_label("ok")
            .op(evm::OP_JUMPI)
            .push(uint64_t{0})
            .push(uint64_t{0})
            .op(evm::OP_REVERT)
            .label("ok")
            .op(evm::OP_STOP);
        fixtures.push_back(caller_gate.assemble());
    }
    fixtures.push_back({});                       // empty bytecode
    fixtures.push_back(Bytes{evm::OP_STOP});      // single stop

    while (fixtures.size() < 20)
        fixtures.push_back(Bytes{evm::OP_JUMPDEST, evm::OP_STOP});
    fixtures.resize(20);

    for (size_t i = 0; i < fixtures.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "fixture_%02zu.hex", i);
        write_file(out / "bytecode" / name,
                   to_hex(ByteView{fixtures[i].data(), fixtures[i].size()}) + "\n");
    }
}

// ---- governance demo contracts ----

struct GovernanceDemo {
    Address minidao = fill_addr(0x11);
    Address clean_governor = fill_addr(0x12);
    Address admin = fill_addr(0xad);
    Address deployer_eoa = fill_addr(0x88);
    Bytes minidao_code;
    Bytes clean_code;
};

evm::Program caller_gate_body(const Address& admin) {
    evm::Program p;
    p.op(evm::OP_CALLER)
        .push(ByteView{admin.bytes.data(), admin.bytes.size()})
        .op(evm::OP_EQ)
        .push_label("ok")
        .op(evm::OP_JUMPI)
        .push(uint64_t{0})
        .push(uint64_t{0})
        .op(evm::OP_REVERT)
        .label("ok")
        .push(uint64_t{1})
        .push(uint64_t{2})
        .op(evm::OP_SSTORE)
        .op(evm::OP_STOP);
    return p;
}

GovernanceDemo make_governance_demo() {
    GovernanceDemo demo;
    demo.minidao_code = evm::synth::dispatcher_contract({
        evm::synth::function_from_signature("setVotingPeriod(uint256)",
                                            caller_gate_body(demo.admin)),
        evm::synth::function_from_signature("setProposalThreshold(uint256)",
                                            caller_gate_body(demo.admin)),
    });
    demo.clean_code = governor_variants()[0].bytecode;
    return demo;
}

// ---- incidents ----

struct Incident {
    std::string stem;
    std::string description;
    Address target;
    std::string expected;  // classification
    std::string function_signature;
    std::vector<proposal::AbiValue> args;
    std::optional<std::string> name_tag;
    std::optional<std::string> symbol;
    bool verified = true;       // unverified targets resolve via the sig db
    bool token_decimals = false;
};

const Address kAttacker = fill_addr(0x66);

std::vector<Incident> incident_table() {
    using proposal::AbiValue;
    const auto amount = [](const char* decimal) {
        return AbiValue::of_uint(*U256::from_decimal(decimal));
    };
    std::vector<Incident> incidents;
    incidents.push_back({"true-seigniorage-dollar", "", fill_addr(0x21),
                         "LackOfDescriptionIntention", "mint(address,uint256)",
                         {AbiValue::of_address(kAttacker), amount("11800000000000000000000")},
                         std::nullopt, "TSD", false, true});
    incidents.push_back({"yuan", "Proposal 7.", fill_addr(0x22), "LackOfDescriptionIntention",
                         "transfer(address,uint256)",
                         {AbiValue::of_address(kAttacker), amount("250000000000000000000000")},
                         std::nullopt, "YUAN", true, true});
    incidents.push_back({"venus", "VIP: routine maintenance of parameters.", fill_addr(0x23),
                         "LackOfDescriptionIntention", "_setPendingAdmin(address)",
                         {AbiValue::of_address(kAttacker)}, "Venus Unitroller", std::nullopt, true,
                         false});
    incidents.push_back({"build-finance", "", fill_addr(0x24), "LackOfDescriptionIntention",
                         "mint(address,uint256)",
                         {AbiValue::of_address(kAttacker), amount("470000000000000000000000")},
                         std::nullopt, "BUILD", true, true});
    incidents.push_back({"fortress-protocol",
                         "Set the FTS price feed from the latest oracle round.", fill_addr(0x25),
                         "IncompleteParameter", "setPrice(uint256)",
                         {amount("1789000000000000000000")}, "FTS Oracle", std::nullopt, true,
                         true});
    incidents.push_back({"beanstalk", "Donate $250,000 to the Ukraine relief fund wallet.",
                         fill_addr(0x26), "IncompleteFunction", "emergencyCommit(address)",
                         {AbiValue::of_address(kAttacker)}, "Beanstalk Protocol", std::nullopt,
                         true, false});
    incidents.push_back({"audius", "", fill_addr(0x27), "LackOfDescriptionIntention",
                         "setGovernanceAddress(address)", {AbiValue::of_address(kAttacker)},
                         "Audius Governance", std::nullopt, true, false});
    incidents.push_back(
        {"yam",
         "Contributor comps for May, backpay for VDM, settling synths tokens and success tokens, "
         "sending settled rewards tokens to reserves, sending and withdrawing test uma and "
         "claiming sushi for reserves.",
         fill_addr(0x28), "IncompleteFunction", "_setPendingGov(address)",
         {AbiValue::of_address(kAttacker)}, "YAM Governor", std::nullopt, true, false});
    incidents.push_back({"swerve-finance", "", fill_addr(0x29), "LackOfDescriptionIntention",
                         "commit_transfer_ownership(address)", {AbiValue::of_address(kAttacker)},
                         std::nullopt, "SWRV", true, false});
    incidents.push_back({"tornado-cash",
                         "Execute proposal 20 to distribute 1,200,000 TORN to early adopters.",
                         fill_addr(0x2a), "CodeMutability", "executeProposal()", {},
                         "Tornado Proposal 20", std::nullopt, true, false});
    incidents.push_back({"atlantis-loans", "", fill_addr(0x2b), "LackOfDescriptionIntention",
                         "_setPendingAdmin(address)", {AbiValue::of_address(kAttacker)},
                         "Atlantis Comptroller", std::nullopt, true, false});
    incidents.push_back({"bigcap",
                         "Enable staking rewards for BIGCAP holders at 400 tokens per epoch.",
                         fill_addr(0x2c), "IncompleteFunction", "setOwner(address)",
                         {AbiValue::of_address(kAttacker)}, std::nullopt, "BIGCAP", true, false});
    incidents.push_back({"indexed-finance", "", fill_addr(0x2d), "LackOfDescriptionIntention",
                         "delegate(address)", {AbiValue::of_address(kAttacker)}, std::nullopt,
                         "NDX", true, false});
    return incidents;
}

void write_incident_files(const fs::path& out, const std::vector<Incident>& incidents) {
    ordered_json manifest = ordered_json::array();
    for (const auto& incident : incidents) {
        const Bytes calldata = proposal::encode_calldata(incident.function_signature, incident.args);
        Selector selector;
        std::copy(calldata.begin(), calldata.begin() + 4, selector.bytes.begin());

        ordered_json doc;
        doc["id"] = incident.stem;
        doc["description"] = incident.description;
        doc["calls"] = ordered_json::array();
        doc["calls"].push_back({{"target", incident.target.to_hex()},
                                {"value", "0"},
                                {"signature", selector.to_hex()},
                                {"calldata", to_hex_prefixed(ByteView{calldata.data(), calldata.size()})}});
        write_file(out / "incidents" / (incident.stem + ".json"), doc.dump(2) + "\n");

        manifest.push_back({{"file", incident.stem + ".json"},
                            {"expectedClassification", incident.expected}});
    }
    write_file(out / "incidents/manifest.json", manifest.dump(2) + "\n");
}

// provider world every incident and governance demo lives in
std::shared_ptr<chaindata::InMemoryProvider> seed_provider(const std::vector<Incident>& incidents,
                                                           const GovernanceDemo& demo) {
    using chaindata::ContractMetadata;
    using chaindata::CreationInfo;
    using chaindata::CreationKind;

    auto provider = std::make_shared<chaindata::InMemoryProvider>();
    const Bytes plain_code{evm::OP_PUSH0, evm::OP_POP, evm::OP_STOP};
    const Address creator_eoa = fill_addr(0x8e);

    for (const auto& incident : incidents) {
        ContractMetadata md;
        md.address = incident.target;
        md.verified = incident.verified;
        if (incident.verified)
            md.abi = {incident.function_signature};
        md.name_tag = incident.name_tag;
        md.symbol = incident.symbol;
        provider->set_metadata(md);
        if (!incident.verified) {
            const Bytes calldata =
                proposal::encode_calldata(incident.function_signature, incident.args);
            Selector selector;
            std::copy(calldata.begin(), calldata.begin() + 4, selector.bytes.begin());
            provider->add_signature(selector, incident.function_signature);
        }
        if (incident.token_decimals)
            provider->set_decimals(incident.target, 18);

        const std::string tx = "0xcreate-" + incident.stem;
        if (incident.stem == "tornado-cash") {
            // metamorphic shape: proposal contract by factory (CREATE),
            // factory by EOA (CREATE2); both can destruct
            const Address factory = fill_addr(0x7f);
            evm::Program destructible;
            destructible.push(uint64_t{0}).op(evm::OP_SLOAD).op(evm::OP_POP).op(
                evm::OP_SELFDESTRUCT);
            provider->set_code(incident.target, destructible.assemble());
            provider->set_code(factory, destructible.assemble());
            provider->set_creation(incident.target,
                                   CreationInfo{factory, tx, CreationKind::Create, {}});
            provider->set_creation(factory,
                                   CreationInfo{creator_eoa, "0xcreate-tornado-factory",
                                                CreationKind::Create2, {}});
            provider->set_trace(tx, {"PUSH1", "CREATE", "RETURN"});
            provider->set_trace("0xcreate-tornado-factory", {"PUSH1", "CREATE2", "RETURN"});
        } else {
            provider->set_code(incident.target, plain_code);
            provider->set_creation(incident.target,
                                   CreationInfo{creator_eoa, tx, CreationKind::Create, {}});
            provider->set_trace(tx, {"PUSH1", "CREATE", "RETURN"});
        }
    }

    // the attacker address resolves to nothing: no metadata seeded

    // governance demo contracts
    provider->set_code(demo.minidao, demo.minidao_code);
    provider->set_creation(demo.minidao,
                           CreationInfo{demo.deployer_eoa, "0xcreate-minidao",
                                        CreationKind::Create, {}});
    provider->set_trace("0xcreate-minidao", {"PUSH1", "CREATE", "RETURN"});
    ContractMetadata minidao_md;
    minidao_md.address = demo.minidao;
    provider->set_metadata(minidao_md);

    provider->set_code(demo.clean_governor, demo.clean_code);
    provider->set_creation(demo.clean_governor,
                           CreationInfo{demo.deployer_eoa, "0xcreate-clean",
                                        CreationKind::Create, {}});
    provider->set_trace("0xcreate-clean", {"PUSH1", "CREATE", "RETURN"});
    ContractMetadata clean_md;
    clean_md.address = demo.clean_governor;
    clean_md.verified = true;
    clean_md.abi = {kProposeSig, kVoteSig, kExecuteSig};
    provider->set_metadata(clean_md);

    return provider;
}

// ---- documentation fixtures ----

void write_docs_fixtures(const fs::path& out) {
    const std::string compound_doc = R"(# Governance Guide

## Joining
Anyone holding the governance token may take part. Delegate your token
balance to yourself or another address to activate your vote.

## Voting power
Voting power equals the token balance delegated to an address at the
proposal's snapshot block. Power follows delegation, one token one vote,
and redelegating moves it to the new delegate from the next block.

## How to participate
1. Acquire governance tokens on any exchange.
2. Delegate the balance using the delegate call in the token contract.
3. When a proposal is live, call castVote with your support choice.
4. After a passed proposal's timelock delay, anyone may call execute.

Proposals need a minimum of delegated votes to be submitted, and pass
once quorum and majority are reached during the voting window.
)";
    write_file(out / "docs/compound-style.md", compound_doc);
    write_file(out / "docs/empty.md", "");

    // script for the compound-style doc: participation, voting power and
    // process guide are answerable; exit, minority and guardian are not
    const auto ask_yes = [](const std::string& question, const std::string& reason) {
        ordered_json j;
        j["match"] = question;
        j["response"] = "Result: Yes. Reason: " + reason;
        return j.dump() + "\n";
    };
    const auto ask_no = [](const std::string& question) {
        ordered_json j;
        j["match"] = question;
        j["response"] = "Result: No.";
        return j.dump() + "\n";
    };

    std::string script;
    // cross-verification first: verify prompts carry this task header
    script += ordered_json{{"match", "check if the sentence content"}, {"response", "Result: Yes."}}
                  .dump() +
              "\n";
    script += ask_yes("Does the DAO support governance?",
                      "the guide describes proposals, voting and execution.");
    script += ask_yes("Who can become a member of DAO?",
                      "anyone holding the governance token may take part.");
    script += ask_yes("Can members participate in governance?",
                      "members delegate, vote and execute proposals.");
    script += ask_no("Does the documentation describe the steps a member must follow to exit");
    script += ask_yes("Does the documentation explain how voting power is calculated?",
                      "voting power equals the delegated balance at the snapshot block.");
    script += ask_yes("Does the documentation explain how voting power is distributed",
                      "power follows delegation, one token one vote.");
    script += ask_no("Does the documentation state provisions for protecting the minority");
    script += ask_yes("Does the documentation provide step-by-step instructions for submitting",
                      "the participation list covers submitting proposals step by step.");
    script += ask_yes("Does the documentation provide step-by-step instructions for casting",
                      "step three says call castVote with your support choice.");
    script += ask_no("Does the documentation disclose the existence of a guardian");
    write_file(out / "llm/compound_script.jsonl", script);

    std::string all_yes;
    all_yes += ordered_json{{"match", "check if the sentence content"}, {"response", "Result: Yes."}}
                   .dump() +
               "\n";
    all_yes += ordered_json{{"match", "Here is the question:"},
                            {"response", "Result: Yes. Reason: stated in the documentation."}}
                   .dump() +
               "\n";
    write_file(out / "llm/all_yes.jsonl", all_yes);
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path out = argc > 1 ? argv[1] : "fixtures";
    const fs::path data_dir = argc > 2 ? argv[2] : "data";

    try {
        write_localtest_fixtures(out);
        write_bytecode_fixtures(out);
        write_docs_fixtures(out);

        const auto incidents = incident_table();
        const auto demo = make_governance_demo();
        write_incident_files(out, incidents);

        ordered_json governance_manifest;
        governance_manifest["minidao"] = demo.minidao.to_hex();
        governance_manifest["cleanGovernor"] = demo.clean_governor.to_hex();
        governance_manifest["admin"] = demo.admin.to_hex();
        write_file(out / "governance/manifest.json", governance_manifest.dump(2) + "\n");
        write_file(out / "governance/minidao.hex",
                   to_hex(ByteView{demo.minidao_code.data(), demo.minidao_code.size()}) + "\n");

        // record the replay cache by running the real pipelines against
        // the seeded in-memory world
        const fs::path cache_dir = out / "cache";
        fs::remove_all(cache_dir);
        auto seeded = seed_provider(incidents, demo);
        chaindata::CachingProvider recorder(seeded, chaindata::Mode::Record, cache_dir, kChainId);

        const auto lexicon = proposal::Lexicon::load(data_dir);
        size_t mismatches = 0;
        for (const auto& incident : incidents) {
            const auto record =
                proposal::load_proposal_file(out / "incidents" / (incident.stem + ".json"));
            const auto report = report::run_proposal(record, recorder, lexicon, std::nullopt,
                                                     proposal::kFunctionMatchThreshold, "record");
            const std::string got = report.verdicts.at("classification").get<std::string>();
            if (got != incident.expected) {
                std::cerr << "MISMATCH " << incident.stem << ": expected " << incident.expected
                          << ", pipeline says " << got << "\n";
                ++mismatches;
            }
        }

        const auto store = similarity::TemplateStore::load(out / "localtest");
        const auto gov_minidao = report::run_governance(demo.minidao, recorder, store, kChainId,
                                                        similarity::kDefaultThreshold, "record");
        if (gov_minidao.exit_code() != report::kExitFindings) {
            std::cerr << "MISMATCH minidao governance run: expected findings\n";
            ++mismatches;
        }
        const auto gov_clean = report::run_governance(demo.clean_governor, recorder, store,
                                                      kChainId, similarity::kDefaultThreshold,
                                                      "record");
        if (gov_clean.exit_code() != report::kExitClean) {
            std::cerr << "MISMATCH clean governor run: expected clean, findings:\n";
            for (const auto& f : gov_clean.findings)
                std::cerr << "  " << f.category << " " << f.subject << " " << f.detail << "\n";
            ++mismatches;
        }

        if (mismatches > 0) {
            std::cerr << mismatches << " fixture self-check(s) failed\n";
            return 1;
        }
        std::cout << "fixtures written to " << out << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "fixture generation failed: " << e.what() << "\n";
        return 1;
    }
}
