// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <govaudit/chaindata/memory_provider.hpp>
#include <govaudit/governance/privileged.hpp>

#include "test_helpers.hpp"

using namespace govaudit;
using namespace govaudit::governance;
using namespace helpers;
namespace synth = govaudit::evm::synth;

namespace {

const Address kGovernance = addr(0xaa);
const Address kAdmin = addr(0xbb);

}  // namespace

TEST_CASE("admin-gated setters are flagged External") {
    // the mini-dao shape: setVotingPeriod / setProposalThreshold gated
    // on a hardcoded EOA
    const auto code = synth::dispatcher_contract({
        synth::function_from_signature("setVotingPeriod(uint256)", caller_eq_push20_body(kAdmin)),
        synth::function_from_signature("setProposalThreshold(uint256)",
                                       caller_eq_push20_body(kAdmin)),
    });
    const auto findings =
        detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance);
    REQUIRE(findings.size() == 2);
    for (const auto& f : findings) {
        CHECK(f.controller == Controller::External);
        CHECK(f.comparand.kind == ComparandSource::Kind::Push20Immediate);
        REQUIRE(f.resolved_address.has_value());
        CHECK(*f.resolved_address == kAdmin);
    }
    CHECK(findings[0].selector == evm::compute_selector("setVotingPeriod(uint256)"));
}

TEST_CASE("storage comparand resolving to the governance contract is SelfGoverned") {
    const auto code = synth::dispatcher_contract({
        synth::function_from_signature("setVotingDelay(uint256)", caller_eq_storage_body(2)),
    });
    chaindata::InMemoryProvider state;
    Word slot;
    slot.bytes[31] = 2;
    state.set_storage(kGovernance, slot, Word::from_address(kGovernance));

    const auto findings =
        detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance, &state);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].controller == Controller::SelfGoverned);
    CHECK(findings[0].comparand.kind == ComparandSource::Kind::StorageSlot);
    CHECK(findings[0].comparand.slot == slot);
    CHECK(*findings[0].resolved_address == kGovernance);
}

TEST_CASE("storage comparand without a state provider stays Unresolved") {
    const auto code = synth::dispatcher_contract({
        synth::function_from_signature("setVotingDelay(uint256)", caller_eq_storage_body(2)),
    });
    const auto findings =
        detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].controller == Controller::Unresolved);
    CHECK(!findings[0].resolved_address.has_value());
    CHECK(findings[0].comparand.kind == ComparandSource::Kind::StorageSlot);
}

TEST_CASE("storage comparand resolving elsewhere is External") {
    const auto code = synth::dispatcher_contract({
        synth::function_from_signature("setPendingAdmin(address)", caller_eq_storage_body(7)),
    });
    chaindata::InMemoryProvider state;
    Word slot;
    slot.bytes[31] = 7;
    state.set_storage(kGovernance, slot, Word::from_address(kAdmin));
    const auto findings =
        detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance, &state);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].controller == Controller::External);
}

TEST_CASE("benign bodies produce zero findings") {
    using evm::Program;
    std::vector<Program> benign;

    benign.push_back(caller_ungated_body());  // CALLER stored, not gated

    Program no_caller;  // no CALLER at all
    no_caller.push(uint64_t{5}).push(uint64_t{0}).op(evm::OP_MSTORE).op(evm::OP_STOP);
    benign.push_back(no_caller);

    Program eq_no_caller;  // EQ over constants
    eq_no_caller.push(uint64_t{1}).push(uint64_t{2}).op(evm::OP_EQ).push(uint64_t{0}).op(
        evm::OP_SSTORE);
    eq_no_caller.op(evm::OP_STOP);
    benign.push_back(eq_no_caller);

    Program caller_arith;  // disallowed op between CALLER and EQ
    caller_arith.op(evm::OP_CALLER)
        .push(uint64_t{1})
        .op(evm::OP_ADD)
        .push(uint64_t{9})
        .op(evm::OP_EQ)
        .push_label("x")
        .op(evm::OP_JUMPI)
        .op(evm::OP_STOP)
        .label("x")
        .op(evm::OP_STOP);
    benign.push_back(caller_arith);

    Program eq_not_jump;  // comparison stored instead of gating a jump
    Bytes admin20(20, 0xbb);
    eq_not_jump.op(evm::OP_CALLER)
        .push(ByteView{admin20.data(), admin20.size()})
        .op(evm::OP_EQ)
        .push(uint64_t{0})
        .op(evm::OP_SSTORE)
        .op(evm::OP_STOP);
    benign.push_back(eq_not_jump);

    Program caller_iszero;  // gate without EQ
    caller_iszero.op(evm::OP_CALLER)
        .op(evm::OP_ISZERO)
        .push_label("y")
        .op(evm::OP_JUMPI)
        .op(evm::OP_STOP)
        .label("y")
        .op(evm::OP_STOP);
    benign.push_back(caller_iszero);

    Program caller_popped;  // CALLER consumed by POP (window break)
    caller_popped.op(evm::OP_CALLER)
        .op(evm::OP_POP)
        .push(uint64_t{1})
        .push(uint64_t{1})
        .op(evm::OP_EQ)
        .push_label("z")
        .op(evm::OP_JUMPI)
        .op(evm::OP_STOP)
        .label("z")
        .op(evm::OP_STOP);
    benign.push_back(caller_popped);

    Program pure_math;
    pure_math.push(uint64_t{3}).push(uint64_t{4}).op(evm::OP_MUL).push(uint64_t{0}).op(
        evm::OP_MSTORE);
    pure_math.op(evm::OP_STOP);
    benign.push_back(pure_math);

    Program balance_read;
    balance_read.op(evm::OP_CALLER).op(evm::OP_BALANCE).push(uint64_t{0}).op(evm::OP_SSTORE).op(
        evm::OP_STOP);
    benign.push_back(balance_read);

    Program event_body;
    event_body.op(evm::OP_CALLER)
        .push(uint64_t{0})
        .op(evm::OP_MSTORE)
        .push(uint64_t{32})
        .push(uint64_t{0})
        .op(evm::OP_LOG0)
        .op(evm::OP_STOP);
    benign.push_back(event_body);

    REQUIRE(benign.size() == 10);
    for (size_t i = 0; i < benign.size(); ++i) {
        CAPTURE(i);
        const auto code = synth::dispatcher_contract(
            {synth::function_from_signature("totalSupply()", std::move(benign[i]))});
        const auto findings =
            detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance);
        CHECK(findings.empty());
    }
}

TEST_CASE("push20 equal to own address classifies SelfGoverned") {
    const auto code = synth::dispatcher_contract({
        synth::function_from_signature("cancel(uint256)", caller_eq_push20_body(kGovernance)),
    });
    const auto findings =
        detect_privileged_functions(ByteView{code.data(), code.size()}, kGovernance);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].controller == Controller::SelfGoverned);
    CHECK(findings[0].resolved_address->to_hex() == kGovernance.to_hex());
}
