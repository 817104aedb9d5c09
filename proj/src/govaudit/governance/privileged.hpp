// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "../chaindata/provider.hpp"
#include "../common/types.hpp"
#include "../evm/functions.hpp"

namespace govaudit::governance {

enum class Controller { SelfGoverned, External, Unresolved };

std::string to_string(Controller c);

/// Where the address compared against CALLER comes from.
struct ComparandSource {
    enum class Kind { Push20Immediate, StorageSlot, Unresolved };
    Kind kind = Kind::Unresolved;
    Address immediate;  // Push20Immediate
    Word slot;          // StorageSlot
};

/// A function gated on msg.sender equality: CALLER compared by EQ, the
/// result steering a JUMPI.
struct PrivilegedFunctionFinding {
    Selector selector;
    ComparandSource comparand;
    std::optional<Address> resolved_address;
    Controller controller = Controller::Unresolved;
    size_t caller_offset = 0;  // byte offset of the CALLER instruction
};

/// Scans every selector-dispatched function for the caller-equality gate.
/// The dataflow is a conservative window heuristic: CALLER and EQ must
/// share a basic block with only PUSH/DUP/SWAP/AND/SLOAD between them,
/// and the EQ must feed the block's JUMPI through at most
/// ISZERO/PUSH/DUP/SWAP. Comparands nobody can extract become Unresolved
/// findings rather than silent drops. Storage comparands resolve through
/// the state provider when one is given.
std::vector<PrivilegedFunctionFinding> detect_privileged_functions(
    ByteView runtime_bytecode, const Address& governance_address,
    chaindata::ChainDataProvider* state_provider = nullptr);

}  // namespace govaudit::governance
