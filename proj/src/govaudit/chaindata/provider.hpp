// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "../common/errors.hpp"
#include "../common/hex.hpp"
#include "../common/types.hpp"

namespace govaudit::chaindata {

enum class CreationKind { Create, Create2, Unknown };

std::string to_string(CreationKind kind);
std::optional<CreationKind> creation_kind_from_string(const std::string& s);

/// How the creation kind was established: from an executed-opcode trace
/// or from the creation record alone.
enum class KindSource { Trace, Record };

struct CreationInfo {
    Address creator;
    std::string tx_id;
    CreationKind kind = CreationKind::Unknown;
    KindSource kind_source = KindSource::Record;
};

struct ContractMetadata {
    Address address;
    bool verified = false;
    // canonical function signatures ("transfer(address,uint256)");
    // present only for verified contracts
    std::optional<std::vector<std::string>> abi;
    std::optional<std::string> name_tag;
    std::optional<std::string> symbol;
};

/// Unified chain/scanner/signature-database access. Implementations:
/// HttpProvider (live endpoints), InMemoryProvider (tests, record
/// upstreams) and CachingProvider (record/replay around either).
class ChainDataProvider {
  public:
    virtual ~ChainDataProvider() = default;

    virtual Bytes get_code(const Address& address) = 0;
    virtual Word get_storage(const Address& address, const Word& slot) = 0;

    /// Creation record; nullopt for addresses with no creation
    /// transaction (EOAs).
    virtual std::optional<CreationInfo> get_creation(const Address& address) = 0;

    /// Executed opcode mnemonics of a deployment transaction. Throws
    /// CapabilityError when the endpoint cannot trace.
    virtual std::vector<std::string> get_trace_opcodes(const std::string& tx_id) = 0;

    virtual bool is_verified(const Address& address) = 0;
    virtual ContractMetadata get_metadata(const Address& address) = 0;

    /// ERC-20 decimals() when the target implements it.
    virtual std::optional<uint32_t> get_token_decimals(const Address& address) = 0;

    /// Candidate canonical signatures for a selector, in database order.
    virtual std::vector<std::string> lookup_signature(const Selector& selector) = 0;
};

}  // namespace govaudit::chaindata
