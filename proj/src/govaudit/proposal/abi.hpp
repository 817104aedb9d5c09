// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "../common/errors.hpp"
#include "../common/hex.hpp"
#include "../common/types.hpp"
#include "../common/u256.hpp"

namespace govaudit::proposal {

/// Malformed calldata; carries the byte offset where decoding failed.
class DecodeError : public std::runtime_error {
  public:
    DecodeError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

/// Parsed Solidity parameter type. Supported: address, uintN, intN,
/// bool, bytesN, bytes, string, and one-dimensional T[] arrays of any of
/// those.
struct AbiType {
    enum class Kind { Address, Uint, Int, Bool, FixedBytes, Bytes, String, Array };
    Kind kind = Kind::Uint;
    unsigned bits = 256;                     // Uint/Int width
    unsigned byte_width = 0;                 // FixedBytes width
    std::shared_ptr<const AbiType> element;  // Array element type

    bool is_dynamic() const;
    std::string to_string() const;
};

AbiType parse_type(const std::string& text);  // throws UsageError

struct ParsedSignature {
    std::string name;
    std::vector<AbiType> params;
    std::string canonical;  // normalized signature text
};

/// Parses canonical signature text ("transfer(address,uint256)").
ParsedSignature parse_signature(const std::string& canonical_text);

struct AbiValue {
    AbiType::Kind kind = AbiType::Kind::Uint;
    Address address{};
    U256 number{};   // Uint raw value / Int two's complement
    bool boolean = false;
    Bytes blob;        // FixedBytes / Bytes payload
    std::string text;  // String payload
    std::vector<AbiValue> elements;

    bool operator==(const AbiValue&) const = default;

    /// Human-facing rendering: decimal numbers, 0x hex for
    /// addresses/bytes, bracketed lists.
    std::string to_display() const;

    static AbiValue of_address(const Address& a);
    static AbiValue of_uint(const U256& v);
    static AbiValue of_int(const U256& raw);
    static AbiValue of_bool(bool b);
    static AbiValue of_fixed_bytes(Bytes b);
    static AbiValue of_bytes(Bytes b);
    static AbiValue of_string(std::string s);
    static AbiValue of_array(std::vector<AbiValue> elems);
};

struct TypedParam {
    std::string solidity_type;
    AbiValue value;

    bool operator==(const TypedParam&) const = default;
};

/// Standard contract-ABI decoding of selector-prefixed calldata. The
/// selector must match the signature. Throws DecodeError on mismatch or
/// a malformed tail.
std::vector<TypedParam> decode_calldata(const std::string& canonical_signature, ByteView calldata);

/// ABI-encodes arguments behind the signature's selector. The inverse of
/// decode_calldata for well-typed values.
Bytes encode_calldata(const std::string& canonical_signature, const std::vector<AbiValue>& args);

}  // namespace govaudit::proposal
