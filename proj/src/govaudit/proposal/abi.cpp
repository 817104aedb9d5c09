// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "abi.hpp"

#include <algorithm>

#include "../evm/keccak.hpp"

namespace govaudit::proposal {

bool AbiType::is_dynamic() const {
    switch (kind) {
        case Kind::Bytes:
        case Kind::String:
        case Kind::Array:
            return true;
        default:
            return false;
    }
}

std::string AbiType::to_string() const {
    switch (kind) {
        case Kind::Address: return "address";
        case Kind::Bool: return "bool";
        case Kind::Uint: return "uint" + std::to_string(bits);
        case Kind::Int: return "int" + std::to_string(bits);
        case Kind::FixedBytes: return "bytes" + std::to_string(byte_width);
        case Kind::Bytes: return "bytes";
        case Kind::String: return "string";
        case Kind::Array: return element->to_string() + "[]";
    }
    return "?";
}

AbiType parse_type(const std::string& text) {
    if (text.ends_with("[]")) {
        AbiType t;
        t.kind = AbiType::Kind::Array;
        auto inner = parse_type(text.substr(0, text.size() - 2));
        if (inner.kind == AbiType::Kind::Array)
            throw UsageError("nested arrays are not supported: " + text);
        t.element = std::make_shared<const AbiType>(std::move(inner));
        return t;
    }
    AbiType t;
    if (text == "address") {
        t.kind = AbiType::Kind::Address;
        return t;
    }
    if (text == "bool") {
        t.kind = AbiType::Kind::Bool;
        return t;
    }
    if (text == "bytes") {
        t.kind = AbiType::Kind::Bytes;
        return t;
    }
    if (text == "string") {
        t.kind = AbiType::Kind::String;
        return t;
    }
    const auto parse_width = [&](size_t prefix_len) -> std::optional<unsigned> {
        unsigned w = 0;
        if (prefix_len >= text.size())
            return std::nullopt;
        for (size_t i = prefix_len; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9')
                return std::nullopt;
            w = w * 10 + static_cast<unsigned>(text[i] - '0');
        }
        return w;
    };
    if (text.starts_with("uint") || text.starts_with("int")) {
        const bool is_uint = text[0] == 'u';
        const size_t prefix = is_uint ? 4 : 3;
        unsigned bits = 256;
        if (text.size() > prefix) {
            const auto w = parse_width(prefix);
            if (!w || *w == 0 || *w > 256 || *w % 8 != 0)
                throw UsageError("bad integer type: " + text);
            bits = *w;
        } else {
            // canonical text writes widths out; plain uint/int is not
            throw UsageError("non-canonical integer type: " + text);
        }
        t.kind = is_uint ? AbiType::Kind::Uint : AbiType::Kind::Int;
        t.bits = bits;
        return t;
    }
    if (text.starts_with("bytes")) {
        const auto w = parse_width(5);
        if (!w || *w == 0 || *w > 32)
            throw UsageError("bad fixed-bytes type: " + text);
        t.kind = AbiType::Kind::FixedBytes;
        t.byte_width = *w;
        return t;
    }
    throw UsageError("unsupported parameter type: " + text);
}

ParsedSignature parse_signature(const std::string& canonical_text) {
    const auto open = canonical_text.find('(');
    if (open == std::string::npos || canonical_text.back() != ')' || open == 0)
        throw UsageError("signature is not canonical: " + canonical_text);
    ParsedSignature sig;
    sig.name = canonical_text.substr(0, open);
    const std::string params = canonical_text.substr(open + 1, canonical_text.size() - open - 2);
    if (!params.empty()) {
        size_t start = 0;
        while (start <= params.size()) {
            const auto comma = params.find(',', start);
            const std::string piece =
                params.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            sig.params.push_back(parse_type(piece));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    sig.canonical = sig.name + "(";
    for (size_t i = 0; i < sig.params.size(); ++i) {
        if (i > 0)
            sig.canonical += ",";
        sig.canonical += sig.params[i].to_string();
    }
    sig.canonical += ")";
    return sig;
}

// ---- value construction ----

AbiValue AbiValue::of_address(const Address& a) {
    AbiValue v;
    v.kind = AbiType::Kind::Address;
    v.address = a;
    return v;
}
AbiValue AbiValue::of_uint(const U256& value) {
    AbiValue v;
    v.kind = AbiType::Kind::Uint;
    v.number = value;
    return v;
}
AbiValue AbiValue::of_int(const U256& raw) {
    AbiValue v;
    v.kind = AbiType::Kind::Int;
    v.number = raw;
    return v;
}
AbiValue AbiValue::of_bool(bool b) {
    AbiValue v;
    v.kind = AbiType::Kind::Bool;
    v.boolean = b;
    return v;
}
AbiValue AbiValue::of_fixed_bytes(Bytes b) {
    AbiValue v;
    v.kind = AbiType::Kind::FixedBytes;
    v.blob = std::move(b);
    return v;
}
AbiValue AbiValue::of_bytes(Bytes b) {
    AbiValue v;
    v.kind = AbiType::Kind::Bytes;
    v.blob = std::move(b);
    return v;
}
AbiValue AbiValue::of_string(std::string s) {
    AbiValue v;
    v.kind = AbiType::Kind::String;
    v.text = std::move(s);
    return v;
}
AbiValue AbiValue::of_array(std::vector<AbiValue> elems) {
    AbiValue v;
    v.kind = AbiType::Kind::Array;
    v.elements = std::move(elems);
    return v;
}

std::string AbiValue::to_display() const {
    switch (kind) {
        case AbiType::Kind::Address:
            return address.to_hex();
        case AbiType::Kind::Uint:
            return number.to_decimal();
        case AbiType::Kind::Int:
            return number.high_bit_set() ? "-" + number.negated().to_decimal() : number.to_decimal();
        case AbiType::Kind::Bool:
            return boolean ? "true" : "false";
        case AbiType::Kind::FixedBytes:
        case AbiType::Kind::Bytes:
            return to_hex_prefixed(ByteView{blob.data(), blob.size()});
        case AbiType::Kind::String:
            return text;
        case AbiType::Kind::Array: {
            std::string out = "[";
            for (size_t i = 0; i < elements.size(); ++i) {
                if (i > 0)
                    out += ", ";
                out += elements[i].to_display();
            }
            return out + "]";
        }
    }
    return "?";
}

// ---- decoding ----

namespace {

class Reader {
  public:
    Reader(ByteView data, size_t base) : data_(data), base_(base) {}

    Word word_at(size_t offset) const {
        if (offset + 32 > data_.size())
            throw DecodeError("calldata tail truncated", base_ + offset);
        Word w;
        std::copy(data_.begin() + static_cast<long>(offset),
                  data_.begin() + static_cast<long>(offset) + 32, w.bytes.begin());
        return w;
    }

    size_t size_at(size_t offset) const {
        const Word w = word_at(offset);
        // offsets/lengths beyond 2^32 cannot be honest in calldata
        for (size_t i = 0; i < 28; ++i)
            if (w.bytes[i] != 0)
                throw DecodeError("implausibly large length or offset", base_ + offset);
        size_t v = 0;
        for (size_t i = 28; i < 32; ++i)
            v = v << 8 | w.bytes[i];
        return v;
    }

    Bytes slice(size_t offset, size_t length) const {
        if (offset + length > data_.size())
            throw DecodeError("byte payload truncated", base_ + offset);
        return Bytes(data_.begin() + static_cast<long>(offset),
                     data_.begin() + static_cast<long>(offset) + static_cast<long>(length));
    }

    size_t size() const { return data_.size(); }

  private:
    ByteView data_;
    size_t base_;
};

AbiValue decode_static(const AbiType& type, const Word& word, size_t offset_for_errors) {
    switch (type.kind) {
        case AbiType::Kind::Address:
            return AbiValue::of_address(word.to_address());
        case AbiType::Kind::Uint:
            return AbiValue::of_uint(U256::from_be_bytes(word));
        case AbiType::Kind::Int:
            return AbiValue::of_int(U256::from_be_bytes(word));
        case AbiType::Kind::Bool: {
            const U256 v = U256::from_be_bytes(word);
            if (!v.is_zero() && v != U256::from_u64(1))
                throw DecodeError("boolean word is neither 0 nor 1", offset_for_errors);
            return AbiValue::of_bool(!v.is_zero());
        }
        case AbiType::Kind::FixedBytes:
            return AbiValue::of_fixed_bytes(
                Bytes(word.bytes.begin(), word.bytes.begin() + type.byte_width));
        default:
            throw UsageError("decode_static on dynamic type");
    }
}

AbiValue decode_at(const AbiType& type, const Reader& reader, size_t offset);

AbiValue decode_dynamic_payload(const AbiType& type, const Reader& reader, size_t offset) {
    switch (type.kind) {
        case AbiType::Kind::Bytes: {
            const size_t length = reader.size_at(offset);
            return AbiValue::of_bytes(reader.slice(offset + 32, length));
        }
        case AbiType::Kind::String: {
            const size_t length = reader.size_at(offset);
            const Bytes raw = reader.slice(offset + 32, length);
            return AbiValue::of_string(std::string(raw.begin(), raw.end()));
        }
        case AbiType::Kind::Array: {
            const size_t count = reader.size_at(offset);
            if (count > (reader.size() / 32) + 1)
                throw DecodeError("array length exceeds calldata size", offset);
            const size_t elems_base = offset + 32;
            std::vector<AbiValue> elems;
            elems.reserve(count);
            for (size_t i = 0; i < count; ++i) {
                if (type.element->is_dynamic()) {
                    const size_t rel = reader.size_at(elems_base + 32 * i);
                    elems.push_back(decode_at(*type.element, reader, elems_base + rel));
                } else {
                    elems.push_back(decode_static(*type.element, reader.word_at(elems_base + 32 * i),
                                                  elems_base + 32 * i));
                }
            }
            AbiValue v = AbiValue::of_array(std::move(elems));
            return v;
        }
        default:
            throw UsageError("decode_dynamic_payload on static type");
    }
}

AbiValue decode_at(const AbiType& type, const Reader& reader, size_t offset) {
    if (type.is_dynamic())
        return decode_dynamic_payload(type, reader, offset);
    return decode_static(type, reader.word_at(offset), offset);
}

}  // namespace

std::vector<TypedParam> decode_calldata(const std::string& canonical_signature, ByteView calldata) {
    const ParsedSignature sig = parse_signature(canonical_signature);
    if (calldata.size() < 4)
        throw DecodeError("calldata shorter than a selector", 0);
    const Selector expected = evm::compute_selector(sig.canonical);
    if (!std::equal(expected.bytes.begin(), expected.bytes.end(), calldata.begin()))
        throw DecodeError("selector does not match signature " + sig.canonical, 0);

    const Reader reader(calldata.subspan(4), 4);
    std::vector<TypedParam> out;
    out.reserve(sig.params.size());
    for (size_t i = 0; i < sig.params.size(); ++i) {
        const AbiType& type = sig.params[i];
        const size_t head = 32 * i;
        AbiValue value;
        if (type.is_dynamic()) {
            const size_t offset = reader.size_at(head);
            value = decode_at(type, reader, offset);
        } else {
            value = decode_static(type, reader.word_at(head), head);
        }
        out.push_back({type.to_string(), std::move(value)});
    }
    return out;
}

// ---- encoding ----

namespace {

Word word_of_size(size_t v) {
    Word w;
    for (int i = 31; i >= 0 && v > 0; --i) {
        w.bytes[static_cast<size_t>(i)] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
    return w;
}

void append_word(Bytes& out, const Word& w) {
    out.insert(out.end(), w.bytes.begin(), w.bytes.end());
}

Word encode_static(const AbiType& type, const AbiValue& value) {
    switch (type.kind) {
        case AbiType::Kind::Address:
            return Word::from_address(value.address);
        case AbiType::Kind::Uint:
        case AbiType::Kind::Int:
            return value.number.to_be_bytes();
        case AbiType::Kind::Bool: {
            Word w;
            w.bytes[31] = value.boolean ? 1 : 0;
            return w;
        }
        case AbiType::Kind::FixedBytes: {
            if (value.blob.size() != type.byte_width)
                throw UsageError("fixed-bytes value width mismatch");
            Word w;
            std::copy(value.blob.begin(), value.blob.end(), w.bytes.begin());
            return w;
        }
        default:
            throw UsageError("encode_static on dynamic type");
    }
}

Bytes encode_value(const AbiType& type, const AbiValue& value);

Bytes encode_padded_bytes(const Bytes& payload) {
    Bytes out;
    append_word(out, word_of_size(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
    while (out.size() % 32 != 0)
        out.push_back(0);
    return out;
}

Bytes encode_sequence(const std::vector<const AbiType*>& types,
                      const std::vector<const AbiValue*>& values) {
    Bytes head;
    Bytes tail;
    const size_t head_size = 32 * types.size();
    for (size_t i = 0; i < types.size(); ++i) {
        if (types[i]->is_dynamic()) {
            append_word(head, word_of_size(head_size + tail.size()));
            const Bytes payload = encode_value(*types[i], *values[i]);
            tail.insert(tail.end(), payload.begin(), payload.end());
        } else {
            append_word(head, encode_static(*types[i], *values[i]));
        }
    }
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

Bytes encode_value(const AbiType& type, const AbiValue& value) {
    switch (type.kind) {
        case AbiType::Kind::Bytes:
            return encode_padded_bytes(value.blob);
        case AbiType::Kind::String:
            return encode_padded_bytes(Bytes(value.text.begin(), value.text.end()));
        case AbiType::Kind::Array: {
            Bytes out;
            append_word(out, word_of_size(value.elements.size()));
            std::vector<const AbiType*> types(value.elements.size(), type.element.get());
            std::vector<const AbiValue*> values;
            values.reserve(value.elements.size());
            for (const auto& e : value.elements)
                values.push_back(&e);
            const Bytes body = encode_sequence(types, values);
            out.insert(out.end(), body.begin(), body.end());
            return out;
        }
        default: {
            Bytes out;
            append_word(out, encode_static(type, value));
            return out;
        }
    }
}

}  // namespace

Bytes encode_calldata(const std::string& canonical_signature, const std::vector<AbiValue>& args) {
    const ParsedSignature sig = parse_signature(canonical_signature);
    if (args.size() != sig.params.size())
        throw UsageError("argument count does not match signature " + sig.canonical);
    const Selector selector = evm::compute_selector(sig.canonical);

    Bytes out(selector.bytes.begin(), selector.bytes.end());
    std::vector<const AbiType*> types;
    std::vector<const AbiValue*> values;
    for (size_t i = 0; i < args.size(); ++i) {
        types.push_back(&sig.params[i]);
        values.push_back(&args[i]);
    }
    const Bytes body = encode_sequence(types, values);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

}  // namespace govaudit::proposal
