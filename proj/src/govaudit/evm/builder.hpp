// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "../common/errors.hpp"
#include "../common/hex.hpp"
#include "opcodes.hpp"

namespace govaudit::evm {

/// Two-pass bytecode assembler for building probe contracts and test
/// fixtures. Labels are resolved to PUSH2 offsets.
class Program {
  public:
    Program& op(uint8_t opcode) {
        items_.push_back({Item::Op, opcode, {}, {}});
        return *this;
    }

    Program& push(ByteView immediate) {
        if (immediate.empty() || immediate.size() > 32)
            throw UsageError("push immediate must be 1..32 bytes");
        items_.push_back({Item::Push, 0, Bytes(immediate.begin(), immediate.end()), {}});
        return *this;
    }

    Program& push(std::initializer_list<uint8_t> immediate) {
        return push(ByteView{immediate.begin(), immediate.size()});
    }

    /// Minimal-width push of an integer constant (PUSH1 for 0).
    Program& push(uint64_t value) {
        Bytes be;
        for (uint64_t v = value; v > 0; v >>= 8)
            be.insert(be.begin(), static_cast<uint8_t>(v & 0xff));
        if (be.empty())
            be.push_back(0);
        return push(ByteView{be.data(), be.size()});
    }

    /// PUSH2 of a label's offset, resolved at assembly.
    Program& push_label(const std::string& name) {
        items_.push_back({Item::PushLabel, 0, {}, name});
        return *this;
    }

    /// Defines `name` here and emits a JUMPDEST.
    Program& label(const std::string& name) {
        items_.push_back({Item::Label, OP_JUMPDEST, {}, name});
        return *this;
    }

    Program& raw(ByteView bytes) {
        items_.push_back({Item::Raw, 0, Bytes(bytes.begin(), bytes.end()), {}});
        return *this;
    }

    /// Splices another program in place, namespacing its labels so two
    /// embedded bodies cannot collide.
    Program& append(const Program& other, const std::string& label_prefix) {
        for (Item item : other.items_) {
            if (item.kind == Item::Label || item.kind == Item::PushLabel)
                item.name = label_prefix + item.name;
            items_.push_back(std::move(item));
        }
        return *this;
    }

    Bytes assemble() const {
        std::map<std::string, size_t> offsets;
        size_t pc = 0;
        for (const auto& item : items_) {
            if (item.kind == Item::Label)
                offsets[item.name] = pc;
            pc += item.size();
        }
        Bytes out;
        out.reserve(pc);
        for (const auto& item : items_) {
            switch (item.kind) {
                case Item::Op:
                    out.push_back(item.opcode);
                    break;
                case Item::Push:
                    out.push_back(static_cast<uint8_t>(OP_PUSH0 + item.bytes.size()));
                    out.insert(out.end(), item.bytes.begin(), item.bytes.end());
                    break;
                case Item::PushLabel: {
                    const auto it = offsets.find(item.name);
                    if (it == offsets.end())
                        throw UsageError("undefined label: " + item.name);
                    out.push_back(OP_PUSH2);
                    out.push_back(static_cast<uint8_t>(it->second >> 8));
                    out.push_back(static_cast<uint8_t>(it->second & 0xff));
                    break;
                }
                case Item::Label:
                    out.push_back(OP_JUMPDEST);
                    break;
                case Item::Raw:
                    out.insert(out.end(), item.bytes.begin(), item.bytes.end());
                    break;
            }
        }
        return out;
    }

  private:
    struct Item {
        enum Kind { Op, Push, PushLabel, Label, Raw } kind;
        uint8_t opcode;
        Bytes bytes;
        std::string name;

        size_t size() const {
            switch (kind) {
                case Op: return 1;
                case Push: return 1 + bytes.size();
                case PushLabel: return 3;
                case Label: return 1;
                case Raw: return bytes.size();
            }
            return 0;
        }
    };

    std::vector<Item> items_;
};

}  // namespace govaudit::evm
