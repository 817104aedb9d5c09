// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include <govaudit/evm/disassembler.hpp>

#include "oracles.hpp"

using namespace govaudit;
using namespace govaudit::evm;

TEST_CASE("disassemble simple add program") {
    const auto code = *from_hex("6001600201");
    const auto ins = disassemble(code);
    REQUIRE(ins.size() == 3);
    CHECK(ins[0].opcode == OP_PUSH1);
    CHECK(ins[0].immediate == Bytes{0x01});
    CHECK(ins[1].opcode == OP_PUSH1);
    CHECK(ins[1].immediate == Bytes{0x02});
    CHECK(ins[2].opcode == OP_ADD);
    CHECK(ins[2].immediate.empty());
    CHECK(ins[0].to_string() == "PUSH1 0x01");
}

TEST_CASE("disassemble empty input") {
    CHECK(disassemble({}).empty());
}

TEST_CASE("truncated trailing push is zero padded") {
    const auto code = *from_hex("60");
    const auto ins = disassemble(code);
    REQUIRE(ins.size() == 1);
    CHECK(ins[0].opcode == OP_PUSH1);
    CHECK(ins[0].immediate == Bytes{0x00});

    const auto wide = *from_hex("7f1122");  // PUSH32 with only 2 payload bytes
    const auto wide_ins = disassemble(wide);
    REQUIRE(wide_ins.size() == 1);
    CHECK(wide_ins[0].immediate.size() == 32);
    CHECK(wide_ins[0].immediate[0] == 0x11);
    CHECK(wide_ins[0].immediate[1] == 0x22);
    CHECK(wide_ins[0].immediate[2] == 0x00);
}

TEST_CASE("unknown bytes survive as invalid-class instructions") {
    const auto code = *from_hex("0c21fe");
    const auto ins = disassemble(code);
    REQUIRE(ins.size() == 3);
    CHECK(is_invalid_class(ins[0].opcode));
    CHECK(is_invalid_class(ins[1].opcode));
    CHECK(is_invalid_class(ins[2].opcode));
    CHECK(serialize(ins) == code);
}

TEST_CASE("strip_push_arguments") {
    const auto code = *from_hex("6001600201");
    CHECK(strip_push_arguments(disassemble(code)) == std::vector<uint8_t>{OP_PUSH1, OP_PUSH1, OP_ADD});
    CHECK(strip_push_arguments({}).empty());
    const auto caller = *from_hex("33");
    CHECK(strip_push_arguments(disassemble(caller)) == std::vector<uint8_t>{OP_CALLER});
}

TEST_CASE("round trip and offset monotonicity over random bytecode") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 300; ++round) {
        const Bytes code = oracle::random_bytecode(rng);
        const auto ins = disassemble(code);

        // reference disassembly agreement
        const auto ref = oracle::disassemble(code);
        REQUIRE(ins.size() == ref.size());
        for (size_t i = 0; i < ins.size(); ++i) {
            CHECK(ins[i].offset == ref[i].offset);
            CHECK(ins[i].opcode == ref[i].opcode);
            CHECK(ins[i].immediate == ref[i].immediate);
        }

        // offsets strictly increase and partition the byte range
        size_t expected_offset = 0;
        for (const auto& instruction : ins) {
            CHECK(instruction.offset == expected_offset);
            expected_offset += instruction.encoded_size();
        }

        // round trip, modulo zero padding of a truncated trailing push
        const Bytes serialized = serialize(ins);
        REQUIRE(serialized.size() >= code.size());
        CHECK(std::equal(code.begin(), code.end(), serialized.begin()));
        for (size_t i = code.size(); i < serialized.size(); ++i)
            CHECK(serialized[i] == 0);
    }
}
