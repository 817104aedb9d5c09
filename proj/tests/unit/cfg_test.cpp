// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <set>

#include <govaudit/evm/builder.hpp>
#include <govaudit/evm/cfg.hpp>

#include "oracles.hpp"

using namespace govaudit;
using namespace govaudit::evm;

TEST_CASE("straight-line code is a single block with no edges") {
    const auto code = *from_hex("600160020100");  // PUSH1 1, PUSH1 2, ADD, STOP
    const auto cfg = build_cfg(code);
    REQUIRE(cfg.blocks.size() == 1);
    CHECK(cfg.blocks[0].count == 4);
    CHECK(cfg.edges.empty());
    CHECK(cfg.unresolved_jumps.empty());
}

TEST_CASE("push target before jump resolves to a jump edge") {
    Program p;
    p.push_label("dest").op(OP_JUMP).label("dest").op(OP_STOP);
    const auto cfg = build_cfg(p.assemble());
    REQUIRE(cfg.blocks.size() == 2);
    REQUIRE(cfg.edges.size() == 1);
    CHECK(cfg.edges[0] == Edge{0, 1, EdgeKind::Jump});
    CHECK(cfg.unresolved_jumps.empty());
}

TEST_CASE("jumpi produces conditional and fallthrough edges") {
    Program p;
    p.push(uint64_t{1}).push_label("dest").op(OP_JUMPI).op(OP_STOP).label("dest").op(OP_STOP);
    const auto cfg = build_cfg(p.assemble());
    REQUIRE(cfg.blocks.size() == 3);
    std::set<Edge, decltype([](const Edge& a, const Edge& b) {
                 return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
             })>
        edges(cfg.edges.begin(), cfg.edges.end());
    CHECK(edges.count(Edge{0, 2, EdgeKind::Conditional}) == 1);
    CHECK(edges.count(Edge{0, 1, EdgeKind::Fallthrough}) == 1);
}

TEST_CASE("jump without preceding push is recorded unresolved") {
    const auto code = *from_hex("565b00");  // JUMP, JUMPDEST, STOP
    const auto cfg = build_cfg(code);
    REQUIRE(cfg.unresolved_jumps.size() == 1);
    CHECK(cfg.unresolved_jumps[0] == 0);
}

TEST_CASE("jump to non-jumpdest target is unresolved") {
    Program p;
    p.push(uint64_t{4}).op(OP_JUMP).op(OP_STOP).op(OP_STOP);
    const auto cfg = build_cfg(p.assemble());
    CHECK(cfg.unresolved_jumps.size() == 1);
}

TEST_CASE("jumpdest always starts a block") {
    const auto code = *from_hex("60015b5b00");  // PUSH1 1, JUMPDEST, JUMPDEST, STOP
    const auto cfg = build_cfg(code);
    REQUIRE(cfg.blocks.size() == 3);
    CHECK(cfg.blocks[1].start_offset == 2);
    CHECK(cfg.blocks[2].start_offset == 3);
}

TEST_CASE("blocks partition instructions over random bytecode") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 200; ++round) {
        const auto cfg = build_cfg(oracle::random_bytecode(rng));
        std::set<size_t> covered;
        for (const auto& block : cfg.blocks)
            for (size_t i = block.first; i < block.end(); ++i) {
                CHECK(!covered.count(i));
                covered.insert(i);
            }
        CHECK(covered.size() == cfg.instructions.size());
        for (const auto& e : cfg.edges) {
            CHECK(e.from < cfg.blocks.size());
            CHECK(e.to < cfg.blocks.size());
        }
    }
}

TEST_CASE("dot export names every block") {
    Program p;
    p.push_label("dest").op(OP_JUMP).label("dest").op(OP_STOP);
    const auto dot = to_dot(build_cfg(p.assemble()));
    CHECK(dot.find("digraph cfg") != std::string::npos);
    CHECK(dot.find("b0") != std::string::npos);
    CHECK(dot.find("b1") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
