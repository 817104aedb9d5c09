// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include <govaudit/evm/synth.hpp>
#include <govaudit/common/errors.hpp>
#include <govaudit/similarity/ngram.hpp>

#include "oracles.hpp"

using namespace govaudit;
using namespace govaudit::similarity;
namespace synth = govaudit::evm::synth;

namespace {

std::vector<uint8_t> seq(std::initializer_list<uint8_t> v) {
    return {v};
}

// rewrites every PUSH payload with bytes from the rng, keeping opcodes
Bytes rewrite_push_payloads(const Bytes& code, std::mt19937_64& rng) {
    auto ins = evm::disassemble(ByteView{code.data(), code.size()});
    std::uniform_int_distribution<int> byte_dist(0, 255);
    for (auto& i : ins)
        for (auto& b : i.immediate)
            b = static_cast<uint8_t>(byte_dist(rng));
    return evm::serialize(ins);
}

}  // namespace

TEST_CASE("ngram_profile windows") {
    const auto p = ngram_profile(seq({1, 2, 3, 4, 5, 6}), 5);
    CHECK(p.grams.size() == 2);
    CHECK(ngram_profile(seq({1, 2}), 5).grams.empty());
    CHECK(ngram_profile(seq({9, 9, 9, 9, 9, 9}), 5).grams.size() == 1);  // set semantics
    CHECK_THROWS_AS(ngram_profile(seq({1}), 0), UsageError);
}

TEST_CASE("jaccard scores") {
    const auto a = ngram_profile(seq({1, 2, 3, 4, 5, 6, 7}), 5);       // 3 grams
    CHECK(jaccard(a, a) == doctest::Approx(1.0));
    const auto empty = ngram_profile({}, 5);
    CHECK(jaccard(empty, empty) == doctest::Approx(1.0));
    CHECK(jaccard(a, empty) == doctest::Approx(0.0));

    // {x,y,z} vs {y,z,w} -> 2/4
    const auto p1 = ngram_profile(seq({1, 2, 3, 4, 5, 6, 7}), 5);      // xyz
    const auto p2 = ngram_profile(seq({2, 3, 4, 5, 6, 7, 8}), 5);      // yzw
    CHECK(jaccard(p1, p2) == doctest::Approx(0.5));

    const auto other_n = ngram_profile(seq({1, 2, 3}), 3);
    CHECK_THROWS_AS(jaccard(a, other_n), UsageError);
}

TEST_CASE("byte-identical contracts are similar with score 1") {
    const auto code = synth::dispatcher_contract(
        {synth::function_from_signature("totalSupply()", synth::trivial_body(3))});
    const auto d = contracts_similar(ByteView{code.data(), code.size()},
                                     ByteView{code.data(), code.size()});
    CHECK(d.score == doctest::Approx(1.0));
    CHECK(d.similar);
    CHECK(d.threshold == doctest::Approx(0.8));
}

TEST_CASE("contracts differing only in push immediates score 1") {
    std::mt19937_64 rng(99);
    const auto code = synth::dispatcher_contract(
        {synth::function_from_signature("transfer(address,uint256)", synth::trivial_body(1)),
         synth::function_from_signature("approve(address,uint256)", synth::trivial_body(2))});
    const auto rewritten = rewrite_push_payloads(code, rng);
    const auto d = contracts_similar(ByteView{code.data(), code.size()},
                                     ByteView{rewritten.data(), rewritten.size()});
    CHECK(d.score == doctest::Approx(1.0));
    CHECK(d.similar);
}

TEST_CASE("jaccard symmetry and push invariance over random code") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 60; ++round) {
        const Bytes a = oracle::random_bytecode(rng, 300);
        const Bytes b = oracle::random_bytecode(rng, 300);
        const auto ab = contracts_similar(ByteView{a.data(), a.size()}, ByteView{b.data(), b.size()});
        const auto ba = contracts_similar(ByteView{b.data(), b.size()}, ByteView{a.data(), a.size()});
        CHECK(ab.score == doctest::Approx(ba.score));
        CHECK(ab.similar == ba.similar);

        const Bytes a_rewritten = rewrite_push_payloads(a, rng);
        const auto self = contracts_similar(ByteView{a.data(), a.size()},
                                            ByteView{a_rewritten.data(), a_rewritten.size()});
        CHECK(self.score == doctest::Approx(1.0));
    }
}

TEST_CASE("function_similar max over variants") {
    const auto make_body = [](uint64_t marker, size_t pad) {
        evm::FunctionBody body;
        evm::Program p;
        p.push(marker);
        for (size_t i = 0; i < pad; ++i)
            p.op(evm::OP_DUP1).op(evm::OP_POP);
        p.push(uint64_t{0}).op(evm::OP_MSTORE).op(evm::OP_STOP);
        body.instructions = evm::disassemble(p.assemble());
        return body;
    };

    const auto target = make_body(5, 6);
    const auto same = make_body(9, 6);       // differs only in a push immediate
    const auto different = make_body(1, 40);  // different shape

    SUBCASE("identical variant gives 1.0") {
        const auto d = function_similar(target, {different, same});
        CHECK(d.score == doctest::Approx(1.0));
        CHECK(d.similar);
    }
    SUBCASE("no shared grams gives 0.0") {
        evm::Program p;
        for (size_t i = 0; i < 10; ++i)
            p.op(evm::OP_CALLER).op(evm::OP_POP);
        p.op(evm::OP_STOP);
        evm::FunctionBody unrelated;
        unrelated.instructions = evm::disassemble(p.assemble());
        const auto d = function_similar(target, {unrelated});
        CHECK(d.score == doctest::Approx(0.0));
        CHECK(!d.similar);
    }
    SUBCASE("adding a variant never lowers the score") {
        const auto base = function_similar(target, {different});
        const auto more = function_similar(target, {different, same});
        CHECK(more.score >= base.score);
    }
    SUBCASE("empty variant list is a configuration error") {
        CHECK_THROWS_AS(function_similar(target, {}), UsageError);
    }
}

TEST_CASE("decision respects a custom threshold") {
    const auto a = seq({1, 2, 3, 4, 5, 6});
    evm::FunctionBody fa;
    for (uint8_t op : a)
        fa.instructions.push_back({0, op, {}});
    evm::FunctionBody fb = fa;
    fb.instructions.push_back({0, 7, {}});  // one extra gram: 2 shared of 3 total
    const auto d = function_similar(fa, {fb}, 0.9);
    CHECK(d.score == doctest::Approx(2.0 / 3.0));
    CHECK(!d.similar);
    const auto loose = function_similar(fa, {fb}, 0.4);
    CHECK(loose.similar);
}
