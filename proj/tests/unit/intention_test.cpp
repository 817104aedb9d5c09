// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include <govaudit/proposal/intention.hpp>

using namespace govaudit;
using namespace govaudit::proposal;

namespace {

const Lexicon& lexicon() {
    static const Lexicon lex = Lexicon::load(GOVAUDIT_DATA_DIR);
    return lex;
}

std::vector<DescriptionIntention> extract(const std::string& sentence) {
    PatternParseProvider provider(lexicon());
    return extract_intentions(sentence, provider);
}

bool contains(const std::vector<std::string>& list, const std::string& value) {
    return std::find(list.begin(), list.end(), value) != list.end();
}

}  // namespace

TEST_CASE("ARENA transfer sentence: expected tuple pinned from the pattern rules") {
    // hand-derived against the pattern provider's documented rules:
    // root = first verb-list token, dobj = nearest following plain noun,
    // compounds = proper-noun run touching the dobj
    const auto intentions = extract("Transfer 500 ARENA tokens to the grants multisig.");
    REQUIRE(intentions.size() == 1);
    const auto& intent = intentions[0];
    CHECK(intent.action == std::vector<std::string>{"Transfer", "tokens"});
    CHECK(intent.target_object == std::vector<std::string>{"ARENA"});
    CHECK(contains(intent.parameters, "500"));
    CHECK(contains(intent.parameters, "grants"));
    CHECK(contains(intent.parameters, "multisig"));
    CHECK(!intent.negative);
    CHECK(intent.source_sentence.find("ARENA") != std::string::npos);
}

TEST_CASE("negated imperative carries the Negative tag") {
    const auto intentions = extract("Do not upgrade the Timelock.");
    REQUIRE(intentions.size() == 1);
    CHECK(intentions[0].negative);
    CHECK(intentions[0].action.front() == "upgrade");
    // no plain noun after the root; the proper noun serves as object
    CHECK(contains(intentions[0].action, "Timelock"));
}

TEST_CASE("contracted negation") {
    const auto intentions = extract("We won't transfer any treasury funds.");
    REQUIRE(intentions.size() == 1);
    CHECK(intentions[0].negative);
}

TEST_CASE("sentence without a verb-list root yields nothing") {
    CHECK(extract("The community is wonderful today.").empty());
    CHECK(extract("").empty());
}

TEST_CASE("synonyms of listed verbs are accepted as the root") {
    // "disburse" is listed as a synonym of distribute
    const auto intentions = extract("Disburse 40 grants to contributors.");
    REQUIRE(intentions.size() == 1);
    CHECK(intentions[0].action.front() == "Disburse");
}

TEST_CASE("numbers addresses and identifiers land in parameters") {
    const auto intentions =
        extract("Call setVotingPeriod(100) with value 2,500 at 0xABCD1234 for the grants pool.");
    REQUIRE(intentions.size() == 1);
    const auto& params = intentions[0].parameters;
    CHECK(contains(params, "setVotingPeriod"));
    CHECK(contains(params, "100"));
    CHECK(contains(params, "2,500"));
    CHECK(contains(params, "0xABCD1234"));
}

TEST_CASE("inflected verbs lemmatize onto the list") {
    CHECK(!extract("Transferring 10 BEAN to the silo.").empty());
    CHECK(!extract("Sends 5 COMP to the reserve.").empty());
    CHECK(!extract("Minted 100 YAM for rewards.").empty());
    CHECK(!extract("Settling synths tokens for reserves.").empty());
    // "setting" dedoubles onto "set"
    CHECK(extract("Setting the voting period to 100 blocks.")[0].action.front() == "Setting");
}
