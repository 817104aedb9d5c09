// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <govaudit/proposal/sentences.hpp>

using namespace govaudit;
using namespace govaudit::proposal;

namespace {

const Lexicon& lexicon() {
    static const Lexicon lex = Lexicon::load(GOVAUDIT_DATA_DIR);
    return lex;
}

}  // namespace

TEST_CASE("two plain sentences split at the period") {
    const auto s = split_sentences("Transfer funds. Update oracle.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Transfer funds.");
    CHECK(s[1] == "Update oracle.");
}

TEST_CASE("empty text yields no sentences") {
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   \n\t ").empty());
}

TEST_CASE("decimals, unicode ellipses and address dots are not boundaries") {
    const auto s = split_sentences("Send 1.5 ETH to 0xAB\xE2\x80\xA6 now.");
    REQUIRE(s.size() == 1);
    CHECK(s[0].find("1.5") != std::string::npos);

    const auto elided = split_sentences("Call 0x41E6.7a42 to settle. Then stop.");
    REQUIRE(elided.size() == 2);

    const auto ascii_ellipsis = split_sentences("Transfer 5 tokens... then wait.");
    CHECK(ascii_ellipsis.size() == 1);
}

TEST_CASE("abbreviations do not split") {
    const auto s = split_sentences("Deploy the module (e.g. the timelock adapter). Then vote.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].find("e.g. the timelock") != std::string::npos);
}

TEST_CASE("exclamations and questions split too") {
    const auto s = split_sentences("Vote now! Will the quorum pass? We think so.");
    REQUIRE(s.size() == 3);
}

TEST_CASE("trailing fragment without terminal punctuation is kept") {
    const auto s = split_sentences("Transfer funds. final note without period");
    REQUIRE(s.size() == 2);
    CHECK(s[1] == "final note without period");
}

TEST_CASE("markdown links and fences reduce to visible text") {
    CHECK(strip_markdown("see [the forum post](https://example.org/x) for details") ==
          "see the forum post for details");
    CHECK(strip_markdown("run `transfer()` now") == "run transfer() now");
    const auto fenced = strip_markdown("```solidity\ntransfer(a, b);\n```");
    CHECK(fenced.find("transfer(a, b);") != std::string::npos);
    CHECK(fenced.find("```") == std::string::npos);
    CHECK(fenced.find("solidity") == std::string::npos);
}

TEST_CASE("code-related classification") {
    // verb + numeric/address signal
    CHECK(classify_code_related("This proposal transfers 1,000 USDC to 0xabc1234567.", lexicon()));
    // no action verb
    CHECK(!classify_code_related("We believe the community will benefit.", lexicon()));
    // call-shaped identifier carries both the verb and the signal
    CHECK(classify_code_related("Call setVotingPeriod(100) on the Governor.", lexicon()));
    // verb but no code signal
    CHECK(!classify_code_related("We will update our social channels soon.", lexicon()));
    // known symbol as the signal
    CHECK(classify_code_related("Sending settled rewards tokens to reserves and claiming sushi.",
                                lexicon()));
    // ALL-CAPS ticker as the signal
    CHECK(classify_code_related("Distribute TORN rewards to early adopters.", lexicon()));
}

TEST_CASE("custom classifier overrides the heuristic") {
    const auto always_yes = [](const std::string&) { return true; };
    CHECK(classify_code_related("We believe the community will benefit.", lexicon(), always_yes));
    CHECK(classify_code_related("anything", lexicon(), SentenceClassifier{}) ==
          classify_code_related("anything", lexicon()));
}
