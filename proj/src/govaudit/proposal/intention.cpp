// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "intention.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace govaudit::proposal {

namespace {

enum class Pos { Verb, Noun, PropN, Num, X, Other };

constexpr std::array<const char*, 30> kStopwords = {
    "the", "a",    "an",   "to",   "of",   "for",  "on",    "in",   "at",   "from",
    "by",  "with", "and",  "or",   "this", "that", "these", "those", "will", "would",
    "be",  "is",   "are",  "was",  "were", "we",   "our",   "it",   "its",  "as",
};

constexpr std::array<const char*, 9> kNegations = {
    "not", "never", "no", "cannot", "dont", "wont", "shouldnt", "cant", "without",
};

bool is_stopword(const std::string& lower) {
    return std::find(kStopwords.begin(), kStopwords.end(), lower) != kStopwords.end();
}

bool is_negation(const std::string& lower) {
    return std::find(kNegations.begin(), kNegations.end(), lower) != kNegations.end();
}

bool is_all_caps(const std::string& w) {
    return w.size() >= 2 &&
           std::all_of(w.begin(), w.end(),
                       [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
}

bool is_capitalized(const std::string& w) {
    return !w.empty() && std::isupper(static_cast<unsigned char>(w[0]));
}

}  // namespace

ParsedSentence PatternParseProvider::parse(const std::string& sentence) {
    ParsedSentence parsed;
    parsed.tokens = tokenize(sentence);
    const auto& tokens = parsed.tokens;

    std::vector<Pos> pos(tokens.size(), Pos::Other);
    for (size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        switch (t.kind) {
            case TokenKind::Number:
                pos[i] = Pos::Num;
                break;
            case TokenKind::HexAddress:
            case TokenKind::Identifier:
                pos[i] = Pos::X;
                break;
            case TokenKind::Word: {
                const std::string lower = to_lower(t.text);
                if (lexicon_.action_verb_lemma(t.text) && !parsed.root) {
                    pos[i] = Pos::Verb;
                } else if (is_stopword(lower) || is_negation(lower)) {
                    pos[i] = Pos::Other;
                } else if (is_all_caps(t.text) || (is_capitalized(t.text) && i != 0)) {
                    pos[i] = Pos::PropN;
                } else {
                    pos[i] = Pos::Noun;
                }
                break;
            }
        }
        if (pos[i] == Pos::Verb && !parsed.root) {
            parsed.root = i;
            parsed.root_lemma = *lexicon_.action_verb_lemma(t.text);
        }
    }
    if (!parsed.root)
        return parsed;

    // negation keyword anywhere before the root
    for (size_t i = 0; i < *parsed.root && !parsed.negated; ++i) {
        const std::string lower = to_lower(tokens[i].text);
        if (is_negation(lower))
            parsed.negated = true;
        if (i + 1 < tokens.size() && to_lower(tokens[i + 1].text) == "t" &&
            (lower == "don" || lower == "won" || lower == "can" || lower == "couldn" ||
             lower == "shouldn" || lower == "doesn"))
            parsed.negated = true;
    }

    // nearest following plain noun, falling back to a proper noun
    for (size_t i = *parsed.root + 1; i < tokens.size(); ++i)
        if (pos[i] == Pos::Noun) {
            parsed.dobj = i;
            break;
        }
    if (!parsed.dobj) {
        for (size_t i = *parsed.root + 1; i < tokens.size(); ++i)
            if (pos[i] == Pos::PropN) {
                parsed.dobj = i;
                break;
            }
    }

    // compounds: contiguous proper-noun run touching the object
    if (parsed.dobj) {
        for (size_t i = *parsed.dobj; i-- > 0;) {
            if (pos[i] == Pos::PropN && i != *parsed.root)
                parsed.compounds.push_back(i);
            else
                break;
        }
        for (size_t i = *parsed.dobj + 1; i < tokens.size(); ++i) {
            if (pos[i] == Pos::PropN)
                parsed.compounds.push_back(i);
            else
                break;
        }
        std::sort(parsed.compounds.begin(), parsed.compounds.end());
    }

    std::set<size_t> used;
    used.insert(*parsed.root);
    if (parsed.dobj)
        used.insert(*parsed.dobj);
    for (size_t c : parsed.compounds)
        used.insert(c);
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (used.count(i))
            continue;
        if (pos[i] == Pos::Noun || pos[i] == Pos::Num || pos[i] == Pos::PropN || pos[i] == Pos::X)
            parsed.parameter_tokens.push_back(i);
    }
    return parsed;
}

std::vector<DescriptionIntention> extract_intentions(const std::string& sentence,
                                                     ParseProvider& provider) {
    const ParsedSentence parsed = provider.parse(sentence);
    if (!parsed.root)
        return {};

    DescriptionIntention intention;
    intention.source_sentence = sentence;
    intention.negative = parsed.negated;
    intention.action.push_back(parsed.tokens[*parsed.root].text);
    if (parsed.dobj)
        intention.action.push_back(parsed.tokens[*parsed.dobj].text);
    for (size_t i : parsed.compounds)
        intention.target_object.push_back(parsed.tokens[i].text);
    for (size_t i : parsed.parameter_tokens)
        intention.parameters.push_back(parsed.tokens[i].text);
    return {std::move(intention)};
}

}  // namespace govaudit::proposal
