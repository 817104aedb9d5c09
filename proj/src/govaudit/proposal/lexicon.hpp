// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace govaudit::proposal {

enum class TokenKind {
    Word,        // plain alphabetic word
    Number,      // numeric literal, thousands separators kept
    HexAddress,  // 0x-prefixed hex run
    Identifier,  // code-shaped: snake_case, camelCase or call-like f(...)
};

struct Token {
    std::string text;
    TokenKind kind = TokenKind::Word;
    bool call_like = false;  // identifier directly followed by '('

    bool operator==(const Token&) const = default;
};

/// Word-level tokenizer for proposal sentences. Punctuation is dropped;
/// numbers keep their separators; 0x hex runs and code-shaped
/// identifiers survive as single tokens.
std::vector<Token> tokenize(const std::string& sentence);

/// Splits identifiers into lowercase words: camelCase, snake_case and
/// digit boundaries ("_setPendingGov" -> {set, pending, gov}).
std::vector<std::string> split_identifier_words(const std::string& identifier);

std::string to_lower(std::string s);

/// The versioned word lists behind the deterministic NL pipeline: action
/// verbs, their synonym groups, and known token symbols.
class Lexicon {
  public:
    static Lexicon load(const std::filesystem::path& data_dir);

    /// Lemma of `word` if the word (or its inflection) is a known action
    /// verb or a synonym of one; nullopt otherwise.
    std::optional<std::string> action_verb_lemma(const std::string& word) const;

    bool is_known_symbol(const std::string& word) const;

    /// Case-folded token with its synonym group (both directions) and
    /// its lemma, for overlap scoring.
    std::set<std::string> expand(const std::string& word) const;

    /// Crude inflection stripper: plural/participle endings with
    /// consonant dedoubling and silent-e restoration.
    static std::vector<std::string> lemma_candidates(const std::string& lower_word);

    const std::set<std::string>& verbs() const { return verbs_; }

  private:
    std::set<std::string> verbs_;
    std::map<std::string, std::set<std::string>> synonym_groups_;  // word -> group incl. itself
    std::set<std::string> symbols_;  // lowercase
};

}  // namespace govaudit::proposal
