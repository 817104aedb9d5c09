// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "sentences.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace govaudit::proposal {

namespace {

constexpr std::array<const char*, 12> kAbbreviations = {
    "e.g", "i.e", "etc", "vs", "mr", "mrs", "dr", "no", "approx", "ca", "inc", "misc",
};

bool is_abbreviation_before(const std::string& text, size_t dot) {
    size_t start = dot;
    while (start > 0 && (std::isalpha(static_cast<unsigned char>(text[start - 1])) ||
                         text[start - 1] == '.'))
        --start;
    std::string word = to_lower(text.substr(start, dot - start));
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end();
}

// a dot with hex digits on both sides whose left run starts at 0x:
// an elided address like 0x41E6.7a42, not a sentence end
bool inside_hex_run(const std::string& text, size_t pos) {
    if (pos + 1 >= text.size() || !std::isxdigit(static_cast<unsigned char>(text[pos + 1])))
        return false;
    size_t i = pos;
    while (i >= 1 && (std::isxdigit(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '.'))
        --i;
    return i >= 2 && text[i - 1] == 'x' && text[i - 2] == '0';
}

}  // namespace

std::string strip_markdown(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (text.compare(i, 3, "```") == 0) {
            i += 3;  // fence marker; the fenced text itself stays
            while (i < n && text[i] != '\n')
                ++i;  // drop the language tag
            continue;
        }
        if (text[i] == '`') {
            ++i;
            continue;
        }
        if (text[i] == '[' || (text[i] == '!' && i + 1 < n && text[i + 1] == '[')) {
            const size_t open = text[i] == '!' ? i + 1 : i;
            const size_t close = text.find(']', open);
            if (close != std::string::npos && close + 1 < n && text[close + 1] == '(') {
                const size_t paren = text.find(')', close + 2);
                if (paren != std::string::npos) {
                    out.append(text, open + 1, close - open - 1);  // keep the label
                    i = paren + 1;
                    continue;
                }
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::vector<std::string> split_sentences(const std::string& description) {
    const std::string text = strip_markdown(description);
    std::vector<std::string> sentences;

    const auto emit = [&](size_t begin, size_t end) {
        while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
            ++begin;
        while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
            --end;
        if (end > begin)
            sentences.push_back(text.substr(begin, end - begin));
    };

    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?')
            continue;
        if (c == '.') {
            // decimal point
            if (i > 0 && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))
                continue;
            // ellipsis written as dots
            if ((i + 1 < text.size() && text[i + 1] == '.') || (i > 0 && text[i - 1] == '.'))
                continue;
            if (inside_hex_run(text, i))
                continue;
            if (is_abbreviation_before(text, i))
                continue;
        }
        // the boundary needs following whitespace then a letter or digit
        size_t j = i + 1;
        while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?'))
            ++j;
        if (j >= text.size()) {
            emit(start, i + 1);
            start = text.size();
            break;
        }
        if (!std::isspace(static_cast<unsigned char>(text[j])))
            continue;
        size_t k = j;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k])))
            ++k;
        if (k == text.size() || std::isalnum(static_cast<unsigned char>(text[k]))) {
            emit(start, i + 1);
            start = k;
            i = k == text.size() ? k : k - 1;
        }
    }
    emit(start, text.size());
    return sentences;
}

bool classify_code_related(const std::string& sentence, const Lexicon& lexicon) {
    const auto tokens = tokenize(sentence);

    bool has_verb = false;
    bool has_signal = false;
    for (const auto& token : tokens) {
        switch (token.kind) {
            case TokenKind::Number:
            case TokenKind::HexAddress:
                has_signal = true;
                break;
            case TokenKind::Identifier:
                has_signal = true;
                if (token.call_like) {
                    // the leading verb of a camelCase call counts
                    for (const auto& word : split_identifier_words(token.text))
                        if (lexicon.action_verb_lemma(word)) {
                            has_verb = true;
                            break;
                        }
                }
                break;
            case TokenKind::Word: {
                if (lexicon.action_verb_lemma(token.text))
                    has_verb = true;
                const bool all_caps =
                    token.text.size() >= 2 && token.text.size() <= 6 &&
                    std::all_of(token.text.begin(), token.text.end(),
                                [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
                if (all_caps || lexicon.is_known_symbol(token.text))
                    has_signal = true;
                break;
            }
        }
        if (has_verb && has_signal)
            return true;
    }
    return false;
}

bool classify_code_related(const std::string& sentence, const Lexicon& lexicon,
                           const SentenceClassifier& custom) {
    if (custom)
        return custom(sentence);
    return classify_code_related(sentence, lexicon);
}

}  // namespace govaudit::proposal
