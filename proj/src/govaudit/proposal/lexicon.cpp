// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>

#include "../common/errors.hpp"

namespace govaudit::proposal {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_hex_digit(char c) {
    return std::isxdigit(static_cast<unsigned char>(c));
}

bool has_code_shape(const std::string& word) {
    if (word.find('_') != std::string::npos)
        return true;
    // camelCase: lowercase directly followed by uppercase
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (std::islower(static_cast<unsigned char>(word[i])) &&
            std::isupper(static_cast<unsigned char>(word[i + 1])))
            return true;
    return false;
}

}  // namespace

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<Token> tokenize(const std::string& sentence) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = sentence.size();
    while (i < n) {
        const char c = sentence[i];
        if (c == '0' && i + 2 < n && (sentence[i + 1] == 'x' || sentence[i + 1] == 'X') &&
            is_hex_digit(sentence[i + 2])) {
            size_t j = i + 2;
            while (j < n && is_hex_digit(sentence[j]))
                ++j;
            out.push_back({sentence.substr(i, j - i), TokenKind::HexAddress, false});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < n) {
                if (std::isdigit(static_cast<unsigned char>(sentence[j]))) {
                    ++j;
                } else if ((sentence[j] == ',' || sentence[j] == '.') && j + 1 < n &&
                           std::isdigit(static_cast<unsigned char>(sentence[j + 1]))) {
                    ++j;  // separator inside the number
                } else {
                    break;
                }
            }
            out.push_back({sentence.substr(i, j - i), TokenKind::Number, false});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < n && is_word_char(sentence[j]))
                ++j;
            Token token{sentence.substr(i, j - i), TokenKind::Word, false};
            if (j < n && sentence[j] == '(')
                token.call_like = true;
            if (token.call_like || has_code_shape(token.text))
                token.kind = TokenKind::Identifier;
            out.push_back(std::move(token));
            i = j;
            continue;
        }
        ++i;  // punctuation and whitespace
    }
    return out;
}

std::vector<std::string> split_identifier_words(const std::string& identifier) {
    std::vector<std::string> words;
    std::string current;
    const auto flush = [&] {
        if (!current.empty()) {
            words.push_back(to_lower(current));
            current.clear();
        }
    };
    for (size_t i = 0; i < identifier.size(); ++i) {
        const char c = identifier[i];
        if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(c)) && !current.empty() &&
            std::islower(static_cast<unsigned char>(current.back()))) {
            flush();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) && !current.empty() &&
            !std::isdigit(static_cast<unsigned char>(current.back()))) {
            flush();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) && !current.empty() &&
            std::isdigit(static_cast<unsigned char>(current.back()))) {
            flush();
        }
        current.push_back(c);
    }
    flush();
    return words;
}

std::vector<std::string> Lexicon::lemma_candidates(const std::string& w) {
    std::vector<std::string> out{w};
    const auto add = [&](const std::string& s) {
        if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    };
    const auto dedouble = [](const std::string& s) {
        if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2])
            return s.substr(0, s.size() - 1);
        return s;
    };
    if (w.size() > 3 && w.ends_with("ies"))
        add(w.substr(0, w.size() - 3) + "y");
    if (w.size() > 3 && w.ends_with("ied"))
        add(w.substr(0, w.size() - 3) + "y");
    if (w.size() > 2 && w.ends_with("es"))
        add(w.substr(0, w.size() - 2));
    if (w.size() > 1 && w.ends_with("s") && !w.ends_with("ss"))
        add(w.substr(0, w.size() - 1));
    if (w.size() > 2 && w.ends_with("ed")) {
        const std::string stem = w.substr(0, w.size() - 2);
        add(stem);
        add(dedouble(stem));
        add(stem + "e");
    }
    if (w.size() > 3 && w.ends_with("ing")) {
        const std::string stem = w.substr(0, w.size() - 3);
        add(stem);
        add(dedouble(stem));
        add(stem + "e");
    }
    return out;
}

Lexicon Lexicon::load(const std::filesystem::path& data_dir) {
    Lexicon lex;

    const auto read_lines = [](const std::filesystem::path& file,
                               const std::function<void(const std::string&)>& fn) {
        std::ifstream in(file);
        if (!in)
            throw InputError("cannot open lexicon file " + file.string());
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            fn(line);
        }
    };

    read_lines(data_dir / "verbs.txt", [&](const std::string& line) {
        lex.verbs_.insert(to_lower(line));
    });

    read_lines(data_dir / "synonyms.txt", [&](const std::string& line) {
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("synonyms.txt line lacks a colon: " + line);
        std::set<std::string> group;
        group.insert(to_lower(line.substr(0, colon)));
        size_t start = colon + 1;
        while (start <= line.size()) {
            auto comma = line.find(',', start);
            std::string word =
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            word.erase(0, word.find_first_not_of(' '));
            word.erase(word.find_last_not_of(' ') + 1);
            if (!word.empty())
                group.insert(to_lower(word));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        for (const auto& member : group) {
            auto& bucket = lex.synonym_groups_[member];
            bucket.insert(group.begin(), group.end());
        }
    });

    read_lines(data_dir / "symbols.txt", [&](const std::string& line) {
        lex.symbols_.insert(to_lower(line));
    });

    return lex;
}

std::optional<std::string> Lexicon::action_verb_lemma(const std::string& word) const {
    const std::string lower = to_lower(word);
    for (const auto& candidate : lemma_candidates(lower)) {
        if (verbs_.count(candidate))
            return candidate;
        const auto group = synonym_groups_.find(candidate);
        if (group != synonym_groups_.end()) {
            // synonym of a listed verb counts; report the listed verb
            for (const auto& member : group->second)
                if (verbs_.count(member))
                    return member;
        }
    }
    return std::nullopt;
}

bool Lexicon::is_known_symbol(const std::string& word) const {
    return symbols_.count(to_lower(word)) > 0;
}

std::set<std::string> Lexicon::expand(const std::string& word) const {
    std::set<std::string> out;
    const std::string lower = to_lower(word);
    out.insert(lower);
    for (const auto& candidate : lemma_candidates(lower)) {
        out.insert(candidate);
        const auto group = synonym_groups_.find(candidate);
        if (group != synonym_groups_.end())
            out.insert(group->second.begin(), group->second.end());
    }
    return out;
}

}  // namespace govaudit::proposal
