// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "matching.hpp"

#include <algorithm>
#include <set>

namespace govaudit::proposal {

namespace {

std::set<std::string> expanded_word_set(const std::string& text, const Lexicon& lexicon) {
    std::set<std::string> out;
    for (const auto& token : tokenize(text)) {
        std::vector<std::string> words;
        if (token.kind == TokenKind::Identifier)
            words = split_identifier_words(token.text);
        else
            words.push_back(to_lower(token.text));
        for (const auto& word : words) {
            const auto expansion = lexicon.expand(word);
            out.insert(expansion.begin(), expansion.end());
        }
    }
    return out;
}

std::string strip_commas(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ',')
            out.push_back(c);
    return out;
}

}  // namespace

TextSimilarity lexical_similarity(const Lexicon& lexicon) {
    return [&lexicon](const std::string& a, const std::string& b) {
        const auto set_a = expanded_word_set(a, lexicon);
        const auto set_b = expanded_word_set(b, lexicon);
        if (set_a.empty() || set_b.empty())
            return 0.0;
        size_t intersection = 0;
        for (const auto& w : set_a)
            intersection += set_b.count(w);
        // overlap coefficient: a one-word name inside a longer action
        // phrase still scores 1.0
        return static_cast<double>(intersection) /
               static_cast<double>(std::min(set_a.size(), set_b.size()));
    };
}

FunctionMatch match_function(const CodeAction& action,
                             const std::vector<DescriptionIntention>& intentions,
                             const TextSimilarity& similarity, double threshold) {
    FunctionMatch match;
    std::string subject;
    if (action.function_name) {
        const auto paren = action.function_name->find('(');
        const std::string bare = action.function_name->substr(0, paren);
        for (const auto& word : split_identifier_words(bare))
            subject += word + " ";
    }
    if (action.target_symbol)
        subject += *action.target_symbol;
    if (subject.empty())
        return match;  // nothing nameable to compare

    for (size_t i = 0; i < intentions.size(); ++i) {
        std::string action_text;
        for (const auto& word : intentions[i].action)
            action_text += word + " ";
        const double score = similarity(subject, action_text);
        match.best_score = std::max(match.best_score, score);
        if (score >= threshold) {
            match.mentioned = true;
            match.matched_intentions.push_back(i);
            if (intentions[i].negative)
                match.negative_mentioned = true;
        }
    }
    return match;
}

namespace {

struct Haystack {
    std::set<std::string> tokens;      // lowercased, commas stripped
    std::string joined;                // lowercased parameter text
};

Haystack parameter_haystack(const std::vector<DescriptionIntention>& intentions) {
    Haystack h;
    for (const auto& intention : intentions) {
        for (const auto& p : intention.parameters) {
            const std::string lower = strip_commas(to_lower(p));
            h.tokens.insert(lower);
            h.joined += lower + " ";
        }
    }
    return h;
}

bool contains_ci(const std::string& haystack, const std::string& needle) {
    if (needle.empty())
        return false;
    return haystack.find(to_lower(needle)) != std::string::npos;
}

bool words_all_present(const Haystack& h, const std::string& name) {
    const auto words = split_identifier_words(name);
    if (words.empty())
        return false;
    for (const auto& w : words)
        if (!h.tokens.count(w) && !contains_ci(h.joined, w))
            return false;
    return true;
}

bool printable_ascii(const Bytes& blob) {
    if (blob.empty())
        return false;
    return std::all_of(blob.begin(), blob.end(), [](uint8_t b) { return b >= 0x20 && b < 0x7f; });
}

ParameterMatch match_one(const AbiValue& value, const CodeAction& owner, const Haystack& haystack,
                         const std::vector<DescriptionIntention>& intentions,
                         chaindata::ChainDataProvider& provider);

ParameterMatch match_address(const Address& address, const Haystack& haystack,
                             chaindata::ChainDataProvider& provider) {
    std::optional<std::string> name;
    try {
        const auto md = provider.get_metadata(address);
        if (md.name_tag)
            name = md.name_tag;
        else if (md.symbol)
            name = md.symbol;
    } catch (const DataError&) {
        // fall through to the hex check
    }
    if (name && words_all_present(haystack, *name))
        return {true, "address name \"" + *name + "\" mentioned"};

    const std::string hex = to_hex(ByteView{address.bytes.data(), address.bytes.size()});
    if (contains_ci(haystack.joined, hex))
        return {true, "address hex mentioned"};
    // elided forms: the leading 4+ bytes are enough to recognize it
    if (contains_ci(haystack.joined, "0x" + hex.substr(0, 8)) ||
        contains_ci(haystack.joined, hex.substr(0, 8)))
        return {true, "address prefix mentioned"};
    return {false, name ? "neither name \"" + *name + "\" nor hex form appears"
                        : "hex form does not appear"};
}

ParameterMatch match_number(const AbiValue& value, const CodeAction& owner,
                            const Haystack& haystack, chaindata::ChainDataProvider& provider) {
    std::string raw = value.kind == AbiType::Kind::Int && value.number.high_bit_set()
                          ? "-" + value.number.negated().to_decimal()
                          : value.number.to_decimal();
    if (haystack.tokens.count(raw) || contains_ci(haystack.joined, raw))
        return {true, "raw value " + raw + " mentioned"};

    // ERC-20 human scale: divide by the target token's decimals
    if (value.kind == AbiType::Kind::Uint) {
        std::optional<uint32_t> decimals;
        try {
            decimals = provider.get_token_decimals(owner.target_address);
        } catch (const DataError&) {
        }
        if (decimals && *decimals > 0 && *decimals <= 77) {
            const auto scaled = scale_by_decimals(value.number, *decimals);
            const std::string human = scaled.to_string();
            if (haystack.tokens.count(human) || contains_ci(haystack.joined, human))
                return {true, "decimals-scaled value " + human + " mentioned"};
            return {false, "neither " + raw + " nor scaled " + human + " appears"};
        }
    }
    return {false, "value " + raw + " does not appear"};
}

ParameterMatch match_bytes(const AbiValue& value, const Haystack& haystack) {
    const std::string hex = to_hex(ByteView{value.blob.data(), value.blob.size()});
    if (!hex.empty() && contains_ci(haystack.joined, hex))
        return {true, "byte hex mentioned"};
    if (printable_ascii(value.blob)) {
        const std::string text(value.blob.begin(), value.blob.end());
        if (contains_ci(haystack.joined, text))
            return {true, "decoded text \"" + text + "\" mentioned"};
        return {false, "neither hex nor decoded text \"" + text + "\" appears"};
    }
    return {false, "byte hex does not appear"};
}

ParameterMatch match_one(const AbiValue& value, const CodeAction& owner, const Haystack& haystack,
                         const std::vector<DescriptionIntention>& intentions,
                         chaindata::ChainDataProvider& provider) {
    switch (value.kind) {
        case AbiType::Kind::Address:
            return match_address(value.address, haystack, provider);
        case AbiType::Kind::Uint:
        case AbiType::Kind::Int:
            return match_number(value, owner, haystack, provider);
        case AbiType::Kind::Bool:
            return {haystack.tokens.count(value.boolean ? "true" : "false") > 0 ||
                        contains_ci(haystack.joined, value.boolean ? "true" : "false"),
                    "boolean literal"};
        case AbiType::Kind::FixedBytes:
        case AbiType::Kind::Bytes:
            return match_bytes(value, haystack);
        case AbiType::Kind::String:
            if (contains_ci(haystack.joined, value.text))
                return {true, "string mentioned"};
            return {false, "string \"" + value.text + "\" does not appear"};
        case AbiType::Kind::Array: {
            for (const auto& element : value.elements) {
                const auto m = match_one(element, owner, haystack, intentions, provider);
                if (!m.mentioned)
                    return {false, "list element not mentioned: " + m.detail};
            }
            return {true, "all list elements mentioned"};
        }
    }
    return {false, "unsupported parameter kind"};
}

}  // namespace

ParameterMatch match_parameter(const TypedParam& param, const CodeAction& owner,
                               const std::vector<DescriptionIntention>& intentions,
                               chaindata::ChainDataProvider& provider) {
    const Haystack haystack = parameter_haystack(intentions);
    return match_one(param.value, owner, haystack, intentions, provider);
}

}  // namespace govaudit::proposal
