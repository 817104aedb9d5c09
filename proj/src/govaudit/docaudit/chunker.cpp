// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "chunker.hpp"

#include <cctype>

#include "../common/errors.hpp"

namespace govaudit::docaudit {

std::vector<TokenSpan> whitespace_tokens(const std::string& text) {
    std::vector<TokenSpan> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size())
            break;
        const size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        out.push_back({begin, i});
    }
    return out;
}

std::vector<Chunk> chunk_document(const std::string& text, const Tokenizer& tokenizer, size_t size,
                                  size_t overlap) {
    if (size == 0 || overlap >= size)
        throw UsageError("chunk size must exceed the overlap");
    const auto tokens = tokenizer(text);
    std::vector<Chunk> chunks;
    if (tokens.empty())
        return chunks;

    const size_t step = size - overlap;
    for (size_t k = 0;; ++k) {
        const size_t begin = k * step;
        if (begin >= tokens.size())
            break;
        const size_t end = std::min(begin + size, tokens.size());
        Chunk chunk;
        chunk.index = k;
        chunk.token_begin = begin;
        chunk.token_end = end;
        chunk.text = text.substr(tokens[begin].begin, tokens[end - 1].end - tokens[begin].begin);
        chunks.push_back(std::move(chunk));
        if (end == tokens.size())
            break;  // final token reached; no further chunk
    }
    return chunks;
}

std::vector<Chunk> chunk_document(const std::string& text, size_t size, size_t overlap) {
    return chunk_document(text, whitespace_tokens, size, overlap);
}

}  // namespace govaudit::docaudit
