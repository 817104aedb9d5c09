// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace govaudit::docaudit {

constexpr size_t kDefaultChunkTokens = 12000;
constexpr size_t kDefaultOverlapTokens = 2000;

/// Token occurrence inside the original document.
struct TokenSpan {
    size_t begin = 0;  // byte offsets
    size_t end = 0;
};

/// Pluggable tokenizer; the default splits on whitespace.
using Tokenizer = std::function<std::vector<TokenSpan>(const std::string&)>;

std::vector<TokenSpan> whitespace_tokens(const std::string& text);

struct Chunk {
    size_t index = 0;
    size_t token_begin = 0;  // [token_begin, token_end)
    size_t token_end = 0;
    std::string text;        // original text slice covering those tokens

    size_t token_count() const { return token_end - token_begin; }
};

/// Chunk k covers tokens [k*(size-overlap), k*(size-overlap)+size),
/// clipped at the document end; chunking stops once a chunk reaches the
/// final token, so a document within one size yields exactly one chunk.
std::vector<Chunk> chunk_document(const std::string& text, const Tokenizer& tokenizer,
                                  size_t size = kDefaultChunkTokens,
                                  size_t overlap = kDefaultOverlapTokens);

std::vector<Chunk> chunk_document(const std::string& text,
                                  size_t size = kDefaultChunkTokens,
                                  size_t overlap = kDefaultOverlapTokens);

}  // namespace govaudit::docaudit
