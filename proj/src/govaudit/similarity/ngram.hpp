// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <string>
#include <vector>

#include "../common/hex.hpp"
#include "../evm/functions.hpp"

namespace govaudit::similarity {

constexpr size_t kDefaultGramLength = 5;
constexpr double kDefaultThreshold = 0.8;

/// Set of contiguous opcode n-tuples over a PUSH-stripped sequence.
/// Set (not multiset) semantics: repeats collapse.
struct NGramProfile {
    size_t n = kDefaultGramLength;
    std::set<std::string> grams;  // each gram is n opcode bytes

    bool empty() const { return grams.empty(); }
};

struct SimilarityDecision {
    double score = 0.0;
    double threshold = kDefaultThreshold;
    bool similar = false;
};

NGramProfile ngram_profile(const std::vector<uint8_t>& normalized_opcodes,
                           size_t n = kDefaultGramLength);

/// |a∩b| / |a∪b|. Both-empty scores 1.0, exactly-one-empty 0.0.
/// Profiles with different n are incomparable.
double jaccard(const NGramProfile& a, const NGramProfile& b);

/// Whole-contract similarity: disassemble, strip PUSH payloads, profile
/// 5-grams, compare by Jaccard against the threshold.
SimilarityDecision contracts_similar(ByteView code_a, ByteView code_b,
                                     double threshold = kDefaultThreshold,
                                     size_t n = kDefaultGramLength);

/// Max-over-variants similarity of a function body against template
/// variants (one per compiler version). The variant list must not be
/// empty.
SimilarityDecision function_similar(const evm::FunctionBody& target,
                                    const std::vector<evm::FunctionBody>& template_variants,
                                    double threshold = kDefaultThreshold,
                                    size_t n = kDefaultGramLength);

}  // namespace govaudit::similarity
