// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ngram.hpp"

#include <algorithm>

#include "../common/errors.hpp"
#include "../evm/disassembler.hpp"

namespace govaudit::similarity {

NGramProfile ngram_profile(const std::vector<uint8_t>& normalized_opcodes, size_t n) {
    if (n < 1)
        throw UsageError("gram length must be >= 1");
    NGramProfile profile;
    profile.n = n;
    if (normalized_opcodes.size() < n)
        return profile;
    for (size_t i = 0; i + n <= normalized_opcodes.size(); ++i)
        profile.grams.emplace(reinterpret_cast<const char*>(normalized_opcodes.data() + i), n);
    return profile;
}

double jaccard(const NGramProfile& a, const NGramProfile& b) {
    if (a.n != b.n)
        throw UsageError("jaccard over profiles with different gram lengths");
    if (a.empty() && b.empty())
        return 1.0;
    if (a.empty() || b.empty())
        return 0.0;
    size_t intersection = 0;
    for (const auto& gram : a.grams)
        intersection += b.grams.count(gram);
    const size_t unions = a.grams.size() + b.grams.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

namespace {

NGramProfile profile_of_code(ByteView code, size_t n) {
    return ngram_profile(evm::strip_push_arguments(evm::disassemble(code)), n);
}

}  // namespace

SimilarityDecision contracts_similar(ByteView code_a, ByteView code_b, double threshold, size_t n) {
    const double score = jaccard(profile_of_code(code_a, n), profile_of_code(code_b, n));
    return {score, threshold, score >= threshold};
}

SimilarityDecision function_similar(const evm::FunctionBody& target,
                                    const std::vector<evm::FunctionBody>& template_variants,
                                    double threshold, size_t n) {
    if (template_variants.empty())
        throw UsageError("function_similar requires at least one template variant");
    const auto target_profile = ngram_profile(evm::strip_push_arguments(target.instructions), n);
    double best = 0.0;
    for (const auto& variant : template_variants) {
        const auto p = ngram_profile(evm::strip_push_arguments(variant.instructions), n);
        best = std::max(best, jaccard(target_profile, p));
    }
    return {best, threshold, best >= threshold};
}

}  // namespace govaudit::similarity
