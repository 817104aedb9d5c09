// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "code_action.hpp"
#include "intention.hpp"

namespace govaudit::proposal {

constexpr double kFunctionMatchThreshold = 0.75;

/// Text-pair similarity in [0,1] (embedding services may return
/// cosines; the deterministic default is a token-overlap coefficient).
using TextSimilarity = std::function<double(const std::string&, const std::string&)>;

/// Default offline similarity: case folding, identifier splitting,
/// lexicon synonym expansion, then overlap coefficient
/// |A∩B| / min(|A|,|B|).
TextSimilarity lexical_similarity(const Lexicon& lexicon);

struct FunctionMatch {
    bool mentioned = false;
    double best_score = 0.0;
    std::vector<size_t> matched_intentions;
    bool negative_mentioned = false;  // some matching intention is negated
};

/// Does any intention's action mention this function? Compares the
/// function-name words combined with the target symbol against each
/// intention's action text at the 0.75 threshold. No intentions at all
/// means not mentioned.
FunctionMatch match_function(const CodeAction& action,
                             const std::vector<DescriptionIntention>& intentions,
                             const TextSimilarity& similarity,
                             double threshold = kFunctionMatchThreshold);

struct ParameterMatch {
    bool mentioned = false;
    std::string detail;
};

/// Per-type mention rules: addresses by resolved name or hex form,
/// numbers by raw or decimals-scaled value (thousands separators
/// ignored), bytes by hex or decoded text, strings by substring, lists
/// element-wise (every element must be mentioned).
ParameterMatch match_parameter(const TypedParam& param, const CodeAction& owner,
                               const std::vector<DescriptionIntention>& intentions,
                               chaindata::ChainDataProvider& provider);

}  // namespace govaudit::proposal
