// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lexicon.hpp"

namespace govaudit::proposal {

/// The (action, target object, parameter) tuple extracted from one
/// code-related sentence, with its polarity.
struct DescriptionIntention {
    std::vector<std::string> action;        // root verb plus its direct object
    std::vector<std::string> target_object; // compounds of the action tokens
    std::vector<std::string> parameters;    // remaining NOUN/NUM/PROPN/X tokens
    bool negative = false;
    std::string source_sentence;
};

/// Dependency information the extractor consumes. A full parser can be
/// plugged in by implementing this; the default is the pattern-based
/// provider below.
struct ParsedSentence {
    std::optional<size_t> root;             // index into tokens
    std::optional<size_t> dobj;
    std::vector<size_t> compounds;
    std::vector<size_t> parameter_tokens;
    bool negated = false;
    std::vector<Token> tokens;
    std::string root_lemma;
};

class ParseProvider {
  public:
    virtual ~ParseProvider() = default;
    virtual ParsedSentence parse(const std::string& sentence) = 0;
};

/// Pattern-based stand-in for a dependency parser: the first verb-list
/// token (or synonym) is the root, the nearest following plain noun is
/// its object (falling back to a proper noun), capitalized/ALL-CAPS
/// neighbors of the object are compounds, and the leftover
/// noun/number/proper/code tokens become parameters. Negation keywords
/// before the root flip polarity.
class PatternParseProvider : public ParseProvider {
  public:
    explicit PatternParseProvider(const Lexicon& lexicon) : lexicon_(lexicon) {}
    ParsedSentence parse(const std::string& sentence) override;

  private:
    const Lexicon& lexicon_;
};

/// Empty when the sentence has no verb-list root.
std::vector<DescriptionIntention> extract_intentions(const std::string& sentence,
                                                     ParseProvider& provider);

}  // namespace govaudit::proposal
