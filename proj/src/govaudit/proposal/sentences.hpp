// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lexicon.hpp"

namespace govaudit::proposal {

/// Sentence splitter over markdown-ish proposal text. Links and code
/// fences are reduced to their visible text first; terminal punctuation
/// splits only when it is not a decimal point, an ellipsis, part of a
/// hex run, or a known abbreviation.
std::vector<std::string> split_sentences(const std::string& description);

/// Strips markdown links/images to their label and drops fence and
/// inline-code backticks. Exposed for tests.
std::string strip_markdown(const std::string& text);

/// Pluggable code-related classifier; the default heuristic lives in
/// classify_code_related.
using SentenceClassifier = std::function<bool(const std::string& sentence)>;

/// True when the sentence plausibly describes a proposal call: an
/// action verb (or a synonym) plus at least one code signal — a hex
/// address, a numeric literal, a call-shaped identifier, an ALL-CAPS
/// ticker, or a known token symbol.
bool classify_code_related(const std::string& sentence, const Lexicon& lexicon);

/// Adapter using a custom classifier when one is supplied.
bool classify_code_related(const std::string& sentence, const Lexicon& lexicon,
                           const SentenceClassifier& custom);

}  // namespace govaudit::proposal
