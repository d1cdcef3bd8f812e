#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curate/corpus.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

/// Suffix-stripped variants of a lowercase token (-s, -es, -ies, -ed, -ied,
/// -ing, with consonant undoubling and silent-e restoration). Only variants of
/// at least three characters are produced; the raw token is not included.
std::vector<std::string> stem_candidates(std::string_view token);

/// Keyword/phrase matcher compiled from a taxonomy.
///
/// Text is lowercased and split on non-alphanumeric bytes. A keyword fires
/// when it equals a token or one of the token's stem candidates. A phrase
/// fires when its tokens occur contiguously in the raw token stream.
/// Categories flagged `match: none` never fire.
class LexiconMatcher {
 public:
  explicit LexiconMatcher(const Taxonomy& tax);

  LabelVector classify(std::string_view text) const;

 private:
  using AxisMasks = std::array<std::uint32_t, kAxisCount>;
  struct PhraseRule {
    std::vector<std::string> tail;  // tokens after the first
    AxisMasks masks{};
  };

  std::unordered_map<std::string, AxisMasks> keywords_;
  std::unordered_map<std::string, std::vector<PhraseRule>> phrases_;  // keyed by first token
};

LabelVector classify_prompt(std::string_view text, const Taxonomy& tax);

/// Classifies every prompt, preserving order. `threads == 0` uses the hardware
/// concurrency; results do not depend on the thread count.
Corpus classify_corpus(std::span<const Prompt> prompts, const Taxonomy& tax, unsigned threads = 0);

}  // namespace curate
