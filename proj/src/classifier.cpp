#include "curate/classifier.hpp"

#include <algorithm>
#include <thread>

#include "curate/error.hpp"

namespace curate {

namespace {

constexpr std::size_t kMinStem = 3;

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

void push_unique(std::vector<std::string>& out, std::string s) {
  if (s.size() < kMinStem) return;
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

// base of "-ed"/"-ing": plain, silent-e restored, and undoubled consonant
void push_verb_bases(std::vector<std::string>& out, std::string_view base) {
  push_unique(out, std::string(base));
  push_unique(out, std::string(base) + "e");
  const std::size_t n = base.size();
  if (n >= 2 && base[n - 1] == base[n - 2] && !is_vowel(base[n - 1])) {
    push_unique(out, std::string(base.substr(0, n - 1)));
  }
}

}  // namespace

std::vector<std::string> stem_candidates(std::string_view token) {
  std::vector<std::string> out;
  if (ends_with(token, "ies")) push_unique(out, std::string(token.substr(0, token.size() - 3)) + "y");
  if (ends_with(token, "es")) push_unique(out, std::string(token.substr(0, token.size() - 2)));
  if (ends_with(token, "s") && !ends_with(token, "ss")) {
    push_unique(out, std::string(token.substr(0, token.size() - 1)));
  }
  if (ends_with(token, "ied")) push_unique(out, std::string(token.substr(0, token.size() - 3)) + "y");
  if (ends_with(token, "ed")) push_verb_bases(out, token.substr(0, token.size() - 2));
  if (ends_with(token, "ing")) push_verb_bases(out, token.substr(0, token.size() - 3));
  return out;
}

LexiconMatcher::LexiconMatcher(const Taxonomy& tax) {
  for (const Axis& ax : tax.axes()) {
    for (std::size_t i = 0; i < ax.categories.size(); ++i) {
      const auto idx = static_cast<CategoryIndex>(i);
      const LexiconEntry& e = tax.entry(ax.name, idx);
      if (e.match == MatchMode::None) continue;
      const std::uint32_t bit = 1u << idx;
      for (const auto& k : e.keywords) keywords_[k][axis_index(ax.name)] |= bit;
      for (const auto& p : e.phrases) {
        auto toks = tokenize_normalized(p);
        auto& rules = phrases_[toks.front()];
        std::vector<std::string> tail(toks.begin() + 1, toks.end());
        auto it = std::find_if(rules.begin(), rules.end(), [&](const PhraseRule& r) { return r.tail == tail; });
        if (it == rules.end()) {
          rules.push_back({std::move(tail), {}});
          it = std::prev(rules.end());
        }
        it->masks[axis_index(ax.name)] |= bit;
      }
    }
  }
}

LabelVector LexiconMatcher::classify(std::string_view text) const {
  LabelVector out;
  const auto tokens = tokenize_normalized(text);
  auto apply = [&](const AxisMasks& m) {
    for (AxisName a : kAllAxes) out.merge(a, m[axis_index(a)]);
  };

  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const std::string& tok = tokens[t];
    if (auto it = keywords_.find(tok); it != keywords_.end()) apply(it->second);
    for (const auto& stem : stem_candidates(tok)) {
      if (auto it = keywords_.find(stem); it != keywords_.end()) apply(it->second);
    }
    if (auto it = phrases_.find(tok); it != phrases_.end()) {
      for (const PhraseRule& rule : it->second) {
        if (t + rule.tail.size() >= tokens.size()) continue;
        if (std::equal(rule.tail.begin(), rule.tail.end(), tokens.begin() + static_cast<std::ptrdiff_t>(t + 1))) {
          apply(rule.masks);
        }
      }
    }
  }
  return out;
}

LabelVector classify_prompt(std::string_view text, const Taxonomy& tax) {
  return LexiconMatcher(tax).classify(text);
}

Corpus classify_corpus(std::span<const Prompt> prompts, const Taxonomy& tax, unsigned threads) {
  std::vector<std::string> ids;
  ids.reserve(prompts.size());
  for (const auto& p : prompts) ids.push_back(p.id);
  check_unique_ids(ids);

  const LexiconMatcher matcher(tax);
  Corpus corpus;
  corpus.items.resize(prompts.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, prompts.size())));

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      corpus.items[i].id = prompts[i].id;
      corpus.items[i].labels = matcher.classify(prompts[i].text);
    }
  };

  if (threads <= 1) {
    work(0, prompts.size());
    return corpus;
  }
  const std::size_t chunk = (prompts.size() + threads - 1) / threads;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(prompts.size(), b + chunk);
    if (b >= e) break;
    pool.emplace_back(work, b, e);
  }
  pool.clear();  // joins
  return corpus;
}

}  // namespace curate
