#include "curate/balancer.hpp"

#include <algorithm>
#include <numeric>

#include "curate/error.hpp"

namespace curate {

std::string_view to_string(SubsetId s) {
  constexpr std::array<std::string_view, 4> names = {"P1", "P2", "P3", "P4"};
  return names[subset_index(s)];
}

std::vector<AxisName> active_axes(SubsetId s) {
  switch (s) {
    case SubsetId::P1:
      return {AxisName::SpatialContent, AxisName::TemporalContent};
    case SubsetId::P2:
      return {AxisName::SpatialContent, AxisName::TemporalContent, AxisName::TemporalAttribute};
    case SubsetId::P3:
      return {AxisName::SpatialContent, AxisName::TemporalContent, AxisName::SpatialAttribute};
    case SubsetId::P4:
      break;
  }
  return {kAllAxes.begin(), kAllAxes.end()};
}

std::size_t CategoryKey::arity() const {
  return static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [](auto p) { return p != kInactive; }));
}

std::string format_key(const CategoryKey& k, const Taxonomy& tax) {
  std::string out = "(";
  bool first = true;
  for (AxisName a : kAllAxes) {
    const auto p = k.parts[axis_index(a)];
    if (p == CategoryKey::kInactive) continue;
    if (!first) out += ", ";
    out += tax.category_name(a, static_cast<CategoryIndex>(p));
    first = false;
  }
  return out + ")";
}

std::optional<SubsetId> classify_subset(const LabelVector& labels) {
  if (labels.empty(AxisName::SpatialContent) || labels.empty(AxisName::TemporalContent)) return std::nullopt;
  const bool sa = !labels.empty(AxisName::SpatialAttribute);
  const bool ta = !labels.empty(AxisName::TemporalAttribute);
  if (sa && ta) return SubsetId::P4;
  if (sa) return SubsetId::P3;
  if (ta) return SubsetId::P2;
  return SubsetId::P1;
}

std::vector<CategoryKey> category_keys(const LabelVector& labels, SubsetId subset) {
  std::vector<CategoryKey> keys{CategoryKey{}};
  for (AxisName a : active_axes(subset)) {
    std::vector<CategoryKey> next;
    for (const auto& k : keys) {
      for (CategoryIndex i : labels.indices(a)) {
        CategoryKey e = k;
        e.parts[axis_index(a)] = i;
        next.push_back(e);
      }
    }
    keys = std::move(next);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

Partition partition_corpus(const Corpus& corpus) {
  Partition out;
  for (const auto& p : corpus.items) {
    auto subset = classify_subset(p.labels);
    if (!subset) {
      out.residual_ids.push_back(p.id);
      continue;
    }
    TaggedPrompt t;
    t.prompt_id = p.id;
    t.subset = *subset;
    t.category_keys = category_keys(p.labels, *subset);
    t.tag = t.category_keys.size() == 1 ? PromptTag::Single : PromptTag::Multi;
    t.labels = p.labels;
    out[*subset].push_back(std::move(t));
  }
  return out;
}

std::size_t enumerate_category_space(SubsetId subset, const Taxonomy& tax) {
  std::size_t n = 1;
  for (AxisName a : active_axes(subset)) n *= tax.cardinality(a);
  return n;
}

namespace {

std::vector<CategoryKey> full_category_space(SubsetId subset, const Taxonomy& tax) {
  std::vector<CategoryKey> keys{CategoryKey{}};
  for (AxisName a : active_axes(subset)) {
    std::vector<CategoryKey> next;
    for (const auto& k : keys) {
      for (std::size_t i = 0; i < tax.cardinality(a); ++i) {
        CategoryKey e = k;
        e.parts[axis_index(a)] = static_cast<std::int16_t>(i);
        next.push_back(e);
      }
    }
    keys = std::move(next);
  }
  return keys;
}

struct Category {
  CategoryKey key;
  std::vector<std::size_t> singles;  // prompt indices, ascending id
  std::vector<std::size_t> multis;
  std::size_t pool = 0;     // members not yet selected
  std::size_t covered = 0;  // members selected so far
  bool done = false;
};

SubsetSelection select_subset(SubsetId subset, const std::vector<TaggedPrompt>& prompts, const Taxonomy& tax,
                              std::vector<std::string>& selected_ids, std::vector<bool>& picked) {
  std::vector<std::size_t> by_id(prompts.size());
  std::iota(by_id.begin(), by_id.end(), std::size_t{0});
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return prompts[a].prompt_id < prompts[b].prompt_id; });

  std::map<CategoryKey, std::size_t> slot;
  std::vector<Category> cats;
  for (std::size_t idx : by_id) {
    const TaggedPrompt& p = prompts[idx];
    for (const auto& key : p.category_keys) {
      auto [it, fresh] = slot.emplace(key, cats.size());
      if (fresh) cats.push_back(Category{key, {}, {}, 0, 0, false});
      Category& c = cats[it->second];
      (p.tag == PromptTag::Single ? c.singles : c.multis).push_back(idx);
      ++c.pool;
    }
  }

  SubsetSelection result;
  result.candidates = prompts.size();
  if (cats.empty()) return result;

  const std::size_t m =
      std::min_element(cats.begin(), cats.end(), [](const Category& a, const Category& b) { return a.pool < b.pool; })
          ->pool;
  result.m = m;

  auto take = [&](std::size_t idx) {
    picked[idx] = true;
    selected_ids.push_back(prompts[idx].prompt_id);
    for (const auto& key : prompts[idx].category_keys) {
      Category& c = cats[slot.at(key)];
      ++c.covered;
      --c.pool;
    }
  };

  for (std::size_t round = 0; round < cats.size(); ++round) {
    Category* cur = nullptr;
    for (auto& c : cats) {
      if (c.done) continue;
      if (!cur || c.pool < cur->pool || (c.pool == cur->pool && c.key < cur->key)) cur = &c;
    }
    std::size_t quota = cur->covered >= m ? 0 : m - cur->covered;
    for (const auto* list : {&cur->singles, &cur->multis}) {
      for (std::size_t idx : *list) {
        if (quota == 0) break;
        if (picked[idx]) continue;
        take(idx);
        --quota;
      }
    }
    cur->done = true;
  }

  for (const auto& c : cats) {
    if (c.covered < m) throw InvariantError("category " + format_key(c.key, tax) + " ended below its quota");
    result.coverage.emplace(c.key, c.covered);
  }
  for (const auto& key : full_category_space(subset, tax)) {
    if (!slot.count(key)) result.quota_shortfalls.emplace(key, m);
  }
  return result;
}

}  // namespace

SelectionResult select_balanced(const Partition& partition, const Taxonomy& tax) {
  const bool any = std::any_of(partition.subsets.begin(), partition.subsets.end(),
                               [](const auto& s) { return !s.empty(); });
  if (!any) throw EmptyInputError("no prompt carries both content axes; nothing to select from");

  SelectionResult out;
  out.residual_ids = partition.residual_ids;
  for (SubsetId s : kAllSubsets) {
    const auto& prompts = partition[s];
    if (prompts.empty()) continue;
    std::vector<bool> picked(prompts.size(), false);
    out.per_subset.emplace(s, select_subset(s, prompts, tax, out.selected_ids, picked));
    for (std::size_t i = 0; i < prompts.size(); ++i) {
      if (!picked[i]) out.residual_ids.push_back(prompts[i].prompt_id);
    }
  }
  return out;
}

}  // namespace curate
