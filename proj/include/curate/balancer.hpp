#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curate/corpus.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

/// Mutually exclusive partitions by which attribute axes a prompt carries.
///   P1: content only        P2: content + temporal attribute
///   P3: content + spatial attribute        P4: all four axes
enum class SubsetId : std::uint8_t { P1 = 0, P2 = 1, P3 = 2, P4 = 3 };

inline constexpr std::array<SubsetId, 4> kAllSubsets = {SubsetId::P1, SubsetId::P2, SubsetId::P3,
                                                        SubsetId::P4};

constexpr std::size_t subset_index(SubsetId s) { return static_cast<std::size_t>(s); }
std::string_view to_string(SubsetId s);

/// Axes whose categories form the CategoryKey of a subset, in axis order.
std::vector<AxisName> active_axes(SubsetId s);

/// One category per active axis. Components of inactive axes hold kInactive.
/// Ordering is lexicographic over axis order, then taxonomy category order.
struct CategoryKey {
  static constexpr std::int16_t kInactive = -1;
  std::array<std::int16_t, kAxisCount> parts{kInactive, kInactive, kInactive, kInactive};

  std::size_t arity() const;
  auto operator<=>(const CategoryKey&) const = default;
};

/// "(People, Actions, Speed)"
std::string format_key(const CategoryKey& k, const Taxonomy& tax);

enum class PromptTag : std::uint8_t { Single, Multi };

struct TaggedPrompt {
  std::string prompt_id;
  SubsetId subset{};
  std::vector<CategoryKey> category_keys;  // sorted, non-empty
  PromptTag tag{};
  LabelVector labels;
};

struct Partition {
  std::array<std::vector<TaggedPrompt>, 4> subsets;
  std::vector<std::string> residual_ids;  // missing a content axis

  const std::vector<TaggedPrompt>& operator[](SubsetId s) const { return subsets[subset_index(s)]; }
  std::vector<TaggedPrompt>& operator[](SubsetId s) { return subsets[subset_index(s)]; }
};

/// Subset for a label vector, or nullopt when either content axis is empty.
std::optional<SubsetId> classify_subset(const LabelVector& labels);

/// Cartesian product of the label sets on the subset's active axes, sorted.
std::vector<CategoryKey> category_keys(const LabelVector& labels, SubsetId subset);

Partition partition_corpus(const Corpus& corpus);

/// Theoretical number of CategoryKeys in a subset (product of axis sizes).
std::size_t enumerate_category_space(SubsetId subset, const Taxonomy& tax);

struct SubsetSelection {
  std::size_t m = 0;  // initial selection base
  std::map<CategoryKey, std::size_t> coverage;          // every non-empty category
  std::map<CategoryKey, std::size_t> quota_shortfalls;  // categories that could not reach m
  std::size_t candidates = 0;
};

struct SelectionResult {
  std::vector<std::string> selected_ids;  // selection order
  std::map<SubsetId, SubsetSelection> per_subset;  // only subsets holding prompts
  std::vector<std::string> residual_ids;  // partition residual, then unselected prompts
};

/// Greedy attribute-balanced selection. Per subset: the base m is the size of
/// the smallest non-empty category, frozen at subset start. Categories are
/// visited smallest-current-pool first (ties by CategoryKey). Each visit fills
/// max(0, m - already covered) from Single prompts, then Multi prompts, each in
/// ascending id order; chosen Multi prompts then leave every other pool.
/// Empty categories of the theoretical space are reported as shortfalls of m.
///
/// Throws EmptyInputError when no subset holds a prompt.
SelectionResult select_balanced(const Partition& partition, const Taxonomy& tax);

}  // namespace curate
