#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "curate/taxonomy.hpp"

namespace curate {

struct Prompt {
  std::string id;
  std::string text;
};

/// Per-axis category sets, stored as bitmasks over taxonomy category order.
class LabelVector {
 public:
  bool contains(AxisName a, CategoryIndex i) const { return (masks_[axis_index(a)] >> i) & 1u; }
  void insert(AxisName a, CategoryIndex i) { masks_[axis_index(a)] |= (1u << i); }
  bool empty(AxisName a) const { return masks_[axis_index(a)] == 0; }
  bool all_empty() const { return (masks_[0] | masks_[1] | masks_[2] | masks_[3]) == 0; }
  std::size_t count(AxisName a) const;
  std::vector<CategoryIndex> indices(AxisName a) const;

  std::uint32_t mask(AxisName a) const { return masks_[axis_index(a)]; }
  void merge(AxisName a, std::uint32_t bits) { masks_[axis_index(a)] |= bits; }

  bool operator==(const LabelVector&) const = default;

 private:
  std::array<std::uint32_t, kAxisCount> masks_{};
};

struct LabeledPrompt {
  std::string id;
  LabelVector labels;

  bool operator==(const LabeledPrompt&) const = default;
};

/// Labeled prompts in input order. Ids are unique (see check_unique_ids).
struct Corpus {
  std::vector<LabeledPrompt> items;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
  bool operator==(const Corpus&) const = default;
};

/// Throws DuplicateIdError naming the first repeated id.
void check_unique_ids(const std::vector<std::string>& ids);
void check_unique_ids(const Corpus& corpus);

/// Builds a LabelVector from category names; throws SchemaError for names that
/// are unknown or sit on a different axis.
LabelVector make_labels(const Taxonomy& tax,
                        const std::array<std::vector<std::string>, kAxisCount>& names);

// JSON-lines IO. Blank lines are skipped; malformed lines raise ParseError
// with the 1-based line number; repeated ids raise DuplicateIdError.
std::vector<Prompt> read_prompts(std::istream& in);
std::vector<Prompt> read_prompts(const std::filesystem::path& path);

/// Reads `{ "id", "labels": { "<axis>": [names] } }` lines. Axes may be omitted
/// (treated as empty).
Corpus read_labeled(std::istream& in, const Taxonomy& tax);
Corpus read_labeled(const std::filesystem::path& path, const Taxonomy& tax);

/// One line per prompt; all four axes always present, names in taxonomy order.
std::string labeled_line(const LabeledPrompt& p, const Taxonomy& tax);
void write_labeled(std::ostream& out, const Corpus& corpus, const Taxonomy& tax);

}  // namespace curate
