#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace curate {

/// The four classification axes. Enum order is the canonical axis order
/// used for CategoryKey tuples and all serialized output.
enum class AxisName : std::uint8_t {
  SpatialContent = 0,
  TemporalContent = 1,
  SpatialAttribute = 2,
  TemporalAttribute = 3,
};

inline constexpr std::size_t kAxisCount = 4;
inline constexpr std::array<AxisName, kAxisCount> kAllAxes = {
    AxisName::SpatialContent, AxisName::TemporalContent,
    AxisName::SpatialAttribute, AxisName::TemporalAttribute};

constexpr std::size_t axis_index(AxisName a) { return static_cast<std::size_t>(a); }

/// Required number of categories per axis (9 / 4 / 3 / 3).
constexpr std::size_t expected_cardinality(AxisName a) {
  constexpr std::array<std::size_t, kAxisCount> sizes = {9, 4, 3, 3};
  return sizes[axis_index(a)];
}

std::string_view to_string(AxisName a);

/// Accepts "SpatialContent", "spatial_content", "Spatial Content", ...
std::optional<AxisName> parse_axis_name(std::string_view s);

/// Index of a category inside its axis (taxonomy file order).
using CategoryIndex = std::uint8_t;

struct Axis {
  AxisName name{};
  std::vector<std::string> categories;

  bool operator==(const Axis&) const = default;
};

enum class MatchMode { Lexicon, None };

struct LexiconEntry {
  std::set<std::string> keywords;  // single normalized tokens
  std::set<std::string> phrases;   // space-joined normalized token runs
  MatchMode match = MatchMode::Lexicon;

  bool empty() const { return keywords.empty() && phrases.empty(); }
  bool operator==(const LexiconEntry&) const = default;
};

struct CategoryRef {
  AxisName axis{};
  CategoryIndex index = 0;

  auto operator<=>(const CategoryRef&) const = default;
};

/// Immutable after construction; safe to share across threads.
class Taxonomy {
 public:
  /// Validates every structural invariant; throws SchemaError on violation.
  /// Lexicon terms are normalized and bucketed (one token -> keyword,
  /// several -> phrase) regardless of which list they arrived in.
  Taxonomy(std::string version, std::array<Axis, kAxisCount> axes,
           std::map<std::string, LexiconEntry> lexicon);

  const std::string& version() const { return version_; }
  const Axis& axis(AxisName a) const { return axes_[axis_index(a)]; }
  const std::array<Axis, kAxisCount>& axes() const { return axes_; }
  std::size_t cardinality(AxisName a) const { return axis(a).categories.size(); }

  const std::string& category_name(AxisName a, CategoryIndex i) const {
    return axis(a).categories.at(i);
  }
  std::optional<CategoryRef> find_category(std::string_view name) const;

  /// Entry for a category; categories absent from the file get an empty entry.
  const LexiconEntry& entry(AxisName a, CategoryIndex i) const;
  const std::map<std::string, LexiconEntry>& lexicon() const { return lexicon_; }

  bool operator==(const Taxonomy& o) const {
    return version_ == o.version_ && axes_ == o.axes_ && lexicon_ == o.lexicon_;
  }

 private:
  std::string version_;
  std::array<Axis, kAxisCount> axes_;
  std::map<std::string, LexiconEntry> lexicon_;
  std::map<std::string, CategoryRef, std::less<>> by_name_;
};

/// Lowercases ASCII and splits on every non-alphanumeric byte.
std::vector<std::string> tokenize_normalized(std::string_view text);

/// Normalized form of a lexicon term: tokens joined with single spaces.
std::string normalize_term(std::string_view term);

Taxonomy parse_taxonomy(std::string_view json_text);
Taxonomy load_taxonomy(const std::filesystem::path& path);
std::string write_taxonomy(const Taxonomy& tax);

/// Path of the taxonomy asset shipped with the build.
std::filesystem::path default_taxonomy_path();

enum class WarningKind { UnmatchableCategory, SharedTerm, PhrasePrefix };

struct LexiconWarning {
  WarningKind kind{};
  std::string message;
};

/// Diagnostic only; never throws.
std::vector<LexiconWarning> validate_lexicon(const Taxonomy& tax);

}  // namespace curate
