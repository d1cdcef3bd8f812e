#include "curate/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curate/error.hpp"

namespace curate {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, kAxisCount> kAxisNames = {
    "SpatialContent", "TemporalContent", "SpatialAttribute", "TemporalAttribute"};

bool is_token_byte(unsigned char c) {
  // Bytes >= 0x80 belong to UTF-8 sequences and are kept inside tokens.
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

const LexiconEntry& empty_entry() {
  static const LexiconEntry e{};
  return e;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (j.is_null()) return {};
  if (!j.is_array()) throw SchemaError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw SchemaError(where + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string_view to_string(AxisName a) { return kAxisNames[axis_index(a)]; }

std::optional<AxisName> parse_axis_name(std::string_view s) {
  std::string squashed;
  for (char c : s) {
    if (is_token_byte(static_cast<unsigned char>(c))) squashed.push_back(ascii_lower(c));
  }
  for (AxisName a : kAllAxes) {
    std::string canon;
    for (char c : to_string(a)) canon.push_back(ascii_lower(c));
    if (canon == squashed) return a;
  }
  return std::nullopt;
}

std::vector<std::string> tokenize_normalized(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (is_token_byte(static_cast<unsigned char>(c))) {
      cur.push_back(ascii_lower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string normalize_term(std::string_view term) {
  std::string out;
  for (const auto& t : tokenize_normalized(term)) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

Taxonomy::Taxonomy(std::string version, std::array<Axis, kAxisCount> axes,
                   std::map<std::string, LexiconEntry> lexicon)
    : version_(std::move(version)), axes_(std::move(axes)) {
  for (AxisName a : kAllAxes) {
    const Axis& ax = axes_[axis_index(a)];
    if (ax.name != a) throw SchemaError("axis slot " + std::string(to_string(a)) + " holds the wrong axis");
    if (ax.categories.size() != expected_cardinality(a)) {
      throw SchemaError("axis " + std::string(to_string(a)) + " has " +
                        std::to_string(ax.categories.size()) + " categories, expected " +
                        std::to_string(expected_cardinality(a)));
    }
    for (std::size_t i = 0; i < ax.categories.size(); ++i) {
      const std::string& name = ax.categories[i];
      if (name.empty()) throw SchemaError("empty category name on axis " + std::string(to_string(a)));
      auto [it, inserted] = by_name_.emplace(name, CategoryRef{a, static_cast<CategoryIndex>(i)});
      if (!inserted) throw SchemaError("duplicate category '" + name + "'");
    }
  }

  for (auto& [name, raw] : lexicon) {
    if (!by_name_.count(name)) throw SchemaError("lexicon entry references unknown category '" + name + "'");
    LexiconEntry norm;
    norm.match = raw.match;
    auto bucket = [&](const std::string& term) {
      std::string t = normalize_term(term);
      if (t.empty()) throw SchemaError("lexicon term '" + term + "' of '" + name + "' has no tokens");
      if (t.find(' ') == std::string::npos) {
        norm.keywords.insert(std::move(t));
      } else {
        norm.phrases.insert(std::move(t));
      }
    };
    for (const auto& k : raw.keywords) bucket(k);
    for (const auto& p : raw.phrases) bucket(p);
    lexicon_.emplace(name, std::move(norm));
  }
}

std::optional<CategoryRef> Taxonomy::find_category(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const LexiconEntry& Taxonomy::entry(AxisName a, CategoryIndex i) const {
  auto it = lexicon_.find(category_name(a, i));
  return it == lexicon_.end() ? empty_entry() : it->second;
}

Taxonomy parse_taxonomy(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("taxonomy: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("taxonomy: top level must be an object");

  std::string version = doc.value("version", std::string{});
  if (!doc.contains("axes") || !doc["axes"].is_array()) throw SchemaError("taxonomy: missing 'axes' array");

  std::array<Axis, kAxisCount> axes{};
  std::array<bool, kAxisCount> seen{};
  for (const auto& ja : doc["axes"]) {
    if (!ja.is_object() || !ja.contains("name") || !ja["name"].is_string()) {
      throw SchemaError("taxonomy: each axis needs a string 'name'");
    }
    auto name = parse_axis_name(ja["name"].get<std::string>());
    if (!name) throw SchemaError("taxonomy: unknown axis '" + ja["name"].get<std::string>() + "'");
    if (seen[axis_index(*name)]) throw SchemaError("taxonomy: axis '" + std::string(to_string(*name)) + "' listed twice");
    seen[axis_index(*name)] = true;
    Axis& ax = axes[axis_index(*name)];
    ax.name = *name;
    ax.categories = string_list(ja.value("categories", json::array()), "axis categories");
  }
  for (AxisName a : kAllAxes) {
    if (!seen[axis_index(a)]) throw SchemaError("taxonomy: axis '" + std::string(to_string(a)) + "' missing");
  }

  std::map<std::string, LexiconEntry> lexicon;
  if (doc.contains("lexicon")) {
    const json& jl = doc["lexicon"];
    if (!jl.is_object()) throw SchemaError("taxonomy: 'lexicon' must be an object");
    for (const auto& [cat, je] : jl.items()) {
      if (!je.is_object()) throw SchemaError("taxonomy: lexicon entry '" + cat + "' must be an object");
      LexiconEntry e;
      for (auto& k : string_list(je.value("keywords", json::array()), cat + ".keywords")) e.keywords.insert(k);
      for (auto& p : string_list(je.value("phrases", json::array()), cat + ".phrases")) e.phrases.insert(p);
      std::string match = je.value("match", std::string("lexicon"));
      if (match == "none") {
        e.match = MatchMode::None;
      } else if (match != "lexicon") {
        throw SchemaError("taxonomy: lexicon entry '" + cat + "' has unknown match mode '" + match + "'");
      }
      lexicon.emplace(cat, std::move(e));
    }
  }
  return Taxonomy(std::move(version), std::move(axes), std::move(lexicon));
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open taxonomy file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_taxonomy(ss.str());
}

std::string write_taxonomy(const Taxonomy& tax) {
  json doc;
  doc["version"] = tax.version();
  doc["axes"] = json::array();
  for (const Axis& ax : tax.axes()) {
    doc["axes"].push_back({{"name", std::string(to_string(ax.name))}, {"categories", ax.categories}});
  }
  json lex = json::object();
  for (const auto& [cat, e] : tax.lexicon()) {
    lex[cat] = {{"keywords", e.keywords},
                {"phrases", e.phrases},
                {"match", e.match == MatchMode::None ? "none" : "lexicon"}};
  }
  doc["lexicon"] = std::move(lex);
  return doc.dump(2) + "\n";
}

std::filesystem::path default_taxonomy_path() {
#ifdef CURATE_DATA_DIR
  return std::filesystem::path(CURATE_DATA_DIR) / "taxonomy.json";
#else
  return std::filesystem::path("data") / "taxonomy.json";
#endif
}

std::vector<LexiconWarning> validate_lexicon(const Taxonomy& tax) {
  std::vector<LexiconWarning> out;

  // term -> categories using it, in taxonomy order
  std::map<std::string, std::vector<std::string>> users;
  for (const Axis& ax : tax.axes()) {
    for (std::size_t i = 0; i < ax.categories.size(); ++i) {
      const std::string& cat = ax.categories[i];
      const LexiconEntry& e = tax.entry(ax.name, static_cast<CategoryIndex>(i));
      if (e.empty() && e.match != MatchMode::None) {
        out.push_back({WarningKind::UnmatchableCategory, "unmatchable category '" + cat + "'"});
      }
      if (e.match == MatchMode::None) continue;
      for (const auto& k : e.keywords) users[k].push_back(cat);
      for (const auto& p : e.phrases) users[p].push_back(cat);

      for (const auto& shorter : e.phrases) {
        for (const auto& longer : e.phrases) {
          if (longer.size() > shorter.size() && longer.compare(0, shorter.size(), shorter) == 0 &&
              longer[shorter.size()] == ' ') {
            out.push_back({WarningKind::PhrasePrefix,
                           "phrase '" + shorter + "' is a prefix of '" + longer + "' in '" + cat + "'"});
          }
        }
      }
    }
  }
  for (const auto& [term, cats] : users) {
    if (cats.size() < 2) continue;
    std::string msg = "'" + term + "' appears in";
    for (std::size_t i = 0; i < cats.size(); ++i) msg += (i ? ", " : " ") + cats[i];
    out.push_back({WarningKind::SharedTerm, std::move(msg)});
  }
  return out;
}

}  // namespace curate
