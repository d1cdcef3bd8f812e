#include "curate/corpus.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "curate/error.hpp"

namespace curate {

using nlohmann::json;

std::size_t LabelVector::count(AxisName a) const {
  return static_cast<std::size_t>(std::popcount(masks_[axis_index(a)]));
}

std::vector<CategoryIndex> LabelVector::indices(AxisName a) const {
  std::vector<CategoryIndex> out;
  std::uint32_t m = masks_[axis_index(a)];
  while (m) {
    out.push_back(static_cast<CategoryIndex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_unique_ids(const std::vector<std::string>& ids) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(ids.size());
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw DuplicateIdError("duplicate prompt id '" + id + "'");
  }
}

void check_unique_ids(const Corpus& corpus) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(corpus.size());
  for (const auto& p : corpus.items) {
    if (!seen.insert(p.id).second) throw DuplicateIdError("duplicate prompt id '" + p.id + "'");
  }
}

LabelVector make_labels(const Taxonomy& tax,
                        const std::array<std::vector<std::string>, kAxisCount>& names) {
  LabelVector lv;
  for (AxisName a : kAllAxes) {
    for (const auto& n : names[axis_index(a)]) {
      auto ref = tax.find_category(n);
      if (!ref) throw SchemaError("unknown category '" + n + "'");
      if (ref->axis != a) {
        throw SchemaError("category '" + n + "' does not belong to axis " + std::string(to_string(a)));
      }
      lv.insert(a, ref->index);
    }
  }
  return lv;
}

namespace {

template <typename Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError("line " + std::to_string(lineno) + ": expected a JSON object");
    fn(j, lineno);
  }
}

std::string required_string(const json& j, const char* key, std::size_t lineno) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ParseError("line " + std::to_string(lineno) + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<Prompt> read_prompts(std::istream& in) {
  std::vector<Prompt> out;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    Prompt p{required_string(j, "id", lineno), required_string(j, "text", lineno)};
    if (p.id.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty id");
    out.push_back(std::move(p));
  });
  std::vector<std::string> ids;
  ids.reserve(out.size());
  for (const auto& p : out) ids.push_back(p.id);
  check_unique_ids(ids);
  return out;
}

std::vector<Prompt> read_prompts(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_prompts(in);
}

Corpus read_labeled(std::istream& in, const Taxonomy& tax) {
  Corpus corpus;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    LabeledPrompt p;
    p.id = required_string(j, "id", lineno);
    if (p.id.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty id");
    auto it = j.find("labels");
    if (it == j.end() || !it->is_object()) {
      throw ParseError("line " + std::to_string(lineno) + ": missing object field 'labels'");
    }
    std::array<std::vector<std::string>, kAxisCount> names;
    for (const auto& [axis_key, arr] : it->items()) {
      auto axis = parse_axis_name(axis_key);
      if (!axis) throw SchemaError("line " + std::to_string(lineno) + ": unknown axis '" + axis_key + "'");
      if (!arr.is_array()) throw ParseError("line " + std::to_string(lineno) + ": labels must be arrays");
      for (const auto& v : arr) {
        if (!v.is_string()) throw ParseError("line " + std::to_string(lineno) + ": label names must be strings");
        names[axis_index(*axis)].push_back(v.get<std::string>());
      }
    }
    try {
      p.labels = make_labels(tax, names);
    } catch (const SchemaError& e) {
      throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
    }
    corpus.items.push_back(std::move(p));
  });
  check_unique_ids(corpus);
  return corpus;
}

Corpus read_labeled(const std::filesystem::path& path, const Taxonomy& tax) {
  auto in = open_input(path);
  return read_labeled(in, tax);
}

std::string labeled_line(const LabeledPrompt& p, const Taxonomy& tax) {
  json labels = json::object();
  for (AxisName a : kAllAxes) {
    json arr = json::array();
    for (CategoryIndex i : p.labels.indices(a)) arr.push_back(tax.category_name(a, i));
    labels[std::string(to_string(a))] = std::move(arr);
  }
  json j = json::object();
  j["id"] = p.id;
  j["labels"] = std::move(labels);
  return j.dump();
}

void write_labeled(std::ostream& out, const Corpus& corpus, const Taxonomy& tax) {
  for (const auto& p : corpus.items) out << labeled_line(p, tax) << '\n';
}

}  // namespace curate
