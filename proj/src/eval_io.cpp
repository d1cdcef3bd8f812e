#include "curate/eval_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "curate/error.hpp"

namespace curate {

using nlohmann::json;

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

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
      throw ParseError(at_line(lineno) + e.what());
    }
    if (!j.is_object()) throw ParseError(at_line(lineno) + "expected a JSON object");
    fn(j, lineno);
  }
}

std::string str_field(const json& j, const char* key, std::size_t lineno, bool required = true) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    if (required) throw ParseError(at_line(lineno) + "missing field '" + key + "'");
    return {};
  }
  if (!it->is_string()) throw ParseError(at_line(lineno) + "field '" + key + "' must be a string");
  return it->get<std::string>();
}

Truth parse_truth(const std::string& s, std::size_t lineno) {
  if (s == "real") return Truth::Real;
  if (s == "fake") return Truth::Fake;
  throw ParseError(at_line(lineno) + "truth must be \"real\" or \"fake\", got \"" + s + "\"");
}

}  // namespace

std::vector<PredictionRecord> read_score_log(std::istream& in) {
  std::vector<PredictionRecord> out;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    PredictionRecord r;
    r.sample_id = str_field(j, "sample_id", lineno);
    r.generator = str_field(j, "generator", lineno, false);
    r.truth = parse_truth(str_field(j, "truth", lineno), lineno);
    if (auto it = j.find("score"); it != j.end() && !it->is_null()) {
      if (!it->is_number()) throw ParseError(at_line(lineno) + "score must be a number");
      const double s = it->get<double>();
      if (!std::isfinite(s)) throw ParseError(at_line(lineno) + "score must be finite");
      r.score = s;
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<PredictionRecord> read_score_log(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_score_log(in);
}

std::vector<FrameVerdictRecord> read_frame_log(std::istream& in) {
  std::vector<FrameVerdictRecord> out;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    FrameVerdictRecord f;
    f.sample_id = str_field(j, "sample_id", lineno);
    f.generator = str_field(j, "generator", lineno, false);
    f.truth = parse_truth(str_field(j, "truth", lineno), lineno);
    auto it = j.find("frame");
    if (it == j.end() || !it->is_number_integer() || it->get<long long>() < 0) {
      throw ParseError(at_line(lineno) + "frame must be a non-negative integer");
    }
    f.frame_index = it->get<std::uint32_t>();
    const std::string v = str_field(j, "verdict", lineno);
    if (v == "real") {
      f.verdict = Verdict::Real;
    } else if (v == "fake") {
      f.verdict = Verdict::Fake;
    } else if (v == "no_answer") {
      f.verdict = Verdict::NoAnswer;
    } else {
      throw ParseError(at_line(lineno) + "verdict must be real|fake|no_answer, got \"" + v + "\"");
    }
    out.push_back(std::move(f));
  });
  return out;
}

std::vector<FrameVerdictRecord> read_frame_log(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_frame_log(in);
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  for (auto& c : cells) {
    const auto b = c.find_first_not_of(" \t");
    const auto e = c.find_last_not_of(" \t");
    c = b == std::string::npos ? std::string{} : c.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

QualityTable read_quality_csv(std::istream& in) {
  QualityTable t;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv_row(line);
    if (header) {
      if (cells.empty() || cells.front() != "model") throw ParseError(at_line(lineno) + "first column must be 'model'");
      t.metrics.assign(cells.begin() + 1, cells.end());
      if (t.metrics.empty()) throw ParseError(at_line(lineno) + "no metric columns");
      header = false;
      continue;
    }
    if (cells.size() != t.metrics.size() + 1) {
      throw ParseError(at_line(lineno) + "expected " + std::to_string(t.metrics.size() + 1) + " cells");
    }
    if (!seen.insert(cells.front()).second) throw DuplicateIdError(at_line(lineno) + "duplicate model '" + cells.front() + "'");
    std::vector<double> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cells[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cells[i].size() || !std::isfinite(v)) {
        throw ParseError(at_line(lineno) + "'" + cells[i] + "' is not a number");
      }
      row.push_back(v);
    }
    t.models.push_back(cells.front());
    t.values.push_back(std::move(row));
  }
  if (header) throw ParseError("quality table: missing header");
  return t;
}

QualityTable read_quality_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_quality_csv(in);
}

std::vector<CrossCell> read_runs_manifest(const std::filesystem::path& path) {
  auto in = open_input(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("runs manifest: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw ParseError("runs manifest: expected { \"runs\": [...] }");
  }
  const auto base = path.parent_path();
  std::vector<CrossCell> cells;
  std::size_t i = 0;
  for (const auto& r : doc["runs"]) {
    const std::string where = "runs[" + std::to_string(i++) + "]: ";
    if (!r.is_object() || !r.contains("train") || !r.contains("test") || !r["train"].is_string() ||
        !r["test"].is_string()) {
      throw ParseError(where + "needs string 'train' and 'test'");
    }
    CrossCell c{r["train"].get<std::string>(), r["test"].get<std::string>(), 0.0};
    if (r.contains("auc")) {
      if (!r["auc"].is_number()) throw ParseError(where + "'auc' must be a number");
      c.auc = r["auc"].get<double>();
    } else if (r.contains("scores") && r["scores"].is_string()) {
      std::filesystem::path p = r["scores"].get<std::string>();
      if (p.is_relative()) p = base / p;
      c.auc = auc(read_score_log(p));
    } else {
      throw ParseError(where + "needs 'scores' (path) or 'auc' (number)");
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

}  // namespace curate
