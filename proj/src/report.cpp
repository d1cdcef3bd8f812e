#include "curate/report.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "curate/error.hpp"

namespace curate {

using nlohmann::json;

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

std::string config_hash(const json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json provenance(const json& config, const Taxonomy* tax) {
  json p = json::object();
  p["config_hash"] = config_hash(config);
  p["config"] = config;
  p["taxonomy_version"] = tax ? json(tax->version()) : json(nullptr);
  return p;
}

namespace {

json key_json(const CategoryKey& k, const Taxonomy& tax) {
  json arr = json::array();
  for (AxisName a : kAllAxes) {
    const auto p = k.parts[axis_index(a)];
    if (p != CategoryKey::kInactive) arr.push_back(tax.category_name(a, static_cast<CategoryIndex>(p)));
  }
  return arr;
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json opt_name(const std::optional<std::size_t>& i, const std::vector<std::string>& names) {
  return i ? json(names[*i]) : json(nullptr);
}

}  // namespace

json to_json(const SelectionResult& sel, const Taxonomy& tax) {
  json j = json::object();
  j["selected_count"] = sel.selected_ids.size();
  j["selected_ids"] = sel.selected_ids;
  json subsets = json::object();
  for (const auto& [s, sub] : sel.per_subset) {
    json cov = json::array();
    for (const auto& [k, n] : sub.coverage) cov.push_back({{"key", key_json(k, tax)}, {"count", n}});
    json short_ = json::array();
    for (const auto& [k, n] : sub.quota_shortfalls) short_.push_back({{"key", key_json(k, tax)}, {"missing", n}});
    subsets[std::string(to_string(s))] = {{"m", sub.m},
                                          {"candidates", sub.candidates},
                                          {"category_space", enumerate_category_space(s, tax)},
                                          {"coverage", std::move(cov)},
                                          {"quota_shortfalls", std::move(short_)}};
  }
  j["per_subset"] = std::move(subsets);
  j["residual_ids"] = sel.residual_ids;
  return j;
}

json to_json(const GlobalBalance& g) { return {{"MCU", g.mcu}, {"UCO", g.uco}, {"PGBS", g.pgbs}}; }

json to_json(const BalanceReport& rep) {
  json j = json::object();
  j["alpha"] = rep.alpha;
  j["counting"] = std::string(to_string(rep.counting));
  j["prompts"] = rep.prompts;
  j["entropy_unit"] = "nats";
  json axes = json::object();
  for (AxisName a : kAllAxes) {
    const AxisBalance& b = rep.per_axis[axis_index(a)];
    axes[std::string(to_string(a))] = {{"H", b.entropy}, {"RU", b.ru},     {"R", b.r},
                                       {"CU", b.cu},     {"mass", b.mass}, {"zero_mass", b.zero_mass}};
  }
  j["per_axis"] = std::move(axes);
  j["MCU"] = rep.global.mcu;
  j["UCO"] = rep.global.uco;
  j["PGBS"] = rep.global.pgbs;
  return j;
}

json to_json(const EvalReport& rep) {
  json j = json::object();
  j["metric"] = std::string(to_string(rep.metric));
  j["per_generator"] = rep.per_generator;
  j["missing"] = rep.missing;
  j["average"] = opt(rep.average);
  j["complete"] = rep.complete();
  return j;
}

json to_json(const CrossMatrix& mx) {
  json j = json::object();
  j["rows"] = mx.rows;
  j["cols"] = mx.cols;
  json cells = json::array();
  for (const auto& row : mx.cells) {
    json r = json::array();
    for (const auto& c : row) r.push_back(opt(c));
    cells.push_back(std::move(r));
  }
  j["cells"] = std::move(cells);
  json missing = json::array();
  for (const auto& [r, c] : mx.missing) missing.push_back({r, c});
  j["missing"] = std::move(missing);

  json rows = json::array();
  for (std::size_t r = 0; r < mx.rows.size(); ++r) {
    rows.push_back({{"train", mx.rows[r]},
                    {"argmax_test", opt_name(mx.row_argmax[r], mx.cols)},
                    {"argmin_test", opt_name(mx.row_argmin[r], mx.cols)},
                    {"off_diagonal_mean", opt(mx.row_mean[r])}});
  }
  json cols = json::array();
  for (std::size_t k = 0; k < mx.cols.size(); ++k) {
    cols.push_back({{"test", mx.cols[k]},
                    {"argmax_train", opt_name(mx.col_argmax[k], mx.rows)},
                    {"argmin_train", opt_name(mx.col_argmin[k], mx.rows)},
                    {"off_diagonal_mean", opt(mx.col_mean[k])}});
  }
  j["row_annotations"] = std::move(rows);
  j["col_annotations"] = std::move(cols);
  j["summary"] = {{"optimal_train", opt_name(mx.optimal_train, mx.rows)},
                  {"least_favorable_train", opt_name(mx.least_favorable_train, mx.rows)},
                  {"best_test", opt_name(mx.best_test, mx.cols)},
                  {"worst_test", opt_name(mx.worst_test, mx.cols)}};
  return j;
}

json to_json(const LinearFit& fit) {
  return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r2", fit.r2}, {"degenerate", fit.degenerate},
          {"n", fit.n}};
}

EvalReport eval_report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("per_generator") || !j["per_generator"].is_object()) {
    throw ParseError("eval report: missing 'per_generator' object");
  }
  EvalReport rep;
  for (const auto& [g, v] : j["per_generator"].items()) {
    if (!v.is_number()) throw ParseError("eval report: value for '" + g + "' is not a number");
    rep.per_generator[g] = v.get<double>();
  }
  return rep;
}

std::string matrix_csv(const CrossMatrix& mx) {
  std::string out = "train\\test";
  for (const auto& c : mx.cols) out += "," + c;
  out += "\n";
  char buf[32];
  for (std::size_t r = 0; r < mx.rows.size(); ++r) {
    out += mx.rows[r];
    for (const auto& cell : mx.cells[r]) {
      out += ",";
      if (cell) {
        std::snprintf(buf, sizeof buf, "%.6f", *cell);
        out += buf;
      }
    }
    out += "\n";
  }
  return out;
}

std::string eval_csv(const EvalReport& rep) {
  std::string out = "generator," + std::string(to_string(rep.metric)) + "\n";
  char buf[32];
  for (const auto& [g, v] : rep.per_generator) {
    std::snprintf(buf, sizeof buf, "%.6f", v);
    out += g + "," + buf + "\n";
  }
  for (const auto& [g, why] : rep.missing) out += g + ",\n";
  out += "AVG,";
  if (rep.average) {
    std::snprintf(buf, sizeof buf, "%.6f", *rep.average);
    out += buf;
  }
  return out + "\n";
}

}  // namespace curate
