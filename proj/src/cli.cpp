#include "curate/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curate/balance_metrics.hpp"
#include "curate/balancer.hpp"
#include "curate/classifier.hpp"
#include "curate/corpus.hpp"
#include "curate/error.hpp"
#include "curate/eval.hpp"
#include "curate/eval_io.hpp"
#include "curate/report.hpp"
#include "curate/taxonomy.hpp"
#ifdef CURATE_WITH_ORACLE
#include "curate/oracle.hpp"
#endif

namespace curate {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kOutputDirEnv = "CURATE_OUTPUT_DIR";

struct PipelineConfig {
  fs::path taxonomy_path = default_taxonomy_path();
  double alpha = kDefaultAlpha;
  CountingMode counting = CountingMode::Occurrence;
  VoteScheme scheme = VoteScheme::Strict;
  double threshold = 0.5;
  std::uint64_t seed = 0;
  fs::path output_dir;
  bool strict = false;
  unsigned threads = 0;
};

/// Raw flag values; an option only overrides the config when it was given.
struct Flags {
  std::string config;
  std::string taxonomy;
  double alpha = kDefaultAlpha;
  std::string counting;
  std::string scheme;
  double threshold = 0.5;
  std::uint64_t seed = 0;
  std::string output_dir;
  bool strict = false;
  unsigned threads = 0;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_file(const fs::path& p, const std::string& what) {
  try {
    return json::parse(slurp(p));
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

PipelineConfig resolve_config(const Flags& f, const CLI::App& app) {
  PipelineConfig cfg;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) cfg.output_dir = env;

  if (!f.config.empty()) {
    const json j = parse_json_file(f.config, "config");
    if (!j.is_object()) throw ParseError("config: top level must be an object");
    try {
      if (j.contains("taxonomy")) {
        fs::path p = j["taxonomy"].get<std::string>();
        cfg.taxonomy_path = p.is_relative() ? fs::path(f.config).parent_path() / p : p;
      }
      if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
      if (j.contains("counting")) cfg.counting = parse_counting_mode(j["counting"].get<std::string>());
      if (j.contains("scheme")) cfg.scheme = parse_vote_scheme(j["scheme"].get<std::string>());
      if (j.contains("threshold")) cfg.threshold = j["threshold"].get<double>();
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
      if (j.contains("strict")) cfg.strict = j["strict"].get<bool>();
      if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
    } catch (const json::type_error& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
  }

  auto given = [&](const char* name) {
    const CLI::Option* o = app.get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--taxonomy")) cfg.taxonomy_path = f.taxonomy;
  if (given("--alpha")) cfg.alpha = f.alpha;
  if (given("--counting")) cfg.counting = parse_counting_mode(f.counting);
  if (given("--scheme")) cfg.scheme = parse_vote_scheme(f.scheme);
  if (given("--threshold")) cfg.threshold = f.threshold;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--output-dir")) cfg.output_dir = f.output_dir;
  if (given("--strict")) cfg.strict = f.strict;
  if (given("--threads")) cfg.threads = f.threads;

  if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha)) throw UsageError("alpha must be >= 0");
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) throw UsageError("threshold must lie in [0, 1]");
  return cfg;
}

fs::path resolve_output(const PipelineConfig& cfg, const std::string& flag, const char* default_name) {
  fs::path p = flag.empty() ? fs::path(default_name) : fs::path(flag);
  if (p.is_relative() && !cfg.output_dir.empty()) p = cfg.output_dir / p;
  return p;
}

std::string format4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void warn(const PipelineConfig& cfg, std::ostream& err, const std::string& msg) {
  if (cfg.strict) throw StrictModeError(msg);
  err << "warning: " << msg << "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_classify(const PipelineConfig& cfg, const std::string& in, const std::string& out_flag, std::ostream& out,
                 std::ostream& err) {
  const Taxonomy tax = load_taxonomy(cfg.taxonomy_path);
  for (const auto& w : validate_lexicon(tax)) {
    if (w.kind == WarningKind::SharedTerm) continue;  // multi-label overlap is expected
    warn(cfg, err, w.message);
  }
  const auto prompts = read_prompts(fs::path(in));
  const auto t0 = std::chrono::steady_clock::now();
  const Corpus corpus = classify_corpus(prompts, tax, cfg.threads);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream body;
  write_labeled(body, corpus, tax);
  const fs::path dest = resolve_output(cfg, out_flag, "labeled.jsonl");
  write_atomic(dest, body.str());
  out << "classified " << corpus.size() << " prompts";
  if (secs > 0.0 && !corpus.empty()) out << " (" << static_cast<long long>(corpus.size() / secs) << " prompts/s)";
  out << " -> " << dest.string() << "\n";
  return kExitOk;
}

json base_config(const char* command, const PipelineConfig& cfg) {
  return {{"command", command}, {"strict", cfg.strict}};
}

int cmd_select(const PipelineConfig& cfg, const std::string& in, const std::string& out_flag,
               const std::string& ids_flag, const std::string& corpus_flag, std::ostream& out, std::ostream& err) {
  const Taxonomy tax = load_taxonomy(cfg.taxonomy_path);
  const Corpus corpus = read_labeled(fs::path(in), tax);
  const Partition part = partition_corpus(corpus);
  const SelectionResult sel = select_balanced(part, tax);

  std::size_t shortfalls = 0;
  for (const auto& [s, sub] : sel.per_subset) shortfalls += sub.quota_shortfalls.size();
  if (shortfalls > 0) {
    warn(cfg, err, std::to_string(shortfalls) + " categories hold no prompts and fall short of their quota");
  }

  json doc = provenance(base_config("select", cfg), &tax);
  doc["selection"] = to_json(sel, tax);
  write_atomic(resolve_output(cfg, out_flag, "selection.json"), dump(doc));

  std::string ids;
  for (const auto& id : sel.selected_ids) ids += id + "\n";
  write_atomic(resolve_output(cfg, ids_flag, "selected_ids.txt"), ids);

  if (!corpus_flag.empty()) {
    std::unordered_map<std::string_view, const LabeledPrompt*> by_id;
    for (const auto& p : corpus.items) by_id.emplace(p.id, &p);
    std::string body;
    for (const auto& id : sel.selected_ids) body += labeled_line(*by_id.at(id), tax) + "\n";
    write_atomic(resolve_output(cfg, corpus_flag, "selected.jsonl"), body);
  }

  out << "selected " << sel.selected_ids.size() << " of " << corpus.size() << " prompts\n";
  for (const auto& [s, sub] : sel.per_subset) {
    out << "  " << to_string(s) << ": m=" << sub.m << " categories=" << sub.coverage.size() << "/"
        << enumerate_category_space(s, tax) << " candidates=" << sub.candidates << "\n";
  }
  return kExitOk;
}

std::array<double, kAxisCount> read_cu_values(const json& j, const std::string& where) {
  std::array<double, kAxisCount> cu{};
  if (j.is_array()) {
    if (j.size() != kAxisCount) throw ArityError(where + ": expected 4 CU values, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < kAxisCount; ++i) cu[i] = j[i].get<double>();
    return cu;
  }
  if (!j.is_object()) throw ParseError(where + ": 'cu' must be an array or an object keyed by axis");
  std::array<bool, kAxisCount> seen{};
  for (const auto& [k, v] : j.items()) {
    auto a = parse_axis_name(k);
    if (!a) throw SchemaError(where + ": unknown axis '" + k + "'");
    cu[axis_index(*a)] = v.get<double>();
    seen[axis_index(*a)] = true;
  }
  for (bool s : seen) {
    if (!s) throw ArityError(where + ": all four axes need a CU value");
  }
  return cu;
}

int cmd_score(const PipelineConfig& cfg, const std::string& in, const std::string& cu_file,
              const std::string& out_flag, std::ostream& out, std::ostream& err) {
  json cfg_json = base_config("score", cfg);
  cfg_json["alpha"] = cfg.alpha;
  cfg_json["counting"] = std::string(to_string(cfg.counting));

  if (!cu_file.empty()) {
    const json j = parse_json_file(cu_file, "CU fixture");
    json datasets = json::array();
    std::vector<std::pair<std::string, json>> entries;
    try {
      if (j.contains("datasets")) {
        for (const auto& d : j["datasets"]) entries.emplace_back(d.value("name", std::string{}), d.at("cu"));
      } else {
        entries.emplace_back(j.value("name", std::string{}), j.at("cu"));
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("CU fixture: ") + e.what());
    }
    for (const auto& [name, cu_json] : entries) {
      std::array<double, kAxisCount> cu{};
      try {
        cu = read_cu_values(cu_json, "CU fixture");
      } catch (const json::type_error& e) {
        throw ParseError(std::string("CU fixture: ") + e.what());
      }
      const GlobalBalance g = global_balance(cu);
      json d = to_json(g);
      d["name"] = name;
      d["CU"] = cu;
      datasets.push_back(std::move(d));
      if (!name.empty()) out << name << " ";
      out << "MCU " << format4(g.mcu) << " UCO " << format4(g.uco) << " PGBS " << format4(g.pgbs) << "\n";
    }
    json doc = provenance(cfg_json, nullptr);
    doc["datasets"] = std::move(datasets);
    write_atomic(resolve_output(cfg, out_flag, "balance.json"), dump(doc));
    return kExitOk;
  }

  const Taxonomy tax = load_taxonomy(cfg.taxonomy_path);
  const Corpus corpus = read_labeled(fs::path(in), tax);
  const BalanceReport rep = score_corpus(corpus, tax, cfg.alpha, cfg.counting);
  for (AxisName a : kAllAxes) {
    if (rep.per_axis[axis_index(a)].zero_mass) {
      warn(cfg, err, "axis " + std::string(to_string(a)) + " has no labels; its CU is reported as 0");
    }
  }
  json doc = provenance(cfg_json, &tax);
  doc["balance"] = to_json(rep);
  write_atomic(resolve_output(cfg, out_flag, "balance.json"), dump(doc));
  for (AxisName a : kAllAxes) {
    const auto& b = rep.per_axis[axis_index(a)];
    out << to_string(a) << " RU " << format4(b.ru) << " R " << format4(b.r) << " CU " << format4(b.cu) << "\n";
  }
  out << "MCU " << format4(rep.global.mcu) << " UCO " << format4(rep.global.uco) << " PGBS "
      << format4(rep.global.pgbs) << "\n";
  return kExitOk;
}

int cmd_eval(const PipelineConfig& cfg, const std::string& scores, const std::string& frames,
             const std::string& metric, const std::string& out_flag, const std::string& csv_flag, std::ostream& out,
             std::ostream& err) {
  if (scores.empty() == frames.empty()) throw UsageError("eval needs exactly one of --scores or --frames");
  json cfg_json = base_config("eval", cfg);
  EvalReport rep;
  json videos = nullptr;
  if (!scores.empty()) {
    const auto recs = read_score_log(fs::path(scores));
    if (metric == "auc") {
      rep = evaluate_auc(recs);
    } else if (metric == "acc") {
      rep = evaluate_acc(recs, cfg.threshold);
      cfg_json["threshold"] = cfg.threshold;
    } else {
      throw UsageError("unknown metric '" + metric + "' (expected auc|acc)");
    }
    cfg_json["metric"] = metric;
  } else {
    const auto recs = read_frame_log(fs::path(frames));
    rep = evaluate_frames(recs, cfg.scheme);
    cfg_json["scheme"] = std::string(to_string(cfg.scheme));
    videos = json::array();
    for (const auto& v : aggregate_videos(recs, cfg.scheme)) {
      videos.push_back({{"sample_id", v.sample_id},
                        {"generator", v.generator},
                        {"truth", std::string(to_string(v.truth))},
                        {"verdict", std::string(to_string(v.verdict))}});
    }
  }
  for (const auto& [g, why] : rep.missing) warn(cfg, err, "generator '" + g + "' not scored: " + why);

  json doc = provenance(cfg_json, nullptr);
  doc["report"] = to_json(rep);
  if (!videos.is_null()) doc["videos"] = std::move(videos);
  write_atomic(resolve_output(cfg, out_flag, "eval.json"), dump(doc));
  if (!csv_flag.empty()) write_atomic(resolve_output(cfg, csv_flag, "eval.csv"), eval_csv(rep));

  for (const auto& [g, v] : rep.per_generator) out << g << " " << format4(v) << "\n";
  out << "AVG " << (rep.average ? format4(*rep.average) : std::string("n/a"));
  if (!rep.complete()) out << " (over " << rep.per_generator.size() << " scored generators; "
                           << rep.missing.size() << " missing)";
  out << "\n";
  return kExitOk;
}

int cmd_matrix(const PipelineConfig& cfg, const std::string& manifest, const std::string& out_flag,
               const std::string& json_flag, std::ostream& out, std::ostream& err) {
  const auto cells = read_runs_manifest(manifest);
  const CrossMatrix mx = build_cross_matrix(cells);
  for (const auto& [r, c] : mx.missing) warn(cfg, err, "no run for (" + r + ", " + c + ")");
  write_atomic(resolve_output(cfg, out_flag, "matrix.csv"), matrix_csv(mx));
  if (!json_flag.empty()) {
    json doc = provenance(base_config("matrix", cfg), nullptr);
    doc["matrix"] = to_json(mx);
    write_atomic(resolve_output(cfg, json_flag, "matrix.json"), dump(doc));
  }
  auto name = [](const std::optional<std::size_t>& i, const std::vector<std::string>& v) {
    return i ? v[*i] : std::string("n/a");
  };
  out << mx.rows.size() << "x" << mx.cols.size() << " matrix, " << mx.missing.size() << " missing cells\n";
  out << "optimal train: " << name(mx.optimal_train, mx.rows)
      << ", least favorable train: " << name(mx.least_favorable_train, mx.rows) << "\n";
  out << "best (hardest) test: " << name(mx.best_test, mx.cols)
      << ", worst (easiest) test: " << name(mx.worst_test, mx.cols) << "\n";
  return kExitOk;
}

int cmd_correlate(const PipelineConfig& cfg, const std::string& quality, const std::string& auc_report,
                  const std::string& out_flag, std::ostream& out, std::ostream& err) {
  const QualityTable table = read_quality_csv(fs::path(quality));
  const json rep_json = parse_json_file(auc_report, "eval report");
  const EvalReport rep = eval_report_from_json(rep_json.contains("report") ? rep_json["report"] : rep_json);

  std::vector<std::size_t> rows;
  json unmatched = json::array();
  for (std::size_t i = 0; i < table.models.size(); ++i) {
    if (rep.per_generator.count(table.models[i])) {
      rows.push_back(i);
    } else {
      unmatched.push_back(table.models[i]);
    }
  }
  for (const auto& [g, v] : rep.per_generator) {
    if (std::find(table.models.begin(), table.models.end(), g) == table.models.end()) unmatched.push_back(g);
  }
  if (!unmatched.empty()) warn(cfg, err, std::to_string(unmatched.size()) + " models appear in only one input");

  json fits = json::object();
  std::vector<double> y;
  for (std::size_t i : rows) y.push_back(rep.per_generator.at(table.models[i]));
  for (std::size_t m = 0; m < table.metrics.size(); ++m) {
    std::vector<double> x;
    for (std::size_t i : rows) x.push_back(table.values[i][m]);
    const LinearFit fit = correlate_r2(x, y);
    if (fit.degenerate) warn(cfg, err, "metric '" + table.metrics[m] + "' gives a degenerate fit");
    fits[table.metrics[m]] = to_json(fit);
    out << table.metrics[m] << " r2 " << format4(fit.r2) << " slope " << format4(fit.slope) << "\n";
  }
  json doc = provenance(base_config("correlate", cfg), nullptr);
  doc["fits"] = std::move(fits);
  json matched = json::array();
  for (std::size_t i : rows) matched.push_back(table.models[i]);
  doc["matched_models"] = std::move(matched);
  doc["unmatched_models"] = std::move(unmatched);
  write_atomic(resolve_output(cfg, out_flag, "correlation.json"), dump(doc));
  return kExitOk;
}

#ifdef CURATE_WITH_ORACLE
std::vector<double> parse_number_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      v.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw UsageError("'" + cell + "' is not a number");
    }
  }
  return v;
}

int cmd_oracle(const PipelineConfig& cfg, const std::string& sub, const std::string& in, const std::string& counts,
               std::size_t size, std::size_t trials, const std::string& out_flag, std::ostream& out) {
  json result;
  if (sub == "entropy") {
    const auto c = parse_number_list(counts);
    result = {{"entropy_nats", oracle::naive_entropy(c)}};
  } else if (sub == "auc") {
    std::vector<double> reals, fakes;
    for (const auto& r : read_score_log(fs::path(in))) {
      if (r.score) (r.truth == Truth::Real ? reals : fakes).push_back(*r.score);
    }
    result = {{"auc", oracle::pairwise_auc_oracle(reals, fakes)}};
  } else {
    const Taxonomy tax = load_taxonomy(cfg.taxonomy_path);
    const Corpus corpus = read_labeled(fs::path(in), tax);
    if (sub == "best-subset") {
      std::vector<TaggedPrompt> tagged;
      for (const auto& p : corpus.items) tagged.push_back({p.id, SubsetId::P1, {}, PromptTag::Single, p.labels});
      const auto best = oracle::exhaustive_best_subset(tagged, size, tax, cfg.alpha);
      result = {{"best_ids", best.best_ids}, {"best_pgbs", best.best_pgbs}};
    } else if (sub == "random-pgbs") {
      result = {{"pgbs", oracle::random_subset_pgbs(corpus, size, trials, cfg.seed, tax, cfg.alpha)},
                {"seed", cfg.seed}};
    } else if (sub == "reachable") {
      json per = json::object();
      const auto all = oracle::enumerate_reachable_selections(corpus);
      for (SubsetId s : kAllSubsets) {
        const auto& r = all[subset_index(s)];
        per[std::string(to_string(s))] = {{"prompts", r.prompts},
                                          {"m", r.m},
                                          {"final_states", r.finals.size()},
                                          {"floor_violations", r.floor_violations}};
      }
      result = {{"subsets", per}};
    } else {
      throw UsageError("unknown oracle check '" + sub + "' (entropy|auc|best-subset|random-pgbs|reachable)");
    }
  }
  json cfg_json = base_config("oracle", cfg);
  cfg_json["check"] = sub;
  json doc = provenance(cfg_json, nullptr);
  doc["result"] = result;
  if (!out_flag.empty()) write_atomic(resolve_output(cfg, out_flag, "oracle.json"), dump(doc));
  out << result.dump() << "\n";
  return kExitOk;
}
#endif

void report_error(std::ostream& err, const std::string& code, int exit_code, std::string msg) {
  for (char& c : msg) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  err << "error code=" << code << " exit=" << exit_code << ": " << msg << "\n";
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage:
      return kExitUsage;
    case ErrorKind::Data:
      return kExitData;
    case ErrorKind::Internal:
      break;
  }
  return kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prompt-corpus curation and detector evaluation toolkit", "curate"};
  app.require_subcommand(1);

  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config, "JSON file with pipeline defaults");
    sub->add_option("--output-dir", flags.output_dir, "Directory for relative output paths");
    sub->add_flag("--strict", flags.strict, "Treat warnings as errors");
  };
  auto add_taxonomy = [&](CLI::App* sub) { sub->add_option("--taxonomy", flags.taxonomy, "Taxonomy JSON file"); };

  std::string in, out_path, ids_out, corpus_out, cu_file, scores, frames, metric = "auc", csv_out, manifest,
      json_out, quality, auc_report, oracle_check, counts;
  std::size_t size = 0, trials = 100;

  auto* classify = app.add_subcommand("classify", "Label prompts with taxonomy categories");
  add_common(classify);
  add_taxonomy(classify);
  classify->add_option("--in", in, "Prompt JSON-lines file")->required();
  classify->add_option("--out", out_path, "Labeled JSON-lines output");
  classify->add_option("--threads", flags.threads, "Worker threads (0 = all cores)");

  auto* select = app.add_subcommand("select", "Choose an attribute-balanced subset");
  add_common(select);
  add_taxonomy(select);
  select->add_option("--in", in, "Labeled JSON-lines file")->required();
  select->add_option("--out", out_path, "selection.json output");
  select->add_option("--ids-out", ids_out, "Selected ids, one per line");
  select->add_option("--corpus-out", corpus_out, "Labeled JSON-lines of the selected prompts");

  auto* score = app.add_subcommand("score", "Compute balance metrics");
  add_common(score);
  add_taxonomy(score);
  auto* score_in = score->add_option("--in", in, "Labeled JSON-lines file");
  auto* score_cu = score->add_option("--cu-file", cu_file, "JSON file of per-axis CU values");
  score_in->excludes(score_cu);
  score->add_option("--alpha", flags.alpha, "Completeness penalty exponent (default 2.0)");
  score->add_option("--counting", flags.counting, "occurrence|fractional");
  score->add_option("--out", out_path, "balance.json output");

  auto* eval = app.add_subcommand("eval", "Aggregate detector outputs per generator");
  add_common(eval);
  eval->add_option("--scores", scores, "Score log (JSON lines)");
  eval->add_option("--frames", frames, "Frame verdict log (JSON lines)");
  eval->add_option("--metric", metric, "auc|acc for score logs");
  eval->add_option("--threshold", flags.threshold, "Fake threshold for acc (default 0.5)");
  eval->add_option("--scheme", flags.scheme, "strict|any_fake|majority for frame logs");
  eval->add_option("--out", out_path, "Report JSON");
  eval->add_option("--csv", csv_out, "Report CSV");

  auto* matrix = app.add_subcommand("matrix", "Build a train x test AUC matrix");
  add_common(matrix);
  matrix->add_option("--manifest", manifest, "Runs manifest JSON")->required();
  matrix->add_option("--out", out_path, "Matrix CSV");
  matrix->add_option("--json", json_out, "Matrix JSON with annotations");

  auto* correlate = app.add_subcommand("correlate", "Fit detector AUC against quality metrics");
  add_common(correlate);
  correlate->add_option("--quality", quality, "Quality metric CSV")->required();
  correlate->add_option("--auc", auc_report, "Eval report JSON")->required();
  correlate->add_option("--out", out_path, "Correlation JSON");

#ifdef CURATE_WITH_ORACLE
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force verification checks");
  oracle_cmd->group("");  // hidden
  add_common(oracle_cmd);
  add_taxonomy(oracle_cmd);
  oracle_cmd->add_option("check", oracle_check, "entropy|auc|best-subset|random-pgbs|reachable")->required();
  oracle_cmd->add_option("--in", in, "Input file");
  oracle_cmd->add_option("--counts", counts, "Comma-separated histogram for entropy");
  oracle_cmd->add_option("--size", size, "Subset size");
  oracle_cmd->add_option("--trials", trials, "Number of random subsets");
  oracle_cmd->add_option("--seed", flags.seed, "RNG seed");
  oracle_cmd->add_option("--alpha", flags.alpha, "Completeness penalty exponent");
  oracle_cmd->add_option("--out", out_path, "Result JSON");
#endif

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      report_error(err, "UsageError", kExitUsage, e.what());
      return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const PipelineConfig cfg = resolve_config(flags, *sub);
    const std::string name = sub->get_name();
    if (name == "classify") return cmd_classify(cfg, in, out_path, out, err);
    if (name == "select") return cmd_select(cfg, in, out_path, ids_out, corpus_out, out, err);
    if (name == "score") {
      if (in.empty() && cu_file.empty()) throw UsageError("score needs --in or --cu-file");
      return cmd_score(cfg, in, cu_file, out_path, out, err);
    }
    if (name == "eval") return cmd_eval(cfg, scores, frames, metric, out_path, csv_out, out, err);
    if (name == "matrix") return cmd_matrix(cfg, manifest, out_path, json_out, out, err);
    if (name == "correlate") return cmd_correlate(cfg, quality, auc_report, out_path, out, err);
#ifdef CURATE_WITH_ORACLE
    if (name == "oracle") return cmd_oracle(cfg, oracle_check, in, counts, size, trials, out_path, out);
#endif
    throw UsageError("unknown command '" + name + "'");
  } catch (const Error& e) {
    const int code = exit_for(e.kind());
    report_error(err, e.code(), code, e.what());
    return code;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "ParseError", kExitData, e.what());
    return kExitData;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", kExitInternal, e.what());
    return kExitInternal;
  }
}

}  // namespace curate
