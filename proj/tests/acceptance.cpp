// Acceptance suite: one PASS/FAIL line per criterion.
//   curate_acceptance            run everything
//   curate_acceptance --only N   run criterion N

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curate/balance_metrics.hpp"
#include "curate/balancer.hpp"
#include "curate/classifier.hpp"
#include "curate/corpus.hpp"
#include "curate/error.hpp"
#include "curate/eval.hpp"
#include "curate/eval_io.hpp"
#include "curate/oracle.hpp"
#include "curate/report.hpp"
#include "curate/taxonomy.hpp"

using namespace curate;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++total_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0, total_ = 0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const Taxonomy& tax() {
  static const Taxonomy t = load_taxonomy(default_taxonomy_path());
  return t;
}

// ---------------------------------------------------------------------------
// 1. Published CU vectors -> global metrics

Outcome published_balance() {
  const auto t0 = Clock::now();
  std::ifstream in(fs::path(CURATE_DATA_DIR) / "fixtures" / "published_cu.json");
  const json doc = json::parse(in);
  Checker c;
  double worst = 0.0;
  for (const auto& d : doc["datasets"]) {
    std::array<double, kAxisCount> cu{};
    for (AxisName a : kAllAxes) cu[axis_index(a)] = d["cu"][std::string(to_string(a))].get<double>();
    const GlobalBalance g = global_balance(cu);
    const std::string name = d["name"];
    const auto& pub = d["published"];
    for (const auto& [key, got] : {std::pair{"MCU", g.mcu}, std::pair{"UCO", g.uco}, std::pair{"PGBS", g.pgbs}}) {
      const double err = std::abs(got - pub[key].get<double>());
      worst = std::max(worst, err);
      c.expect(err <= 5e-4, name + " " + key + " off by " + fmt("%.2e", err));
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "took " + fmt("%.3f", secs) + " s");
  return {c.ok(), "max |diff| " + fmt("%.2e", worst) + ", " + fmt("%.4f", secs) + " s, " + c.summary()};
}

// 2. Algebraic identities of the global metrics

Outcome global_identities() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Checker c;
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    std::array<double, 4> cu{};
    for (double& x : cu) x = i % 10 == 0 ? std::round(u(rng) * 4) / 4 : u(rng);
    const GlobalBalance g = global_balance(cu);
    long double mean = 0;
    for (double x : cu) mean += x;
    mean /= 4;
    long double var = 0;
    for (double x : cu) var += (x - mean) * (x - mean);
    var /= 4;
    const double e1 = std::abs(g.pgbs - g.mcu * (1.0 - g.uco));
    const double e2 = std::abs(g.mcu - static_cast<double>(mean));
    const double e3 = std::abs(g.uco - static_cast<double>(var));
    worst = std::max({worst, e1, e2, e3});
    c.expect(e1 <= 1e-12 && e2 <= 1e-12 && e3 <= 1e-12, "vector " + std::to_string(i));
  }
  return {c.ok(), "10000 vectors, max err " + fmt("%.2e", worst)};
}

// 3. Entropy-metric properties

AxisDistribution make_dist(std::vector<double> counts) {
  AxisDistribution d;
  d.n_theoretical = counts.size();
  d.counts = std::move(counts);
  return d;
}

Outcome entropy_properties() {
  std::mt19937_64 rng(3);
  Checker c;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng() % 11;
    std::vector<double> counts(n);
    for (double& x : counts) x = static_cast<double>(rng() % 6);
    if (std::accumulate(counts.begin(), counts.end(), 0.0) == 0.0) counts[rng() % n] = 1.0;
    const auto d = make_dist(counts);
    const std::string tag = "dist " + std::to_string(i);

    // matches the oracle entropy
    c.expect(std::abs(entropy_nats(d.counts) - oracle::naive_entropy(d.counts)) <= 1e-12, tag + " entropy");

    const double ru = relative_uniformity(d);
    c.expect(ru >= 0.0 && ru <= 1.0, tag + " RU range");

    std::vector<double> uniform(n, 1.0 + static_cast<double>(rng() % 5));
    c.expect(std::abs(relative_uniformity(make_dist(uniform)) - 1.0) <= 1e-12, tag + " uniform");

    std::vector<double> degenerate(n, 0.0);
    degenerate[rng() % n] = 3.0;
    c.expect(relative_uniformity(make_dist(degenerate)) == 0.0, tag + " degenerate");

    std::vector<double> scaled = counts;
    const double k = 1.0 + static_cast<double>(rng() % 50);
    for (double& x : scaled) x *= k;
    c.expect(std::abs(relative_uniformity(make_dist(scaled)) - ru) <= 1e-12, tag + " scale");

    std::vector<double> perm = counts;
    std::shuffle(perm.begin(), perm.end(), rng);
    c.expect(std::abs(relative_uniformity(make_dist(perm)) - ru) <= 1e-12, tag + " permutation");

    double prev = complete_uniformity(d, 0.0);
    c.expect(std::abs(prev - ru) <= 1e-15, tag + " alpha 0");
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 5.0}) {
      const double cu = complete_uniformity(d, alpha);
      c.expect(cu <= prev + 1e-15, tag + " alpha monotone");
      prev = cu;
    }
  }
  return {c.ok(), "1000 distributions, " + c.summary()};
}

// 4. Selection correctness on the fixture cases

// Independent restatement of the partition rules.
std::optional<std::size_t> subset_of(const LabelVector& lv) {
  if (lv.empty(AxisName::SpatialContent) || lv.empty(AxisName::TemporalContent)) return std::nullopt;
  const bool sa = !lv.empty(AxisName::SpatialAttribute), ta = !lv.empty(AxisName::TemporalAttribute);
  return sa && ta ? 3 : sa ? 2 : ta ? 1 : 0;
}

using Key = std::vector<int>;

std::vector<Key> keys_of(const LabelVector& lv, std::size_t subset) {
  static const std::vector<std::vector<AxisName>> axes = {
      {AxisName::SpatialContent, AxisName::TemporalContent},
      {AxisName::SpatialContent, AxisName::TemporalContent, AxisName::TemporalAttribute},
      {AxisName::SpatialContent, AxisName::TemporalContent, AxisName::SpatialAttribute},
      {AxisName::SpatialContent, AxisName::TemporalContent, AxisName::SpatialAttribute, AxisName::TemporalAttribute}};
  std::vector<Key> out{{}};
  for (AxisName a : axes[subset]) {
    std::vector<Key> next;
    for (const auto& k : out) {
      for (int i = 0; i < 32; ++i) {
        if (lv.mask(a) >> i & 1u) {
          Key e = k;
          e.push_back(i);
          next.push_back(e);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

Outcome selection_correctness() {
  std::ifstream in(fs::path(CURATE_TEST_DATA_DIR) / "selection_cases.json");
  const json doc = json::parse(in);
  Checker c;
  std::size_t states = 0;
  for (const auto& cs : doc["cases"]) {
    const std::string name = cs["name"];
    Corpus corpus;
    for (const auto& p : cs["prompts"]) {
      std::array<std::vector<std::string>, kAxisCount> names;
      for (AxisName a : kAllAxes) names[axis_index(a)] = p["labels"][std::string(to_string(a))];
      corpus.items.push_back({p["id"], make_labels(tax(), names)});
    }

    const SelectionResult sel = select_balanced(partition_corpus(corpus), tax());
    const std::string first = to_json(sel, tax()).dump();
    c.expect(to_json(select_balanced(partition_corpus(corpus), tax()), tax()).dump() == first,
             name + ": rerun differs");

    std::map<std::string, const LabeledPrompt*> by_id;
    for (const auto& p : corpus.items) by_id[p.id] = &p;
    std::set<std::string> selected(sel.selected_ids.begin(), sel.selected_ids.end());
    c.expect(selected.size() == sel.selected_ids.size(), name + ": duplicate selection");

    const auto reach = oracle::enumerate_reachable_selections(corpus);
    for (std::size_t s = 0; s < 4; ++s) {
      std::map<Key, std::size_t> available, covered;
      std::vector<std::string> chosen;
      for (const auto& p : corpus.items) {
        if (subset_of(p.labels) != s) continue;
        const bool on = selected.count(p.id) > 0;
        if (on) chosen.push_back(p.id);
        for (const auto& k : keys_of(p.labels, s)) {
          ++available[k];
          if (on) ++covered[k];
        }
      }
      if (available.empty()) {
        c.expect(!sel.per_subset.count(static_cast<SubsetId>(s)), name + ": phantom subset");
        continue;
      }
      std::size_t m = SIZE_MAX;
      for (const auto& [k, n] : available) m = std::min(m, n);
      const auto& sub = sel.per_subset.at(static_cast<SubsetId>(s));
      c.expect(sub.m == m, name + ": m");
      c.expect(reach[s].m == m, name + ": oracle m");
      for (const auto& [k, n] : available) {
        c.expect(covered[k] >= std::min(m, n), name + ": floor");
      }
      // reported coverage only counts prompts of this subset
      c.expect(sub.coverage.size() == available.size(), name + ": coverage keys");
      std::size_t total_cov = 0, total_rep = 0;
      for (const auto& [k, n] : covered) total_cov += n;
      for (const auto& [k, n] : sub.coverage) total_rep += n;
      c.expect(total_cov == total_rep, name + ": coverage isolation");

      std::sort(chosen.begin(), chosen.end());
      c.expect(reach[s].finals.count(chosen) == 1, name + ": greedy result not reachable");
      c.expect(reach[s].floor_violations == 0, name + ": reachable state violates floor");
      states += reach[s].finals.size();
    }
    for (const auto& id : sel.selected_ids) c.expect(subset_of(by_id.at(id)->labels).has_value(), name + ": residual selected");
  }
  return {c.ok(), std::to_string(doc["cases"].size()) + " cases, " + std::to_string(states) +
                      " reachable final states, " + c.summary()};
}

// 5. Statistical balance improvement

LabelVector skewed_full_labels(std::mt19937_64& rng, const std::array<double, kAxisCount>& skew) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LabelVector lv;
  for (AxisName a : kAllAxes) {
    const std::size_t n = tax().cardinality(a);
    const int k = u(rng) < 0.3 ? 2 : 1;
    for (int j = 0; j < k; ++j) {
      const double x = std::pow(u(rng), skew[axis_index(a)]);
      lv.insert(a, static_cast<CategoryIndex>(std::min(n - 1, static_cast<std::size_t>(x * static_cast<double>(n)))));
    }
  }
  return lv;
}

Outcome statistical_balance() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  std::size_t beat_median = 0, beat_full = 0;
  constexpr std::size_t kCorpora = 200;
  double gain = 0.0;
  for (std::size_t i = 0; i < kCorpora; ++i) {
    const std::size_t n = 200 + rng() % 1801;
    std::array<double, kAxisCount> skew{};
    for (double& s : skew) s = 1.0 + static_cast<double>(rng() % 300) / 100.0;
    Corpus corpus;
    for (std::size_t k = 0; k < n; ++k) {
      char id[16];
      std::snprintf(id, sizeof id, "p%05zu", k);
      corpus.items.push_back({id, skewed_full_labels(rng, skew)});
    }
    const SelectionResult sel = select_balanced(partition_corpus(corpus), tax());
    std::set<std::string> chosen(sel.selected_ids.begin(), sel.selected_ids.end());
    Corpus sub;
    for (const auto& p : corpus.items) {
      if (chosen.count(p.id)) sub.items.push_back(p);
    }
    const double greedy = score_corpus(sub, tax()).global.pgbs;
    const double full = score_corpus(corpus, tax()).global.pgbs;
    auto rand = oracle::random_subset_pgbs(corpus, sub.size(), 100, 1000 + i, tax(), kDefaultAlpha);
    std::sort(rand.begin(), rand.end());
    const double median = 0.5 * (rand[49] + rand[50]);
    beat_median += greedy >= median;
    beat_full += greedy >= full;
    gain += greedy - full;
  }
  const double secs = seconds_since(t0);
  const double r_med = static_cast<double>(beat_median) / kCorpora;
  const double r_full = static_cast<double>(beat_full) / kCorpora;
  const bool ok = r_med >= 0.95 && r_full >= 0.90 && secs < 120.0;
  return {ok, ">= random median in " + fmt("%.1f%%", 100 * r_med) + ", >= full corpus in " +
                  fmt("%.1f%%", 100 * r_full) + ", mean PGBS gain " + fmt("%+.4f", gain / kCorpora) + ", " +
                  fmt("%.1f", secs) + " s"};
}

// 6. AUC against the pairwise oracle

Outcome auc_equivalence() {
  std::mt19937_64 rng(6);
  Checker c;
  std::size_t with_ties = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t nr = 1 + rng() % 40, nf = 1 + rng() % 40;
    const int levels = 2 + static_cast<int>(rng() % 20);  // coarse grid forces duplicates
    std::vector<double> r(nr), f(nf);
    for (double& x : r) x = static_cast<double>(rng() % levels) / levels;
    for (double& x : f) x = static_cast<double>(rng() % levels) / levels;
    if (i % 3 == 0) f[0] = r[0];
    std::set<double> distinct(r.begin(), r.end());
    distinct.insert(f.begin(), f.end());
    with_ties += distinct.size() < nr + nf;
    c.expect(auc(r, f) == oracle::pairwise_auc_oracle(r, f), "instance " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t nr = 2 + rng() % 30, nf = 2 + rng() % 30;
    std::vector<double> r(nr), f(nf);
    for (double& x : r) x = static_cast<double>(rng() % 25) / 25.0;
    for (double& x : f) x = static_cast<double>(rng() % 25) / 25.0;
    const double base = auc(r, f);
    auto g = [](double x) { return std::exp(3.0 * x) + x * x * x - 7.0; };
    std::vector<double> rt, ft;
    for (double x : r) rt.push_back(g(x));
    for (double x : f) ft.push_back(g(x));
    c.expect(auc(rt, ft) == base, "transform " + std::to_string(i));
  }
  return {c.ok(), "1000 instances (" + std::to_string(with_ties) + " with ties) + 100 transforms, " + c.summary()};
}

// 7. Vote-scheme goldens

Outcome vote_goldens() {
  Checker c;
  const auto frames = read_frame_log(fs::path(CURATE_DATA_DIR) / "fixtures" / "frames_disagreement.jsonl");
  c.expect(aggregate_frames(frames, VoteScheme::Strict) == Verdict::Real, "strict");
  c.expect(aggregate_frames(frames, VoteScheme::AnyFake) == Verdict::Fake, "any_fake");
  c.expect(aggregate_frames(frames, VoteScheme::Majority) == Verdict::Fake, "majority");

  // one correct video, one abstention
  std::vector<FrameVerdictRecord> log = {{"v1", "G", Truth::Fake, 0, Verdict::Fake},
                                         {"v1", "G", Truth::Fake, 1, Verdict::Fake},
                                         {"v2", "G", Truth::Real, 0, Verdict::NoAnswer}};
  for (VoteScheme s : {VoteScheme::Strict, VoteScheme::AnyFake, VoteScheme::Majority}) {
    const auto rep = evaluate_frames(log, s);
    c.expect(rep.per_generator.count("G") && rep.per_generator.at("G") == 0.75,
             "NoAnswer credit under " + std::string(to_string(s)));
  }
  return {c.ok(), "strict=Real any_fake=Fake majority=Fake, NoAnswer ACC 0.75, " + c.summary()};
}

// 8. R^2 against naive OLS

Outcome r2_equivalence() {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> z(0.0, 1.0);
  Checker c;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + rng() % 40;
    const double slope = z(rng) * 2, icpt = z(rng) * 5, noise = std::abs(z(rng));
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = 50.0 + 10.0 * z(rng);
      y[k] = slope * x[k] + icpt + noise * z(rng);
    }
    const LinearFit fit = correlate_r2(x, y);
    const oracle::OlsFit ref = oracle::naive_ols(x, y);
    const double e = std::max({std::abs(fit.r2 - ref.r2), std::abs(fit.slope - ref.slope) / std::max(1.0, std::abs(ref.slope)),
                               std::abs(fit.intercept - ref.intercept) / std::max(1.0, std::abs(ref.intercept))});
    worst = std::max(worst, e);
    c.expect(e <= 1e-10, "instance " + std::to_string(i));
  }
  const std::vector<double> xs{1, 2, 3, 4, 5}, lin{3, 5, 7, 9, 11}, flat{4, 4, 4, 4, 4};
  c.expect(std::abs(correlate_r2(xs, lin).r2 - 1.0) <= 1e-12, "collinear");
  const LinearFit d = correlate_r2(xs, flat);
  c.expect(d.degenerate && d.r2 == 0.0, "constant y");
  return {c.ok(), "1000 instances, max err " + fmt("%.2e", worst) + ", " + c.summary()};
}

// 9. Classifier contract

bool has(const LabelVector& lv, const char* category) {
  const auto ref = tax().find_category(category);
  return ref && lv.contains(ref->axis, ref->index);
}

std::vector<std::string> vocabulary() {
  std::vector<std::string> v = {"the", "of", "in", "with", "over", "near", "while", "slowly", "across", "glowing"};
  for (const auto& [cat, e] : tax().lexicon()) {
    std::size_t k = 0;
    for (const auto& w : e.keywords) {
      if (k++ % 7 == 0) v.push_back(w);
    }
    for (const auto& p : e.phrases) {
      if (k++ % 5 == 0) v.push_back(p);
    }
  }
  return v;
}

std::string random_text(std::mt19937_64& rng, const std::vector<std::string>& vocab, std::size_t words) {
  std::string t;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) t += (rng() % 9 == 0) ? ", " : " ";
    t += vocab[rng() % vocab.size()];
  }
  return t;
}

Outcome classifier_contract() {
  Checker c;
  c.expect(!has(classify_prompt("cat", tax()), "Quantity"), "'a' inside 'cat'");
  c.expect(has(classify_prompt("a cat", tax()), "Quantity"), "'a' standalone");
  c.expect(has(classify_prompt("and then the light faded", tax()), "Event Order"), "'and then'");
  c.expect(has(classify_prompt("a close-up of a face", tax()), "Camera View"), "'close-up'");
  c.expect(!has(classify_prompt("disclose upward", tax()), "Camera View"), "'disclose upward'");

  // monotonicity: extra keywords never remove labels
  std::mt19937_64 rng(9);
  const auto vocab = vocabulary();
  std::ifstream in(default_taxonomy_path());
  const json base = json::parse(in);
  const std::vector<std::string> extra_terms = {"lamp", "cloud", "very slowly", "spinning", "blue", "left"};
  for (int trial = 0; trial < 50; ++trial) {
    json j = base;
    const auto& axis = j["axes"][rng() % 4]["categories"];
    const std::string cat = axis[rng() % axis.size()];
    j["lexicon"][cat]["keywords"].push_back(extra_terms[rng() % extra_terms.size()]);
    const Taxonomy more = parse_taxonomy(j.dump());
    for (int k = 0; k < 20; ++k) {
      std::string text = random_text(rng, vocab, 12) + " " + extra_terms[rng() % extra_terms.size()];
      const LabelVector a = classify_prompt(text, tax()), b = classify_prompt(text, more);
      for (AxisName ax : kAllAxes) c.expect((a.mask(ax) & ~b.mask(ax)) == 0u, "monotonicity: " + text);
    }
  }

  // parallel == sequential
  std::vector<Prompt> prompts;
  for (std::size_t i = 0; i < 10000; ++i) prompts.push_back({"s" + std::to_string(i), random_text(rng, vocab, 25)});
  const Corpus seq = classify_corpus(prompts, tax(), 1);
  c.expect(classify_corpus(prompts, tax(), 4) == seq, "4 threads");
  c.expect(classify_corpus(prompts, tax(), 0) == seq, "default threads");
  for (std::size_t i = 0; i < prompts.size(); i += 997) {
    c.expect(seq.items[i].labels == classify_prompt(prompts[i].text, tax()), "spot check");
  }

  // diagnostic: published example rows (no threshold)
  std::ifstream ex(fs::path(CURATE_TEST_DATA_DIR) / "classification_examples.json");
  const json rows = json::parse(ex)["rows"];
  std::size_t agree = 0, cells = 0;
  for (const auto& row : rows) {
    const LabelVector got = classify_prompt(row["text"].get<std::string>(), tax());
    std::array<std::vector<std::string>, kAxisCount> names;
    for (AxisName a : kAllAxes) names[axis_index(a)] = row["labels"][std::string(to_string(a))];
    const LabelVector want = make_labels(tax(), names);
    for (AxisName a : kAllAxes) {
      for (std::size_t k = 0; k < tax().cardinality(a); ++k) {
        const auto ci = static_cast<CategoryIndex>(k);
        agree += got.contains(a, ci) == want.contains(a, ci);
        ++cells;
      }
    }
  }
  const double rate = static_cast<double>(agree) / static_cast<double>(cells);
  return {c.ok(), c.summary() + "; diagnostic example-table agreement " + fmt("%.1f%%", 100 * rate) + " of " +
                      std::to_string(cells) + " label cells"};
}

// 10. Throughput

Outcome throughput() {
  std::mt19937_64 rng(10);
  const auto vocab = vocabulary();
  std::vector<Prompt> prompts;
  prompts.reserve(100000);
  for (std::size_t i = 0; i < 100000; ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "t%06zu", i);
    prompts.push_back({id, random_text(rng, vocab, 20 + rng() % 40)});
  }
  const auto t0 = Clock::now();
  const Corpus corpus = classify_corpus(prompts, tax());
  const double t_cls = seconds_since(t0);
  const auto t1 = Clock::now();
  const Partition part = partition_corpus(corpus);
  const SelectionResult sel = select_balanced(part, tax());
  const double t_sel = seconds_since(t1);
  const double total = t_cls + t_sel;
  return {total < 60.0, "100000 prompts: classify " + fmt("%.2f", t_cls) + " s, partition+select " +
                            fmt("%.2f", t_sel) + " s, selected " + std::to_string(sel.selected_ids.size())};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> all = {
      {1, "published balance figures", published_balance},
      {2, "global metric identities", global_identities},
      {3, "entropy metric properties", entropy_properties},
      {4, "selection correctness", selection_correctness},
      {5, "selection balance improvement", statistical_balance},
      {6, "AUC oracle equivalence", auc_equivalence},
      {7, "vote-scheme goldens", vote_goldens},
      {8, "R2 oracle equivalence", r2_equivalence},
      {9, "classifier contract", classifier_contract},
      {10, "throughput", throughput},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
