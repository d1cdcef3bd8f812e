#include "curate/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <utility>

#include "curate/error.hpp"

namespace curate {

std::string_view to_string(Truth t) { return t == Truth::Real ? "real" : "fake"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Real:
      return "real";
    case Verdict::Fake:
      return "fake";
    case Verdict::NoAnswer:
      break;
  }
  return "no_answer";
}

std::string_view to_string(VoteScheme s) {
  switch (s) {
    case VoteScheme::Strict:
      return "strict";
    case VoteScheme::AnyFake:
      return "any_fake";
    case VoteScheme::Majority:
      break;
  }
  return "majority";
}

VoteScheme parse_vote_scheme(std::string_view s) {
  if (s == "strict") return VoteScheme::Strict;
  if (s == "any_fake") return VoteScheme::AnyFake;
  if (s == "majority") return VoteScheme::Majority;
  throw UsageError("unknown vote scheme '" + std::string(s) + "' (expected strict|any_fake|majority)");
}

std::string_view to_string(ReportMetric m) {
  switch (m) {
    case ReportMetric::ScoreAUC:
      return "auc";
    case ReportMetric::ScoreACC:
      return "acc";
    case ReportMetric::VoteStrict:
      return "vote_strict";
    case ReportMetric::VoteAnyFake:
      return "vote_any_fake";
    case ReportMetric::VoteMajority:
      break;
  }
  return "vote_majority";
}

double auc(std::span<const double> real_scores, std::span<const double> fake_scores) {
  if (real_scores.empty() || fake_scores.empty()) {
    throw OneClassError("AUC needs at least one real and one fake score");
  }
  std::vector<std::pair<double, bool>> all;  // (score, is_fake)
  all.reserve(real_scores.size() + fake_scores.size());
  for (double s : real_scores) all.emplace_back(s, false);
  for (double s : fake_scores) all.emplace_back(s, true);
  for (const auto& [s, f] : all) {
    if (!std::isfinite(s)) throw RangeError("non-finite detector score");
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Twice the midrank keeps tie groups in integer arithmetic.
  std::int64_t fake_rank_x2 = 0;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    const auto group_rank_x2 = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].second) fake_rank_x2 += group_rank_x2;
    }
    i = j;
  }
  const auto nr = static_cast<std::int64_t>(real_scores.size());
  const auto nf = static_cast<std::int64_t>(fake_scores.size());
  const std::int64_t u_x2 = fake_rank_x2 - nf * (nf + 1);
  return static_cast<double>(u_x2) / static_cast<double>(2 * nr * nf);
}

double auc(std::span<const PredictionRecord> records) {
  std::vector<double> reals, fakes;
  for (const auto& r : records) {
    if (!r.score) continue;
    (r.truth == Truth::Real ? reals : fakes).push_back(*r.score);
  }
  return auc(reals, fakes);
}

double acc(std::span<const PredictionRecord> records, double threshold) {
  if (records.empty()) throw EmptyError("ACC over an empty record set");
  double correct = 0.0;
  for (const auto& r : records) {
    if (!r.score) {
      correct += 0.5;
      continue;
    }
    const Truth predicted = *r.score >= threshold ? Truth::Fake : Truth::Real;
    if (predicted == r.truth) correct += 1.0;
  }
  return correct / static_cast<double>(records.size());
}

double acc(std::span<const VideoVerdict> videos) {
  if (videos.empty()) throw EmptyError("ACC over an empty video set");
  double correct = 0.0;
  for (const auto& v : videos) {
    if (v.verdict == Verdict::NoAnswer) {
      correct += 0.5;
    } else if ((v.verdict == Verdict::Fake) == (v.truth == Truth::Fake)) {
      correct += 1.0;
    }
  }
  return correct / static_cast<double>(videos.size());
}

Verdict aggregate_verdicts(std::span<const Verdict> frames, VoteScheme scheme) {
  if (frames.empty()) throw EmptyError("frame aggregation needs at least one frame");
  const auto real = std::count(frames.begin(), frames.end(), Verdict::Real);
  const auto fake = std::count(frames.begin(), frames.end(), Verdict::Fake);
  const auto total = static_cast<std::ptrdiff_t>(frames.size());
  switch (scheme) {
    case VoteScheme::Strict:
      if (real > 0) return Verdict::Real;
      if (fake == total) return Verdict::Fake;
      return Verdict::NoAnswer;
    case VoteScheme::AnyFake:
      if (fake > 0) return Verdict::Fake;
      if (real == total) return Verdict::Real;
      return Verdict::NoAnswer;
    case VoteScheme::Majority:
      break;
  }
  if (real > fake) return Verdict::Real;
  if (fake > real) return Verdict::Fake;
  return Verdict::NoAnswer;
}

Verdict aggregate_frames(std::span<const FrameVerdictRecord> frames, VoteScheme scheme) {
  if (frames.empty()) throw EmptyError("frame aggregation needs at least one frame");
  std::set<std::uint32_t> seen;
  std::vector<Verdict> verdicts;
  verdicts.reserve(frames.size());
  for (const auto& f : frames) {
    if (!seen.insert(f.frame_index).second) {
      throw DuplicateFrameError("sample '" + f.sample_id + "' repeats frame " + std::to_string(f.frame_index));
    }
    verdicts.push_back(f.verdict);
  }
  return aggregate_verdicts(verdicts, scheme);
}

std::vector<VideoVerdict> aggregate_videos(std::span<const FrameVerdictRecord> frames, VoteScheme scheme) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<FrameVerdictRecord>> groups;
  for (const auto& f : frames) {
    auto [it, fresh] = groups.try_emplace(f.sample_id);
    if (fresh) order.push_back(f.sample_id);
    auto& g = it->second;
    if (!g.empty() && (g.front().generator != f.generator || g.front().truth != f.truth)) {
      throw SchemaError("sample '" + f.sample_id + "' has frames with conflicting generator or truth");
    }
    g.push_back(f);
  }
  std::vector<VideoVerdict> out;
  out.reserve(order.size());
  for (const auto& id : order) {
    const auto& g = groups.at(id);
    out.push_back({id, g.front().generator, g.front().truth, aggregate_frames(g, scheme)});
  }
  return out;
}

namespace {

// Named generators in sorted order; a record with an empty generator is a
// shared real and joins every slice.
template <typename Rec>
std::map<std::string, std::vector<Rec>> slice_by_generator(std::span<const Rec> recs) {
  std::map<std::string, std::vector<Rec>> slices;
  std::vector<Rec> shared;
  for (const auto& r : recs) {
    if (r.generator.empty()) {
      if (r.truth != Truth::Real) throw SchemaError("fake sample '" + r.sample_id + "' has no generator");
      shared.push_back(r);
    } else {
      slices[r.generator].push_back(r);
    }
  }
  for (auto& [g, s] : slices) s.insert(s.end(), shared.begin(), shared.end());
  return slices;
}

void finish_average(EvalReport& rep) {
  if (rep.per_generator.empty()) return;
  double sum = 0.0;
  for (const auto& [g, v] : rep.per_generator) sum += v;
  rep.average = sum / static_cast<double>(rep.per_generator.size());
}

template <typename Rec, typename Fn>
EvalReport evaluate_slices(ReportMetric metric, std::span<const Rec> recs, Fn&& fn) {
  EvalReport rep;
  rep.metric = metric;
  for (const auto& [g, slice] : slice_by_generator(recs)) {
    try {
      rep.per_generator[g] = fn(slice);
    } catch (const OneClassError& e) {
      rep.missing[g] = e.what();
    } catch (const EmptyError& e) {
      rep.missing[g] = e.what();
    }
  }
  finish_average(rep);
  return rep;
}

}  // namespace

EvalReport evaluate_auc(std::span<const PredictionRecord> records) {
  return evaluate_slices(ReportMetric::ScoreAUC, records,
                         [](const std::vector<PredictionRecord>& s) { return auc(s); });
}

EvalReport evaluate_acc(std::span<const PredictionRecord> records, double threshold) {
  return evaluate_slices(ReportMetric::ScoreACC, records,
                         [threshold](const std::vector<PredictionRecord>& s) { return acc(s, threshold); });
}

EvalReport evaluate_frames(std::span<const FrameVerdictRecord> frames, VoteScheme scheme) {
  const auto videos = aggregate_videos(frames, scheme);
  const ReportMetric metric = scheme == VoteScheme::Strict    ? ReportMetric::VoteStrict
                              : scheme == VoteScheme::AnyFake ? ReportMetric::VoteAnyFake
                                                              : ReportMetric::VoteMajority;
  return evaluate_slices(metric, std::span<const VideoVerdict>(videos),
                         [](const std::vector<VideoVerdict>& s) { return acc(s); });
}

namespace {

std::size_t index_of(std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  names.push_back(n);
  return names.size() - 1;
}

template <typename Get>
void extrema(std::size_t n, Get&& get, std::optional<std::size_t>& argmax, std::optional<std::size_t>& argmin) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::optional<double> v = get(i);
    if (!v) continue;
    if (!argmax || *v > *get(*argmax)) argmax = i;
    if (!argmin || *v < *get(*argmin)) argmin = i;
  }
}

}  // namespace

CrossMatrix build_cross_matrix(std::span<const CrossCell> cells) {
  CrossMatrix mx;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : cells) {
    if (!seen.emplace(c.train, c.test).second) {
      throw DuplicatePairError("duplicate run (" + c.train + ", " + c.test + ")");
    }
    if (!(c.auc >= 0.0 && c.auc <= 1.0)) {
      throw RangeError("AUC for (" + c.train + ", " + c.test + ") outside [0, 1]");
    }
    index_of(mx.rows, c.train);
    index_of(mx.cols, c.test);
  }
  mx.cells.assign(mx.rows.size(), std::vector<std::optional<double>>(mx.cols.size()));
  for (const auto& c : cells) {
    const auto r = static_cast<std::size_t>(std::find(mx.rows.begin(), mx.rows.end(), c.train) - mx.rows.begin());
    const auto k = static_cast<std::size_t>(std::find(mx.cols.begin(), mx.cols.end(), c.test) - mx.cols.begin());
    mx.cells[r][k] = c.auc;
  }
  for (std::size_t r = 0; r < mx.rows.size(); ++r) {
    for (std::size_t k = 0; k < mx.cols.size(); ++k) {
      if (!mx.cells[r][k]) mx.missing.emplace_back(mx.rows[r], mx.cols[k]);
    }
  }

  const std::size_t nr = mx.rows.size(), nc = mx.cols.size();
  mx.row_argmax.resize(nr);
  mx.row_argmin.resize(nr);
  mx.col_argmax.resize(nc);
  mx.col_argmin.resize(nc);
  for (std::size_t r = 0; r < nr; ++r) {
    extrema(nc, [&](std::size_t k) { return mx.cells[r][k]; }, mx.row_argmax[r], mx.row_argmin[r]);
  }
  for (std::size_t k = 0; k < nc; ++k) {
    extrema(nr, [&](std::size_t r) { return mx.cells[r][k]; }, mx.col_argmax[k], mx.col_argmin[k]);
  }

  auto off_diagonal_mean = [&](auto&& cell_at, std::size_t n, const std::string& self,
                               const std::vector<std::string>& other) -> std::optional<double> {
    double sum = 0.0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::optional<double> v = cell_at(i);
      if (!v || other[i] == self) continue;
      sum += *v;
      ++cnt;
    }
    if (cnt == 0) return std::nullopt;
    return sum / static_cast<double>(cnt);
  };
  mx.row_mean.resize(nr);
  mx.col_mean.resize(nc);
  for (std::size_t r = 0; r < nr; ++r) {
    mx.row_mean[r] = off_diagonal_mean([&](std::size_t k) { return mx.cells[r][k]; }, nc, mx.rows[r], mx.cols);
  }
  for (std::size_t k = 0; k < nc; ++k) {
    mx.col_mean[k] = off_diagonal_mean([&](std::size_t r) { return mx.cells[r][k]; }, nr, mx.cols[k], mx.rows);
  }
  extrema(nr, [&](std::size_t r) { return mx.row_mean[r]; }, mx.optimal_train, mx.least_favorable_train);
  extrema(nc, [&](std::size_t k) { return mx.col_mean[k]; }, mx.worst_test, mx.best_test);
  return mx;
}

CrossMatrix build_cross_matrix(std::span<const CrossRun> runs) {
  std::vector<CrossCell> cells;
  cells.reserve(runs.size());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& run : runs) {
    if (!seen.emplace(run.train, run.test).second) {
      throw DuplicatePairError("duplicate run (" + run.train + ", " + run.test + ")");
    }
    cells.push_back({run.train, run.test, auc(run.records)});
  }
  return build_cross_matrix(cells);
}

LinearFit correlate_r2(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw LengthMismatchError("x has " + std::to_string(x.size()) + " values, y has " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw SizeError("correlation needs at least two points");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw RangeError("non-finite value in correlation input");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }

  LinearFit fit;
  fit.n = x.size();
  if (sxx == 0.0) {
    fit.degenerate = true;
    fit.intercept = my;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.degenerate = true;
    return fit;
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = 1.0 - ss_res / syy;
  return fit;
}

}  // namespace curate
