#include "curate/balance_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "curate/error.hpp"

namespace curate {

std::string_view to_string(CountingMode m) {
  return m == CountingMode::Occurrence ? "occurrence" : "fractional";
}

CountingMode parse_counting_mode(std::string_view s) {
  if (s == "occurrence") return CountingMode::Occurrence;
  if (s == "fractional") return CountingMode::Fractional;
  throw UsageError("unknown counting mode '" + std::string(s) + "' (expected occurrence|fractional)");
}

double AxisDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), 0.0); }

std::size_t AxisDistribution::observed() const {
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](double c) { return c > 0.0; }));
}

AxisDistribution axis_distribution(const Corpus& corpus, AxisName axis, const Taxonomy& tax, CountingMode mode) {
  AxisDistribution d;
  d.axis = axis;
  d.n_theoretical = tax.cardinality(axis);
  d.counts.assign(d.n_theoretical, 0.0);
  for (const auto& p : corpus.items) {
    const std::size_t k = p.labels.count(axis);
    if (k == 0) continue;
    const double w = mode == CountingMode::Occurrence ? 1.0 : 1.0 / static_cast<double>(k);
    for (CategoryIndex i : p.labels.indices(axis)) d.counts[i] += w;
  }
  return d;
}

double entropy_nats(std::span<const double> counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0)) return 0.0;
  double h = 0.0;
  for (double c : counts) {
    if (c <= 0.0) continue;
    const double p = c / total;
    h -= p * std::log(p);
  }
  return h;
}

double relative_uniformity(const AxisDistribution& dist) {
  if (!(dist.total() > 0.0)) throw ZeroMassError("axis " + std::string(to_string(dist.axis)) + " has no mass");
  // a single-category axis is trivially uniform
  if (dist.n_theoretical <= 1) return 1.0;
  const double ru = entropy_nats(dist.counts) / std::log(static_cast<double>(dist.n_theoretical));
  return std::clamp(ru, 0.0, 1.0);
}

double completeness_ratio(const AxisDistribution& dist) {
  if (dist.n_theoretical == 0) return 0.0;
  return static_cast<double>(dist.observed()) / static_cast<double>(dist.n_theoretical);
}

double complete_uniformity(const AxisDistribution& dist, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw RangeError("alpha must be a finite value >= 0");
  return relative_uniformity(dist) * std::pow(completeness_ratio(dist), alpha);
}

GlobalBalance global_balance(std::span<const double> cu_values) {
  if (cu_values.size() != kAxisCount) {
    throw ArityError("expected " + std::to_string(kAxisCount) + " CU values, got " +
                     std::to_string(cu_values.size()));
  }
  for (double v : cu_values) {
    if (!(v >= 0.0 && v <= 1.0)) throw RangeError("CU value " + std::to_string(v) + " outside [0, 1]");
  }
  const double m = static_cast<double>(cu_values.size());
  GlobalBalance g;
  g.mcu = std::accumulate(cu_values.begin(), cu_values.end(), 0.0) / m;
  double ss = 0.0;
  for (double v : cu_values) ss += (v - g.mcu) * (v - g.mcu);
  g.uco = ss / m;
  g.pgbs = g.mcu * (1.0 - g.uco);
  return g;
}

bool BalanceReport::any_zero_mass() const {
  return std::any_of(per_axis.begin(), per_axis.end(), [](const AxisBalance& a) { return a.zero_mass; });
}

BalanceReport score_corpus(const Corpus& corpus, const Taxonomy& tax, double alpha, CountingMode mode) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw RangeError("alpha must be a finite value >= 0");
  BalanceReport rep;
  rep.alpha = alpha;
  rep.counting = mode;
  rep.prompts = corpus.size();
  std::array<double, kAxisCount> cu{};
  for (AxisName a : kAllAxes) {
    const AxisDistribution d = axis_distribution(corpus, a, tax, mode);
    AxisBalance& ab = rep.per_axis[axis_index(a)];
    ab.mass = d.total();
    ab.r = completeness_ratio(d);
    if (!(ab.mass > 0.0)) {
      ab.zero_mass = true;
    } else {
      ab.entropy = entropy_nats(d.counts);
      ab.ru = relative_uniformity(d);
      ab.cu = complete_uniformity(d, alpha);
    }
    cu[axis_index(a)] = ab.cu;
  }
  rep.global = global_balance(cu);
  return rep;
}

}  // namespace curate
