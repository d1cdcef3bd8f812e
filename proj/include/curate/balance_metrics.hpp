#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "curate/corpus.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

/// How a prompt carrying k labels on an axis feeds that axis' histogram.
enum class CountingMode {
  Occurrence,  // +1 for every carried label
  Fractional,  // +1/k for every carried label
};

std::string_view to_string(CountingMode m);
CountingMode parse_counting_mode(std::string_view s);  // throws UsageError

inline constexpr double kDefaultAlpha = 2.0;

/// Category histogram of one axis. `counts` is indexed by taxonomy order and
/// has one slot per theoretical category.
struct AxisDistribution {
  AxisName axis{};
  std::vector<double> counts;
  std::size_t n_theoretical = 0;

  double total() const;
  std::size_t observed() const;  // categories with count > 0
};

AxisDistribution axis_distribution(const Corpus& corpus, AxisName axis, const Taxonomy& tax,
                                   CountingMode mode = CountingMode::Occurrence);

/// Shannon entropy in nats over positive counts (0 log 0 := 0).
double entropy_nats(std::span<const double> counts);

/// Entropy divided by log(n_theoretical), in [0, 1]. Throws ZeroMassError on
/// an empty histogram.
double relative_uniformity(const AxisDistribution& dist);

/// Observed-category ratio R = observed / n_theoretical.
double completeness_ratio(const AxisDistribution& dist);

/// RU * R^alpha. Throws RangeError for negative alpha, ZeroMassError on an
/// empty histogram.
double complete_uniformity(const AxisDistribution& dist, double alpha);

struct GlobalBalance {
  double mcu = 0.0;
  double uco = 0.0;
  double pgbs = 0.0;
};

/// Mean, population variance, and MCU * (1 - UCO) of exactly four CU values.
/// Throws ArityError for any other length, RangeError outside [0, 1].
GlobalBalance global_balance(std::span<const double> cu_values);

struct AxisBalance {
  double entropy = 0.0;  // nats
  double ru = 0.0;
  double r = 0.0;
  double cu = 0.0;
  double mass = 0.0;
  bool zero_mass = false;  // CU reported as 0
};

struct BalanceReport {
  double alpha = kDefaultAlpha;
  CountingMode counting = CountingMode::Occurrence;
  std::size_t prompts = 0;
  std::array<AxisBalance, kAxisCount> per_axis{};
  GlobalBalance global;

  bool any_zero_mass() const;
};

/// Axis histograms -> CU per axis -> global balance. A zero-mass axis does not
/// abort: its CU is 0 and `zero_mass` is set.
BalanceReport score_corpus(const Corpus& corpus, const Taxonomy& tax, double alpha = kDefaultAlpha,
                           CountingMode mode = CountingMode::Occurrence);

}  // namespace curate
