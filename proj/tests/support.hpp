#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "curate/corpus.hpp"
#include "curate/taxonomy.hpp"

namespace curate::test {

inline const Taxonomy& shipped_taxonomy() {
  static const Taxonomy tax = load_taxonomy(default_taxonomy_path());
  return tax;
}

inline LabeledPrompt labeled(std::string id, std::vector<std::string> sc, std::vector<std::string> tc,
                             std::vector<std::string> sa = {}, std::vector<std::string> ta = {}) {
  return {std::move(id), make_labels(shipped_taxonomy(), {std::move(sc), std::move(tc), std::move(sa), std::move(ta)})};
}

/// Random label vector; each axis draws from its first `width[a]` categories.
/// Categories are sampled with a skew so that some dominate.
inline LabelVector random_labels(std::mt19937_64& rng, const std::array<std::size_t, kAxisCount>& width,
                                 double p_empty_attr, double p_multi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LabelVector lv;
  for (AxisName a : kAllAxes) {
    const bool attr = a == AxisName::SpatialAttribute || a == AxisName::TemporalAttribute;
    if (attr && u(rng) < p_empty_attr) continue;
    const std::size_t w = width[axis_index(a)];
    std::size_t k = u(rng) < p_multi ? 2 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      // squared uniform skews toward low indices
      const double x = u(rng);
      lv.insert(a, static_cast<CategoryIndex>(static_cast<std::size_t>(x * x * static_cast<double>(w)) % w));
    }
  }
  return lv;
}

inline std::string make_id(std::size_t i) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "p%07zu", i);
  return buf;
}

}  // namespace curate::test
