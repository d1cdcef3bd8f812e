#include <doctest.h>

#include <cmath>

#include "curate/balance_metrics.hpp"
#include "curate/error.hpp"
#include "support.hpp"

using namespace curate;
using doctest::Approx;

namespace {

AxisDistribution dist(std::vector<double> counts) {
  AxisDistribution d;
  d.axis = AxisName::TemporalContent;
  d.n_theoretical = counts.size();
  d.counts = std::move(counts);
  return d;
}

}  // namespace

TEST_CASE("axis_distribution counts occurrences") {
  const Taxonomy& tax = test::shipped_taxonomy();
  const Corpus c{{test::labeled("a", {"People"}, {"Actions"}), test::labeled("b", {"People", "Animals"}, {"Actions"})}};
  const auto d = axis_distribution(c, AxisName::SpatialContent, tax);
  REQUIRE(d.counts.size() == 9);
  CHECK(d.counts[0] == 2.0);
  CHECK(d.counts[1] == 1.0);
  CHECK(d.total() == 3.0);
  CHECK(d.observed() == 2);

  const auto f = axis_distribution(c, AxisName::SpatialContent, tax, CountingMode::Fractional);
  CHECK(f.counts[0] == 1.5);
  CHECK(f.counts[1] == 0.5);
}

TEST_CASE("axis_distribution on an empty corpus") {
  const auto d = axis_distribution(Corpus{}, AxisName::SpatialAttribute, test::shipped_taxonomy());
  CHECK(d.counts == std::vector<double>{0, 0, 0});
  CHECK(d.n_theoretical == 3);
}

TEST_CASE("all nine spatial categories on every prompt give uniform counts") {
  const std::vector<std::string> all = test::shipped_taxonomy().axis(AxisName::SpatialContent).categories;
  const Corpus c{{test::labeled("a", all, {"Actions"}), test::labeled("b", all, {"Actions"})}};
  const auto d = axis_distribution(c, AxisName::SpatialContent, test::shipped_taxonomy());
  for (double x : d.counts) CHECK(x == 2.0);
  CHECK(relative_uniformity(d) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("relative uniformity") {
  CHECK(relative_uniformity(dist({3, 3, 3, 3})) == Approx(1.0).epsilon(1e-15));
  CHECK(relative_uniformity(dist({0, 7, 0, 0})) == 0.0);
  const auto d = dist({1, 1, 2, 0});
  CHECK(entropy_nats(d.counts) == Approx(1.0397207708399179));
  CHECK(relative_uniformity(d) == Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(relative_uniformity(dist({0, 0, 0, 0})), ZeroMassError);
}

TEST_CASE("complete uniformity") {
  CHECK(complete_uniformity(dist({2, 3, 4, 1}), 2.0) == Approx(relative_uniformity(dist({2, 3, 4, 1}))));
  CHECK(complete_uniformity(dist({5, 5, 0, 0}), 2.0) == Approx(0.125).epsilon(1e-12));
  CHECK(complete_uniformity(dist({5, 5, 0, 0}), 0.0) == Approx(0.5).epsilon(1e-12));
  CHECK(completeness_ratio(dist({5, 5, 0, 0})) == 0.5);
  CHECK_THROWS_AS(complete_uniformity(dist({1, 1}), -1.0), RangeError);
}

TEST_CASE("global balance reproduces the published comparison") {
  struct Row {
    std::array<double, 4> cu;
    double mcu, uco, pgbs;
  };
  const Row rows[] = {{{0.9592, 0.8785, 0.9942, 1.0000}, 0.9580, 0.0023, 0.9557},
                      {{0.7818, 0.6866, 0.4069, 0.8762}, 0.6879, 0.0308, 0.6667},
                      {{0.8495, 0.7677, 0.7492, 0.9966}, 0.8408, 0.0095, 0.8328}};
  for (const auto& r : rows) {
    const auto g = global_balance(r.cu);
    CHECK(std::abs(g.mcu - r.mcu) <= 5e-4);
    CHECK(std::abs(g.uco - r.uco) <= 5e-4);
    CHECK(std::abs(g.pgbs - r.pgbs) <= 5e-4);
  }
}

TEST_CASE("equal CU values have no variance") {
  const std::array<double, 4> cu{0.6, 0.6, 0.6, 0.6};
  const auto g = global_balance(cu);
  CHECK(g.uco == Approx(0.0).epsilon(1e-15));
  CHECK(g.pgbs == Approx(0.6));
}

TEST_CASE("global balance rejects bad input") {
  const std::vector<double> three{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(global_balance(three), ArityError);
  const std::array<double, 4> bad{0.1, 1.2, 0.3, 0.4};
  CHECK_THROWS_AS(global_balance(bad), RangeError);
}

TEST_CASE("uniform complete corpus scores 1") {
  const Taxonomy& tax = test::shipped_taxonomy();
  std::array<std::vector<std::string>, 4> all;
  for (AxisName a : kAllAxes) all[axis_index(a)] = tax.axis(a).categories;
  Corpus c{{test::labeled("x", all[0], all[1], all[2], all[3])}};
  const auto rep = score_corpus(c, tax);
  CHECK(rep.global.pgbs == Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rep.any_zero_mass());
}

TEST_CASE("a degenerate axis scores 0 and the rest still counts") {
  const Taxonomy& tax = test::shipped_taxonomy();
  const auto& sc = tax.axis(AxisName::SpatialContent).categories;
  const auto& tc = tax.axis(AxisName::TemporalContent).categories;
  const auto& ta = tax.axis(AxisName::TemporalAttribute).categories;
  // Color only on the spatial attribute axis.
  Corpus c{{test::labeled("x", sc, tc, {"Color"}, ta), test::labeled("y", sc, tc, {"Color"}, ta)}};
  const auto rep = score_corpus(c, tax);
  CHECK(rep.per_axis[axis_index(AxisName::SpatialAttribute)].cu == 0.0);
  CHECK(rep.global.mcu == Approx(0.75).epsilon(1e-12));
}

TEST_CASE("zero-mass axis is flagged, not fatal") {
  const Taxonomy& tax = test::shipped_taxonomy();
  Corpus c{{test::labeled("x", {"People"}, {"Actions"})}};
  const auto rep = score_corpus(c, tax);
  CHECK(rep.any_zero_mass());
  CHECK(rep.per_axis[axis_index(AxisName::SpatialAttribute)].zero_mass);
  CHECK(rep.per_axis[axis_index(AxisName::SpatialAttribute)].cu == 0.0);
}

TEST_CASE("counting mode parsing") {
  CHECK(parse_counting_mode("occurrence") == CountingMode::Occurrence);
  CHECK(parse_counting_mode("fractional") == CountingMode::Fractional);
  CHECK_THROWS_AS(parse_counting_mode("weighted"), UsageError);
}
