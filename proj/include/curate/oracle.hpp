#pragma once

// Brute-force reference implementations for verification at toy scale.
// Nothing here reuses the computational code of the production modules;
// only plain data types (Corpus, LabelVector, TaggedPrompt) are shared.

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "curate/balancer.hpp"
#include "curate/corpus.hpp"
#include "curate/taxonomy.hpp"

namespace curate::oracle {

inline constexpr std::size_t kMaxExhaustivePrompts = 20;
inline constexpr std::size_t kMaxReachablePrompts = 16;

/// -sum p ln p over positive counts. Throws EmptyError on no mass.
double naive_entropy(std::span<const double> counts);

/// Explicit double loop over (real, fake) pairs, ties credited 0.5.
double pairwise_auc_oracle(std::span<const double> reals, std::span<const double> fakes);

struct OlsFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Raw-moment normal equations; r2 as the squared Pearson correlation.
OlsFit naive_ols(std::span<const double> x, std::span<const double> y);

struct NaiveBalance {
  std::array<double, kAxisCount> cu{};
  double mcu = 0.0;
  double uco = 0.0;
  double pgbs = 0.0;
};

/// Occurrence-counted balance metrics via naive_entropy. Zero-mass axes get CU 0.
NaiveBalance naive_balance(const Corpus& corpus, const Taxonomy& tax, double alpha);

struct BestSubset {
  std::vector<std::string> best_ids;  // sorted
  double best_pgbs = 0.0;
};

/// Scores all C(n, size) subsets; ties resolve to the lexicographically
/// smallest sorted id list. Throws TooLargeError above kMaxExhaustivePrompts
/// and SizeError for size outside [1, n].
BestSubset exhaustive_best_subset(std::span<const TaggedPrompt> tagged, std::size_t size, const Taxonomy& tax,
                                  double alpha);

/// PGBS of `trials` uniformly drawn subsets of `size` prompts, reproducible
/// for a given seed. Throws SizeError when size exceeds the corpus or trials == 0.
std::vector<double> random_subset_pgbs(const Corpus& corpus, std::size_t size, std::size_t trials,
                                       std::uint64_t seed, const Taxonomy& tax, double alpha);

/// Every final selection the greedy balancing procedure can reach for one
/// subset when category ties and within-category prompt choices are explored
/// in all admissible ways.
struct ReachableSelections {
  std::size_t prompts = 0;
  std::size_t m = 0;
  std::set<std::vector<std::string>> finals;  // sorted id lists
  std::size_t floor_violations = 0;           // final states with coverage < min(m, available)
};

/// Per subset P1..P4 (index order), computed from the raw labels.
/// Throws TooLargeError when any subset exceeds kMaxReachablePrompts.
std::array<ReachableSelections, 4> enumerate_reachable_selections(const Corpus& corpus);

}  // namespace curate::oracle
