#include "curate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "curate/balance_metrics.hpp"
#include "curate/error.hpp"

namespace curate::oracle {

double naive_entropy(std::span<const double> counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  if (counts.empty() || total <= 0.0) throw EmptyError("entropy of an empty histogram");
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) h += (c / total) * std::log(total / c);
  }
  return h;
}

double pairwise_auc_oracle(std::span<const double> reals, std::span<const double> fakes) {
  if (reals.empty() || fakes.empty()) throw EmptyError("pairwise AUC needs both classes");
  long long twice = 0;
  for (double r : reals) {
    for (double f : fakes) {
      if (f > r) {
        twice += 2;
      } else if (f == r) {
        twice += 1;
      }
    }
  }
  const long long denom = 2LL * static_cast<long long>(reals.size()) * static_cast<long long>(fakes.size());
  return static_cast<double>(twice) / static_cast<double>(denom);
}

OlsFit naive_ols(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw SizeError("naive OLS needs two equal-length series");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double dx = n * sxx - sx * sx;
  const double dy = n * syy - sy * sy;
  const double cov = n * sxy - sx * sy;
  OlsFit f;
  f.slope = dx == 0.0 ? 0.0 : cov / dx;
  f.intercept = (sy - f.slope * sx) / n;
  f.r2 = (dx == 0.0 || dy == 0.0) ? 0.0 : (cov * cov) / (dx * dy);
  return f;
}

NaiveBalance naive_balance(const Corpus& corpus, const Taxonomy& tax, double alpha) {
  NaiveBalance out;
  for (std::size_t a = 0; a < kAxisCount; ++a) {
    const AxisName axis = kAllAxes[a];
    const std::size_t n = tax.axis(axis).categories.size();
    std::vector<double> counts(n, 0.0);
    for (const auto& p : corpus.items) {
      for (std::size_t c = 0; c < n; ++c) {
        if (p.labels.contains(axis, static_cast<CategoryIndex>(c))) counts[c] += 1.0;
      }
    }
    double total = 0.0;
    std::size_t seen = 0;
    for (double c : counts) {
      total += c;
      if (c > 0.0) ++seen;
    }
    if (total <= 0.0) continue;
    double ru = naive_entropy(counts) / std::log(static_cast<double>(n));
    if (ru > 1.0) ru = 1.0;
    out.cu[a] = ru * std::pow(static_cast<double>(seen) / static_cast<double>(n), alpha);
  }
  out.mcu = (out.cu[0] + out.cu[1] + out.cu[2] + out.cu[3]) / 4.0;
  for (double c : out.cu) out.uco += (c - out.mcu) * (c - out.mcu) / 4.0;
  out.pgbs = out.mcu * (1.0 - out.uco);
  return out;
}

BestSubset exhaustive_best_subset(std::span<const TaggedPrompt> tagged, std::size_t size, const Taxonomy& tax,
                                  double alpha) {
  const std::size_t n = tagged.size();
  if (n > kMaxExhaustivePrompts) {
    throw TooLargeError("exhaustive search is limited to " + std::to_string(kMaxExhaustivePrompts) + " prompts");
  }
  if (size < 1 || size > n) throw SizeError("subset size must be in [1, " + std::to_string(n) + "]");

  // Enumerate in sorted-id order so lexicographic ties resolve to the first hit.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return tagged[a].prompt_id < tagged[b].prompt_id; });

  BestSubset best;
  bool have = false;
  std::vector<std::size_t> pick(size);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    Corpus c;
    std::vector<std::string> ids;
    for (std::size_t k : pick) {
      const auto& t = tagged[order[k]];
      c.items.push_back({t.prompt_id, t.labels});
      ids.push_back(t.prompt_id);
    }
    const double score = score_corpus(c, tax, alpha).global.pgbs;
    if (!have || score > best.best_pgbs || (score == best.best_pgbs && ids < best.best_ids)) {
      best.best_ids = ids;
      best.best_pgbs = score;
      have = true;
    }
    // next combination in lexicographic order
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

std::vector<double> random_subset_pgbs(const Corpus& corpus, std::size_t size, std::size_t trials,
                                       std::uint64_t seed, const Taxonomy& tax, double alpha) {
  if (size > corpus.size()) throw SizeError("subset size exceeds corpus size");
  if (trials == 0) throw SizeError("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> idx(corpus.size());
  std::vector<double> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::size_t> pickdist(i, idx.size() - 1);
      std::swap(idx[i], idx[pickdist(rng)]);
    }
    Corpus sub;
    sub.items.reserve(size);
    for (std::size_t i = 0; i < size; ++i) sub.items.push_back(corpus.items[idx[i]]);
    out.push_back(score_corpus(sub, tax, alpha).global.pgbs);
  }
  return out;
}

namespace {

// Subset slot from raw axis occupancy: bit 0 = spatial attribute, bit 1 = temporal attribute.
int raw_subset(const LabelVector& lv) {
  if (lv.mask(AxisName::SpatialContent) == 0 || lv.mask(AxisName::TemporalContent) == 0) return -1;
  const bool sa = lv.mask(AxisName::SpatialAttribute) != 0;
  const bool ta = lv.mask(AxisName::TemporalAttribute) != 0;
  if (sa && ta) return 3;
  if (sa) return 2;
  if (ta) return 1;
  return 0;
}

// Keys as strings "sc.tc.sa.ta" with '-' for unused axes.
std::vector<std::string> raw_keys(const LabelVector& lv, int subset) {
  std::array<bool, kAxisCount> use = {true, true, subset == 2 || subset == 3, subset == 1 || subset == 3};
  std::vector<std::string> keys{""};
  for (std::size_t a = 0; a < kAxisCount; ++a) {
    std::vector<std::string> next;
    for (const auto& k : keys) {
      if (!use[a]) {
        next.push_back(k + "-.");
        continue;
      }
      for (unsigned bit = 0; bit < 32; ++bit) {
        if ((lv.mask(kAllAxes[a]) >> bit) & 1u) next.push_back(k + std::to_string(bit) + ".");
      }
    }
    keys = std::move(next);
  }
  return keys;
}

struct Explorer {
  std::vector<std::string> ids;
  std::vector<std::vector<std::size_t>> members;  // category -> prompt indices
  std::vector<std::vector<std::size_t>> keys_of;  // prompt -> categories
  std::vector<std::size_t> initial;               // available(c) at start
  std::size_t m = 0;
  std::set<std::pair<std::uint32_t, std::vector<bool>>> visited;
  ReachableSelections* out = nullptr;

  std::size_t covered(std::size_t c, std::uint32_t sel) const {
    std::size_t n = 0;
    for (std::size_t p : members[c]) n += (sel >> p) & 1u;
    return n;
  }

  void record(std::uint32_t sel) {
    std::vector<std::string> chosen;
    for (std::size_t p = 0; p < ids.size(); ++p) {
      if ((sel >> p) & 1u) chosen.push_back(ids[p]);
    }
    std::sort(chosen.begin(), chosen.end());
    if (!out->finals.insert(chosen).second) return;
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (covered(c, sel) < std::min(m, initial[c])) {
        ++out->floor_violations;
        break;
      }
    }
  }

  // every k-combination of `from`
  static void combos(const std::vector<std::size_t>& from, std::size_t k,
                     const std::function<void(std::uint32_t)>& emit) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t, std::uint32_t)> rec = [&](std::size_t start, std::size_t depth,
                                                                           std::uint32_t acc) {
      if (depth == k) {
        emit(acc);
        return;
      }
      for (std::size_t i = start; i + (k - depth) <= from.size(); ++i) rec(i + 1, depth + 1, acc | (1u << from[i]));
    };
    rec(0, 0, 0);
  }

  void explore(std::uint32_t sel, std::vector<bool> done) {
    // A category already at quota is a no-op whenever it is visited, so its
    // position in the order cannot change the outcome.
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (!done[c] && covered(c, sel) >= m) done[c] = true;
    }
    if (!visited.emplace(sel, done).second) return;
    std::size_t best = SIZE_MAX;
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (done[c]) continue;
      best = std::min(best, members[c].size() - covered(c, sel));
    }
    if (best == SIZE_MAX) {
      record(sel);
      return;
    }
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (done[c] || members[c].size() - covered(c, sel) != best) continue;
      const std::size_t have = covered(c, sel);
      const std::size_t quota = have >= m ? 0 : m - have;
      std::vector<std::size_t> singles, multis;
      for (std::size_t p : members[c]) {
        if ((sel >> p) & 1u) continue;
        (keys_of[p].size() == 1 ? singles : multis).push_back(p);
      }
      std::vector<bool> next_done = done;
      next_done[c] = true;
      if (quota <= singles.size()) {
        combos(singles, quota, [&](std::uint32_t add) { explore(sel | add, next_done); });
      } else {
        std::uint32_t base = sel;
        for (std::size_t p : singles) base |= 1u << p;
        const std::size_t rest = std::min(quota - singles.size(), multis.size());
        combos(multis, rest, [&](std::uint32_t add) { explore(base | add, next_done); });
      }
    }
  }
};

}  // namespace

std::array<ReachableSelections, 4> enumerate_reachable_selections(const Corpus& corpus) {
  std::array<std::vector<const LabeledPrompt*>, 4> groups;
  for (const auto& p : corpus.items) {
    const int s = raw_subset(p.labels);
    if (s >= 0) groups[static_cast<std::size_t>(s)].push_back(&p);
  }
  std::array<ReachableSelections, 4> result;
  for (std::size_t s = 0; s < 4; ++s) {
    const auto& g = groups[s];
    if (g.size() > kMaxReachablePrompts) {
      throw TooLargeError("reachable-state enumeration is limited to " + std::to_string(kMaxReachablePrompts) +
                          " prompts per subset");
    }
    ReachableSelections& rs = result[s];
    rs.prompts = g.size();
    if (g.empty()) continue;

    Explorer ex;
    ex.out = &rs;
    std::map<std::string, std::size_t> slot;
    for (std::size_t p = 0; p < g.size(); ++p) {
      ex.ids.push_back(g[p]->id);
      ex.keys_of.emplace_back();
      for (const auto& k : raw_keys(g[p]->labels, static_cast<int>(s))) {
        auto [it, fresh] = slot.emplace(k, ex.members.size());
        if (fresh) ex.members.emplace_back();
        ex.members[it->second].push_back(p);
        ex.keys_of[p].push_back(it->second);
      }
    }
    for (const auto& mem : ex.members) ex.initial.push_back(mem.size());
    ex.m = *std::min_element(ex.initial.begin(), ex.initial.end());
    rs.m = ex.m;
    ex.explore(0, std::vector<bool>(ex.members.size(), false));
  }
  return result;
}

}  // namespace curate::oracle
