#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curate {

enum class Truth : std::uint8_t { Real, Fake };
enum class Verdict : std::uint8_t { Real, Fake, NoAnswer };

/// Frame-to-video aggregation rules.
///   Strict:   Real if any frame is Real, Fake only if every frame is Fake.
///   AnyFake:  Fake if any frame is Fake, Real only if every frame is Real.
///   Majority: majority of Real/Fake frames, NoAnswer frames ignored.
/// Anything else (mixed NoAnswer, exact tie, no valid frame) is NoAnswer.
enum class VoteScheme : std::uint8_t { Strict, AnyFake, Majority };

std::string_view to_string(Truth t);
std::string_view to_string(Verdict v);
std::string_view to_string(VoteScheme s);
VoteScheme parse_vote_scheme(std::string_view s);  // strict|any_fake|majority

/// Detector output for one sample. Higher score means "more fake".
/// A real record with an empty generator is shared by every generator slice.
struct PredictionRecord {
  std::string sample_id;
  std::string generator;
  Truth truth{};
  std::optional<double> score;
};

struct FrameVerdictRecord {
  std::string sample_id;
  std::string generator;
  Truth truth{};
  std::uint32_t frame_index = 0;
  Verdict verdict{};
};

struct VideoVerdict {
  std::string sample_id;
  std::string generator;
  Truth truth{};
  Verdict verdict{};
};

/// Mann-Whitney AUC: P(fake score > real score) + 0.5 P(tie), from rank sums.
/// Throws OneClassError when either side is empty.
double auc(std::span<const double> real_scores, std::span<const double> fake_scores);

/// Records without a score are ignored.
double auc(std::span<const PredictionRecord> records);

/// Fraction correct with `score >= threshold` read as Fake. Records without a
/// score count as NoAnswer (half credit). Throws EmptyError on no records.
double acc(std::span<const PredictionRecord> records, double threshold);

/// Fraction correct over video verdicts; NoAnswer earns half credit.
double acc(std::span<const VideoVerdict> videos);

Verdict aggregate_verdicts(std::span<const Verdict> frames, VoteScheme scheme);

/// Frames of a single sample. Throws EmptyError on no frames and
/// DuplicateFrameError on repeated frame indices.
Verdict aggregate_frames(std::span<const FrameVerdictRecord> frames, VoteScheme scheme);

/// Groups a frame log by sample (first-appearance order) and aggregates each.
/// Throws SchemaError when a sample's frames disagree on generator or truth.
std::vector<VideoVerdict> aggregate_videos(std::span<const FrameVerdictRecord> frames, VoteScheme scheme);

enum class ReportMetric : std::uint8_t { ScoreAUC, ScoreACC, VoteStrict, VoteAnyFake, VoteMajority };
std::string_view to_string(ReportMetric m);

struct EvalReport {
  ReportMetric metric{};
  std::map<std::string, double> per_generator;
  /// Generators whose slice could not be scored, with the reason.
  std::map<std::string, std::string> missing;
  /// Unweighted mean over scored generators; nullopt when none scored.
  std::optional<double> average;

  bool complete() const { return missing.empty(); }
};

EvalReport evaluate_auc(std::span<const PredictionRecord> records);
EvalReport evaluate_acc(std::span<const PredictionRecord> records, double threshold);
EvalReport evaluate_frames(std::span<const FrameVerdictRecord> frames, VoteScheme scheme);

struct CrossCell {
  std::string train;
  std::string test;
  double auc = 0.0;
};

struct CrossRun {
  std::string train;
  std::string test;
  std::vector<PredictionRecord> records;
};

/// Train-model (rows) x test-model (columns) AUC grid. Names keep their first
/// appearance order; absent pairs stay empty and are listed in `missing`.
struct CrossMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::optional<double>>> cells;
  std::vector<std::pair<std::string, std::string>> missing;

  // Per-row / per-column extrema over present cells (first index on ties).
  std::vector<std::optional<std::size_t>> row_argmax, row_argmin;
  std::vector<std::optional<std::size_t>> col_argmax, col_argmin;

  // Cross-generator summary over off-diagonal cells (row name != column name).
  std::vector<std::optional<double>> row_mean, col_mean;
  std::optional<std::size_t> optimal_train;          // highest row mean
  std::optional<std::size_t> least_favorable_train;  // lowest row mean
  std::optional<std::size_t> best_test;              // lowest column mean, hardest to detect
  std::optional<std::size_t> worst_test;             // highest column mean, easiest to detect
};

/// Throws DuplicatePairError on a repeated (train, test) pair and RangeError
/// on a cell outside [0, 1].
CrossMatrix build_cross_matrix(std::span<const CrossCell> cells);
CrossMatrix build_cross_matrix(std::span<const CrossRun> runs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool degenerate = false;  // zero variance in x or y; r2 reported as 0
  std::size_t n = 0;
};

/// Ordinary least squares y ~ slope * x + intercept with r2 = 1 - SS_res/SS_tot.
/// Throws LengthMismatchError when sizes differ, SizeError below two points.
LinearFit correlate_r2(std::span<const double> x, std::span<const double> y);

}  // namespace curate
