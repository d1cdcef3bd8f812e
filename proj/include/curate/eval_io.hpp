#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "curate/eval.hpp"

namespace curate {

// `{ "sample_id", "generator", "truth": "real"|"fake", "score": number|null }`
std::vector<PredictionRecord> read_score_log(std::istream& in);
std::vector<PredictionRecord> read_score_log(const std::filesystem::path& path);

// `{ "sample_id", "generator", "truth", "frame": int, "verdict": "real"|"fake"|"no_answer" }`
std::vector<FrameVerdictRecord> read_frame_log(std::istream& in);
std::vector<FrameVerdictRecord> read_frame_log(const std::filesystem::path& path);

/// Generation-quality table: a `model` column followed by numeric metric columns.
struct QualityTable {
  std::vector<std::string> metrics;  // header minus "model"
  std::vector<std::string> models;
  std::vector<std::vector<double>> values;  // [model][metric]
};

inline const std::vector<std::string> kQualityColumns = {"aesthetic", "imaging",  "frame_level",
                                                         "background", "dynamic", "motion",
                                                         "subject",   "final"};

QualityTable read_quality_csv(std::istream& in);
QualityTable read_quality_csv(const std::filesystem::path& path);

/// Runs manifest for cross-generator matrices:
/// `{ "runs": [ { "train", "test", "scores": "<score log path>" | "auc": number } ] }`.
/// Relative score paths resolve against the manifest directory.
std::vector<CrossCell> read_runs_manifest(const std::filesystem::path& path);

}  // namespace curate
