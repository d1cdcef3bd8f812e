#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "curate/balance_metrics.hpp"
#include "curate/balancer.hpp"
#include "curate/eval.hpp"
#include "curate/taxonomy.hpp"

namespace curate {

/// Writes through a sibling temp file and renames it into place, so readers
/// never observe a partial file. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

/// Provenance block embedded in every report.
nlohmann::json provenance(const nlohmann::json& config, const Taxonomy* tax);

nlohmann::json to_json(const SelectionResult& sel, const Taxonomy& tax);
nlohmann::json to_json(const BalanceReport& rep);
nlohmann::json to_json(const GlobalBalance& g);
nlohmann::json to_json(const EvalReport& rep);
nlohmann::json to_json(const CrossMatrix& mx);
nlohmann::json to_json(const LinearFit& fit);

/// Reads the per-generator map of an eval report written by `to_json`.
EvalReport eval_report_from_json(const nlohmann::json& j);

/// First row "train\test,<cols...>"; one row per training model; missing
/// cells left empty. Values printed with 6 decimals.
std::string matrix_csv(const CrossMatrix& mx);

/// "generator,<metric>" rows plus a final "AVG" row.
std::string eval_csv(const EvalReport& rep);

}  // namespace curate
