#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace qbos::cli {

// Integration method echo for reports.
struct MethodSpec {
  std::string kind;  // "exact" | "monte-carlo" | "quadrature"
  std::optional<std::size_t> samples;
  std::optional<int> resolution;
  std::optional<std::uint64_t> seed;

  bool operator==(const MethodSpec&) const = default;
};

// One result line; fields engage per mode (see docs/report-schema.md).
struct ResultRow {
  std::optional<std::string> player_a;
  std::optional<std::string> player_b;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> theta;
  std::optional<double> psi;
  std::optional<double> payoff_a;
  std::optional<double> payoff_b;
  std::optional<double> se_a;
  std::optional<double> se_b;
  std::optional<double> value;
  std::optional<double> lambda_a;
  std::optional<double> lambda_b;
  std::optional<double> gap_a;
  std::optional<double> gap_b;
  std::optional<double> residual_a;
  std::optional<double> residual_b;
  std::optional<std::string> verdict;

  bool operator==(const ResultRow&) const = default;
};

struct ReportRecord {
  std::string tool;
  std::string version;
  std::string timestamp;  // ISO 8601 UTC
  std::string mode;
  double alpha{0.0};
  double beta{0.0};
  double gamma{0.0};
  bool payoffs_defaulted{false};
  std::optional<std::string> player_a;
  std::optional<std::string> player_b;
  MethodSpec method;
  std::optional<double> tolerance;
  std::vector<ResultRow> results;

  bool operator==(const ReportRecord&) const = default;
};

// Canonical machine format: single JSON object, stable key order, full
// precision; round-trips every field.
std::string to_json_text(const ReportRecord& rec);
ReportRecord record_from_json_text(const std::string& text);

// One row per result under a fixed documented header.
extern const std::string kCsvHeader;
std::string to_csv_text(const ReportRecord& rec);

// Human-readable aligned columns (no timestamp, stable across runs).
std::string to_text_table(const ReportRecord& rec);

// Serialize per `format` and write to `path` (empty -> stdout). Throws
// IoError when the destination cannot be written.
void emit_report(const ReportRecord& rec, OutputFormat format,
                 const std::string& path);

std::string current_utc_timestamp();

}  // namespace qbos::cli
