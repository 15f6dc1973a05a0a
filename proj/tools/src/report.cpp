#include "report.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qbos::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  }
}

template <typename T>
void get_optional(const ordered_json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

ordered_json row_to_json(const ResultRow& row) {
  ordered_json j = ordered_json::object();
  put_optional(j, "player_a", row.player_a);
  put_optional(j, "player_b", row.player_b);
  put_optional(j, "p", row.p);
  put_optional(j, "q", row.q);
  put_optional(j, "theta", row.theta);
  put_optional(j, "psi", row.psi);
  put_optional(j, "payoff_a", row.payoff_a);
  put_optional(j, "payoff_b", row.payoff_b);
  put_optional(j, "se_a", row.se_a);
  put_optional(j, "se_b", row.se_b);
  put_optional(j, "value", row.value);
  put_optional(j, "lambda_a", row.lambda_a);
  put_optional(j, "lambda_b", row.lambda_b);
  put_optional(j, "gap_a", row.gap_a);
  put_optional(j, "gap_b", row.gap_b);
  put_optional(j, "residual_a", row.residual_a);
  put_optional(j, "residual_b", row.residual_b);
  put_optional(j, "verdict", row.verdict);
  return j;
}

ResultRow row_from_json(const ordered_json& j) {
  ResultRow row;
  get_optional(j, "player_a", row.player_a);
  get_optional(j, "player_b", row.player_b);
  get_optional(j, "p", row.p);
  get_optional(j, "q", row.q);
  get_optional(j, "theta", row.theta);
  get_optional(j, "psi", row.psi);
  get_optional(j, "payoff_a", row.payoff_a);
  get_optional(j, "payoff_b", row.payoff_b);
  get_optional(j, "se_a", row.se_a);
  get_optional(j, "se_b", row.se_b);
  get_optional(j, "value", row.value);
  get_optional(j, "lambda_a", row.lambda_a);
  get_optional(j, "lambda_b", row.lambda_b);
  get_optional(j, "gap_a", row.gap_a);
  get_optional(j, "gap_b", row.gap_b);
  get_optional(j, "residual_a", row.residual_a);
  get_optional(j, "residual_b", row.residual_b);
  get_optional(j, "verdict", row.verdict);
  return row;
}

std::string format_full(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::string format_fixed(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", v);
  return buf.data();
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) {
    return "";
  }
  if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else if constexpr (std::is_same_v<T, double>) {
    return format_full(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string current_utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

std::string to_json_text(const ReportRecord& rec) {
  ordered_json j;
  j["tool"] = rec.tool;
  j["version"] = rec.version;
  j["timestamp"] = rec.timestamp;
  ordered_json scenario;
  scenario["mode"] = rec.mode;
  scenario["payoffs"] = {{"alpha", rec.alpha},
                         {"beta", rec.beta},
                         {"gamma", rec.gamma},
                         {"defaulted", rec.payoffs_defaulted}};
  put_optional(scenario, "player_a", rec.player_a);
  put_optional(scenario, "player_b", rec.player_b);
  ordered_json method;
  method["kind"] = rec.method.kind;
  put_optional(method, "samples", rec.method.samples);
  put_optional(method, "resolution", rec.method.resolution);
  put_optional(method, "seed", rec.method.seed);
  scenario["method"] = method;
  put_optional(scenario, "tolerance", rec.tolerance);
  j["scenario"] = scenario;
  ordered_json results = ordered_json::array();
  for (const auto& row : rec.results) {
    results.push_back(row_to_json(row));
  }
  j["results"] = results;
  return j.dump(2) + "\n";
}

ReportRecord record_from_json_text(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ReportRecord rec;
  rec.tool = j.at("tool").get<std::string>();
  rec.version = j.at("version").get<std::string>();
  rec.timestamp = j.at("timestamp").get<std::string>();
  const auto& scenario = j.at("scenario");
  rec.mode = scenario.at("mode").get<std::string>();
  const auto& payoffs = scenario.at("payoffs");
  rec.alpha = payoffs.at("alpha").get<double>();
  rec.beta = payoffs.at("beta").get<double>();
  rec.gamma = payoffs.at("gamma").get<double>();
  rec.payoffs_defaulted = payoffs.at("defaulted").get<bool>();
  get_optional(scenario, "player_a", rec.player_a);
  get_optional(scenario, "player_b", rec.player_b);
  const auto& method = scenario.at("method");
  rec.method.kind = method.at("kind").get<std::string>();
  get_optional(method, "samples", rec.method.samples);
  get_optional(method, "resolution", rec.method.resolution);
  get_optional(method, "seed", rec.method.seed);
  get_optional(scenario, "tolerance", rec.tolerance);
  for (const auto& row : j.at("results")) {
    rec.results.push_back(row_from_json(row));
  }
  return rec;
}

const std::string kCsvHeader =
    "mode,alpha,beta,gamma,player_a,player_b,method,samples,resolution,seed,"
    "p,q,theta,psi,payoff_a,payoff_b,se_a,se_b,value,lambda_a,lambda_b,"
    "gap_a,gap_b,residual_a,residual_b,verdict,version";

std::string to_csv_text(const ReportRecord& rec) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& row : rec.results) {
    out << rec.mode << ',' << format_full(rec.alpha) << ','
        << format_full(rec.beta) << ',' << format_full(rec.gamma) << ','
        << cell(row.player_a) << ',' << cell(row.player_b) << ','
        << rec.method.kind << ',' << cell(rec.method.samples) << ','
        << cell(rec.method.resolution) << ',' << cell(rec.method.seed) << ','
        << cell(row.p) << ',' << cell(row.q) << ',' << cell(row.theta) << ','
        << cell(row.psi) << ',' << cell(row.payoff_a) << ','
        << cell(row.payoff_b) << ',' << cell(row.se_a) << ','
        << cell(row.se_b) << ',' << cell(row.value) << ','
        << cell(row.lambda_a) << ',' << cell(row.lambda_b) << ','
        << cell(row.gap_a) << ',' << cell(row.gap_b) << ','
        << cell(row.residual_a) << ',' << cell(row.residual_b) << ','
        << cell(row.verdict) << ',' << rec.version << "\n";
  }
  return out.str();
}

std::string to_text_table(const ReportRecord& rec) {
  struct Column {
    std::string header;
    std::vector<std::string> cells;
  };
  std::vector<Column> columns;

  auto add_string_column = [&](const char* header,
                               auto ResultRow::* member) {
    bool engaged = false;
    for (const auto& row : rec.results) {
      if ((row.*member).has_value()) {
        engaged = true;
      }
    }
    if (!engaged) {
      return;
    }
    Column col{header, {}};
    for (const auto& row : rec.results) {
      col.cells.push_back((row.*member).has_value() ? *(row.*member)
                                                    : std::string{});
    }
    columns.push_back(std::move(col));
  };

  auto add_number_column = [&](const char* header,
                               std::optional<double> ResultRow::* member) {
    bool engaged = false;
    for (const auto& row : rec.results) {
      if ((row.*member).has_value()) {
        engaged = true;
      }
    }
    if (!engaged) {
      return;
    }
    Column col{header, {}};
    for (const auto& row : rec.results) {
      col.cells.push_back((row.*member).has_value()
                              ? format_fixed(*(row.*member))
                              : std::string{});
    }
    columns.push_back(std::move(col));
  };

  add_string_column("player_a", &ResultRow::player_a);
  add_string_column("player_b", &ResultRow::player_b);
  add_number_column("p", &ResultRow::p);
  add_number_column("q", &ResultRow::q);
  add_number_column("theta", &ResultRow::theta);
  add_number_column("psi", &ResultRow::psi);
  add_number_column("payoff_a", &ResultRow::payoff_a);
  add_number_column("payoff_b", &ResultRow::payoff_b);
  add_number_column("se_a", &ResultRow::se_a);
  add_number_column("se_b", &ResultRow::se_b);
  add_number_column("value", &ResultRow::value);
  add_number_column("lambda_a", &ResultRow::lambda_a);
  add_number_column("lambda_b", &ResultRow::lambda_b);
  add_number_column("gap_a", &ResultRow::gap_a);
  add_number_column("gap_b", &ResultRow::gap_b);
  add_number_column("residual_a", &ResultRow::residual_a);
  add_number_column("residual_b", &ResultRow::residual_b);
  add_string_column("verdict", &ResultRow::verdict);

  std::ostringstream out;
  out << rec.tool << " " << rec.version << "\n";
  out << "mode: " << rec.mode << "\n";
  out << "payoffs: alpha=" << format_fixed(rec.alpha)
      << " beta=" << format_fixed(rec.beta)
      << " gamma=" << format_fixed(rec.gamma);
  if (rec.payoffs_defaulted) {
    out << " (default example instance)";
  }
  out << "\n";
  out << "method: " << rec.method.kind;
  if (rec.method.samples) {
    out << " samples=" << *rec.method.samples;
  }
  if (rec.method.resolution) {
    out << " resolution=" << *rec.method.resolution;
  }
  if (rec.method.seed) {
    out << " seed=" << *rec.method.seed;
  }
  out << "\n";
  if (rec.player_a) {
    out << "player_a: " << *rec.player_a << "\n";
  }
  if (rec.player_b) {
    out << "player_b: " << *rec.player_b << "\n";
  }
  if (rec.tolerance) {
    out << "tolerance: " << format_fixed(*rec.tolerance) << "\n";
  }
  out << "\n";

  std::vector<std::size_t> widths;
  widths.reserve(columns.size());
  for (const auto& col : columns) {
    std::size_t w = col.header.size();
    for (const auto& s : col.cells) {
      w = std::max(w, s.size());
    }
    widths.push_back(w);
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c].header
        << std::string(widths[c] - columns[c].header.size(), ' ');
    out << (c + 1 == columns.size() ? "\n" : "  ");
  }
  for (std::size_t r = 0; r < rec.results.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string& s = columns[c].cells[r];
      out << s << std::string(widths[c] - s.size(), ' ');
      out << (c + 1 == columns.size() ? "\n" : "  ");
    }
  }
  return out.str();
}

void emit_report(const ReportRecord& rec, OutputFormat format,
                 const std::string& path) {
  std::string payload;
  switch (format) {
    case OutputFormat::Text:
      payload = to_text_table(rec);
      break;
    case OutputFormat::Json:
      payload = to_json_text(rec);
      break;
    case OutputFormat::Csv:
      payload = to_csv_text(rec);
      break;
  }

  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << payload;
  out.flush();
  if (!out) {
    throw IoError("failed while writing '" + path + "'");
  }
}

}  // namespace qbos::cli
