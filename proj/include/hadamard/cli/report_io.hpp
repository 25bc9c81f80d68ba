#pragma once

// Suite reports and their JSON / CSV forms.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hadamard::cli {

struct CaseResult {
  std::string name;
  std::optional<double> expected;  // empty: "property"
  double actual = 0;
  double tol = 0;
  bool pass = false;
  std::optional<std::string> witness;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct Summary {
  int passed = 0;
  int failed = 0;
  double runtime_ms = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct SuiteResult {
  std::string suite;
  std::string space;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  Summary summary;

  /// Value check: pass iff |actual - expected| <= tol.
  void add_value(const std::string& name, double expected, double actual, double tol,
                 std::optional<std::string> witness = std::nullopt);
  /// Property check with an explicit verdict; `actual` is the measured statistic.
  void add_property(const std::string& name, double actual, double tol, bool pass,
                    std::optional<std::string> witness = std::nullopt);
  /// Recomputes passed / failed from the cases.
  void tally();
  bool all_passed() const { return summary.failed == 0; }

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

/// Rounds to 12 significant digits (identity on non-finite values).
double round12(double v);

nlohmann::json to_json(const SuiteResult& r);
/// Throws std::runtime_error on schema violations.
SuiteResult suite_from_json(const nlohmann::json& j);

std::string to_csv(const SuiteResult& r);

enum class ReportFormat { Json, Csv };

/// .csv selects CSV, anything else JSON.
ReportFormat format_for_path(const std::string& path);

/// Throws std::runtime_error on I/O failure.
void write_report(const SuiteResult& r, const std::string& path, ReportFormat format);
void write_text(const std::string& path, const std::string& text);

}  // namespace hadamard::cli
