#include "hadamard/cli/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hadamard::cli {

namespace {

using nlohmann::json;

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round12(v);
}

double read_number(const json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
  }
  throw std::runtime_error(std::string("report: field '") + field + "' is not a number");
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

void SuiteResult::add_value(const std::string& name, double expected, double actual, double tol,
                            std::optional<std::string> witness) {
  const bool pass = std::abs(actual - expected) <= tol;
  cases.push_back({name, round12(expected), round12(actual), round12(tol), pass, std::move(witness)});
  tally();
}

void SuiteResult::add_property(const std::string& name, double actual, double tol, bool pass,
                               std::optional<std::string> witness) {
  cases.push_back({name, std::nullopt, round12(actual), round12(tol), pass, std::move(witness)});
  tally();
}

void SuiteResult::tally() {
  summary.passed = 0;
  summary.failed = 0;
  for (const auto& c : cases) (c.pass ? summary.passed : summary.failed)++;
}

nlohmann::json to_json(const SuiteResult& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"name", c.name},
                     {"expected", c.expected ? number(*c.expected) : json("property")},
                     {"actual", number(c.actual)},
                     {"tol", number(c.tol)},
                     {"pass", c.pass},
                     {"witness", c.witness ? json(*c.witness) : json(nullptr)}});
  }
  return {{"suite", r.suite},
          {"space", r.space},
          {"seed", r.seed},
          {"cases", cases},
          {"summary",
           {{"passed", r.summary.passed},
            {"failed", r.summary.failed},
            {"runtime_ms", round12(r.summary.runtime_ms)}}}};
}

SuiteResult suite_from_json(const nlohmann::json& j) {
  try {
    SuiteResult r;
    r.suite = j.at("suite").get<std::string>();
    r.space = j.at("space").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("cases")) {
      CaseResult cr;
      cr.name = c.at("name").get<std::string>();
      const auto& e = c.at("expected");
      if (!(e.is_string() && e.get<std::string>() == "property")) cr.expected = read_number(e, "expected");
      cr.actual = read_number(c.at("actual"), "actual");
      cr.tol = read_number(c.at("tol"), "tol");
      cr.pass = c.at("pass").get<bool>();
      if (!c.at("witness").is_null()) cr.witness = c.at("witness").get<std::string>();
      r.cases.push_back(std::move(cr));
    }
    const auto& s = j.at("summary");
    r.summary.passed = s.at("passed").get<int>();
    r.summary.failed = s.at("failed").get<int>();
    r.summary.runtime_ms = s.at("runtime_ms").get<double>();
    const auto passed = std::count_if(r.cases.begin(), r.cases.end(), [](const CaseResult& c) { return c.pass; });
    if (passed != r.summary.passed || static_cast<long>(r.cases.size()) - passed != r.summary.failed) {
      throw std::runtime_error("report: summary counts disagree with the cases");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("report: ") + e.what());
  }
}

std::string to_csv(const SuiteResult& r) {
  std::string out = "name,expected,actual,tol,pass\n";
  for (const auto& c : r.cases) {
    out += csv_field(c.name) + ',' + (c.expected ? csv_number(*c.expected) : "property") + ',' +
           csv_number(c.actual) + ',' + csv_number(c.tol) + ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

ReportFormat format_for_path(const std::string& path) {
  const std::string ext = ".csv";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return ReportFormat::Csv;
  }
  return ReportFormat::Json;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

void write_report(const SuiteResult& r, const std::string& path, ReportFormat format) {
  write_text(path, format == ReportFormat::Csv ? to_csv(r) : to_json(r).dump(2) + "\n");
}

}  // namespace hadamard::cli
