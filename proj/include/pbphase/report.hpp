#pragma once

// Run manifest, verification report and their file formats (JSON, CSV,
// pretty text). JSON output is canonical: fixed key order, two-space indent,
// floats printed with 17 significant digits.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "pbphase/gdo.hpp"
#include "pbphase/numerics.hpp"
#include "pbphase/verification.hpp"

namespace pbphase {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "pbphase 1.0.0";

enum class ReportFormat { json, csv, pretty };

std::string format_name(ReportFormat f);

struct RunManifest {
  std::size_t dim = 0;
  double theta0 = 0.0;
  double eta = 0.5;
  double omega = 1.0;
  std::string profile = "linear";  // "linear" or a path to a JSON array
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  ReportFormat format = ReportFormat::json;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  RunManifest manifest;
  std::string tool_version = kToolVersion;
};

std::string dump_canonical(const ordered_json& j);

ordered_json manifest_to_json(const RunManifest& m);
ordered_json report_to_json(const VerificationReport& r);

std::string render_json(const VerificationReport& r);
std::string render_csv(const VerificationReport& r);
std::string render_pretty(const VerificationReport& r);
std::string render_report(const VerificationReport& r);

// Complex numbers as [re, im]; matrices as arrays of rows.
ordered_json complex_to_json(Complex z);
ordered_json state_to_json(const StateVector& v);
ordered_json matrix_to_json(const OperatorMatrix& m);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"dim": int, "amp": [[re, im], ...]}; throws FormatError when malformed.
StateVector parse_state_json(const std::string& text);
StateVector read_state_file(const std::string& path);

// JSON array of non-negative reals of length dim.
DeformationProfile parse_profile_json(const std::string& text, std::size_t dim);
DeformationProfile read_profile_file(const std::string& path, std::size_t dim);

std::string read_text_file(const std::string& path);

}  // namespace pbphase
