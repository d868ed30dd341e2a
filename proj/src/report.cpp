#include "pbphase/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pbphase/format.hpp"

namespace pbphase {

std::string format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::pretty: return "pretty";
  }
  return "json";
}

namespace {

bool is_scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

void write_scalar(std::ostream& os, const ordered_json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (std::isfinite(x)) {
      os << format_double(x);
    } else {
      os << "null";
    }
  } else {
    os << j.dump();
  }
}

void write_value(std::ostream& os, const ordered_json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << ordered_json(key).dump() << ": ";
      write_value(os, value, depth + 1);
    }
    os << "\n" << close_pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    // flat arrays of scalars stay on one line (complex pairs, profile rows)
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_scalar(os, j[i]);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write_value(os, j[i], depth + 1);
    }
    os << "\n" << close_pad << "]";
  } else {
    write_scalar(os, j);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dump_canonical(const ordered_json& j) {
  std::ostringstream os;
  write_value(os, j, 0);
  os << "\n";
  return os.str();
}

ordered_json manifest_to_json(const RunManifest& m) {
  ordered_json j;
  j["dim"] = m.dim;
  j["theta0"] = m.theta0;
  j["eta"] = m.eta;
  j["omega"] = m.omega;
  j["profile"] = m.profile;
  j["suites"] = m.suites;
  j["seed"] = m.seed;
  j["format"] = format_name(m.format);
  return j;
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["manifest"] = manifest_to_json(r.manifest);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& rec : r.records) ++counts[static_cast<int>(rec.status)];
  j["summary"] = ordered_json{{"pass", counts[0]}, {"fail", counts[1]}, {"flagged", counts[2]}};
  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json o;
    o["check_id"] = rec.check_id;
    o["paper_anchor"] = rec.paper_anchor;
    o["max_deviation"] = rec.max_deviation;
    o["tolerance"] = rec.tolerance;
    o["status"] = status_name(rec.status);
    o["detail"] = rec.detail;
    records.push_back(std::move(o));
  }
  j["records"] = std::move(records);
  return j;
}

std::string render_json(const VerificationReport& r) {
  return dump_canonical(report_to_json(r));
}

std::string render_csv(const VerificationReport& r) {
  std::string out = "check_id,paper_anchor,max_deviation,tolerance,status\n";
  for (const auto& rec : r.records) {
    out += csv_field(rec.check_id) + "," + csv_field(rec.paper_anchor) + "," +
           format_double(rec.max_deviation) + "," + format_double(rec.tolerance) + "," +
           status_name(rec.status) + "\n";
  }
  return out;
}

std::string render_pretty(const VerificationReport& r) {
  std::size_t width = 8;
  for (const auto& rec : r.records) width = std::max(width, rec.check_id.size());
  std::ostringstream os;
  os << r.tool_version << "  dim=" << r.manifest.dim
     << " theta0=" << format_double(r.manifest.theta0)
     << " eta=" << format_double(r.manifest.eta)
     << " omega=" << format_double(r.manifest.omega) << "\n";
  for (const auto& rec : r.records) {
    os << std::left << std::setw(8) << status_name(rec.status) << std::setw(static_cast<int>(width) + 2)
       << rec.check_id << std::scientific << std::setprecision(3) << rec.max_deviation
       << " <= " << rec.tolerance;
    if (!rec.detail.empty()) os << "  " << rec.detail;
    os << std::defaultfloat << "\n";
  }
  return os.str();
}

std::string render_report(const VerificationReport& r) {
  switch (r.manifest.format) {
    case ReportFormat::json: return render_json(r);
    case ReportFormat::csv: return render_csv(r);
    case ReportFormat::pretty: return render_pretty(r);
  }
  return render_json(r);
}

ordered_json complex_to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json state_to_json(const StateVector& v) {
  ordered_json j;
  j["dim"] = v.dim();
  ordered_json amp = ordered_json::array();
  for (const auto& a : v.amp()) amp.push_back(complex_to_json(a));
  j["amp"] = std::move(amp);
  return j;
}

ordered_json matrix_to_json(const OperatorMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

double finite_number(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(std::string(what) + " must be finite");
  return x;
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

StateVector parse_state_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("amp")) {
    throw FormatError("state file must be an object with \"dim\" and \"amp\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw FormatError("state \"dim\" must be a positive integer");
  }
  const auto dim = j["dim"].get<std::size_t>();
  const auto& amp = j["amp"];
  if (!amp.is_array() || amp.size() != dim) {
    throw FormatError("state \"amp\" must be an array of length dim");
  }
  std::vector<Complex> values;
  values.reserve(dim);
  for (const auto& z : amp) {
    if (!z.is_array() || z.size() != 2) {
      throw FormatError("each amplitude must be a two-element array [re, im]");
    }
    values.emplace_back(finite_number(z[0], "amplitude re"), finite_number(z[1], "amplitude im"));
  }
  return StateVector(std::move(values));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StateVector read_state_file(const std::string& path) {
  return parse_state_json(read_text_file(path));
}

DeformationProfile parse_profile_json(const std::string& text, std::size_t dim) {
  const ordered_json j = parse(text);
  if (!j.is_array()) throw FormatError("profile must be a JSON array of reals");
  std::vector<double> values;
  values.reserve(j.size());
  for (const auto& x : j) values.push_back(finite_number(x, "profile entry"));
  return DeformationProfile::from_values(std::move(values), dim);
}

DeformationProfile read_profile_file(const std::string& path, std::size_t dim) {
  return parse_profile_json(read_text_file(path), dim);
}

}  // namespace pbphase
