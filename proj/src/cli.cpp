#include "pbphase/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "pbphase/evolution.hpp"
#include "pbphase/format.hpp"
#include "pbphase/pb_core.hpp"
#include "pbphase/suites.hpp"

namespace pbphase {

namespace {

SpaceConfig config_of(const RunManifest& m) { return SpaceConfig::from_dim(m.dim, m.theta0); }

DeformationProfile resolve_profile(const RunManifest& m, const SpaceConfig& cfg) {
  if (m.profile == "linear") return deformation_linear(cfg, EtaParameter(m.eta));
  return read_profile_file(m.profile, cfg.dim());
}

std::vector<std::string> canonical_suites(const std::vector<std::string>& requested) {
  if (requested.empty()) throw ConfigError("at least one suite is required");
  std::vector<std::string> out;
  for (const auto& name : suite_names()) {
    const bool wanted = std::any_of(requested.begin(), requested.end(), [&](const auto& r) {
      return r == name || r == "all";
    });
    if (wanted) out.push_back(name);
  }
  for (const auto& r : requested) {
    if (r != "all" && std::find(out.begin(), out.end(), r) == out.end()) {
      throw ConfigError("unknown suite: " + r);
    }
  }
  return out;
}

void validate(const RunManifest& m) {
  if (m.dim == 0) throw ConfigError("--dim must be >= 1");
  if (!std::isfinite(m.theta0)) throw ConfigError("--theta0 must be finite");
  if (!std::isfinite(m.eta)) throw ConfigError("--eta must be finite");
  if (!std::isfinite(m.omega) || m.omega <= 0.0) throw ConfigError("--omega must be > 0");
}

}  // namespace

VerificationReport cmd_verify(const RunManifest& manifest) {
  validate(manifest);
  RunManifest m = manifest;
  m.suites = canonical_suites(manifest.suites);
  const SpaceConfig cfg = config_of(m);
  const SuiteOptions opts{cfg, EtaParameter(m.eta), m.omega, resolve_profile(m, cfg), m.seed};
  VerificationReport report;
  report.manifest = m;
  for (const auto& name : m.suites) {
    for (auto& rec : run_suite(name, opts)) report.records.push_back(std::move(rec));
  }
  return report;
}

EvolveResult cmd_evolve(const RunManifest& manifest, const StateVector& input,
                        EvolveMode mode, std::size_t steps) {
  validate(manifest);
  if (input.dim() != manifest.dim) {
    throw DimensionError("state dim " + std::to_string(input.dim()) +
                         " does not match --dim " + std::to_string(manifest.dim));
  }
  const SpaceConfig cfg = config_of(manifest);
  const TolerancePolicy tol = cfg.tolerances();
  EvolveResult result{input, false, input.norm(), std::nullopt};
  if (result.input_norm == 0.0) throw FormatError("input state is the zero vector");
  if (std::abs(result.input_norm - 1.0) > tol.norm) {
    result.state = input.normalized();
    result.input_normalized = true;
  }
  const StateVector start = result.state;

  const OperatorMatrix op =
      mode == EvolveMode::hamiltonian
          ? matrix_power(time_evolution(cfg, manifest.omega, cycle_period(manifest.omega)), steps)
          : cycle_operator_power(cfg, EtaParameter(manifest.eta), steps);
  result.state = mat_apply(op, start);
  const PhaseComparison cmp = equal_up_to_global_phase(start, result.state, tol.op);
  if (cmp.equal) result.global_phase = cmp.phase;
  return result;
}

std::string render_evolve(const RunManifest& manifest, const EvolveResult& result,
                          EvolveMode mode, std::size_t steps) {
  ordered_json j = state_to_json(result.state);
  j["mode"] = mode == EvolveMode::hamiltonian ? "hamiltonian" : "shift";
  j["steps"] = steps;
  j["theta0"] = manifest.theta0;
  j["eta"] = manifest.eta;
  j["omega"] = manifest.omega;
  j["global_phase"] = result.global_phase ? ordered_json(*result.global_phase) : ordered_json();
  j["input_normalized"] = result.input_normalized;
  j["note"] = result.input_normalized
                  ? "input norm " + format_double(result.input_norm) + " was normalized to 1"
                  : "";
  return dump_canonical(j);
}

const std::vector<std::string>& dump_objects() {
  static const std::vector<std::string> names{"phase-states", "phi", "exp-iphi", "qN",
                                              "A", "Adag", "H", "commutators"};
  return names;
}

std::string cmd_dump(const RunManifest& manifest, const std::string& object) {
  const auto& names = dump_objects();
  if (std::find(names.begin(), names.end(), object) == names.end()) {
    throw std::invalid_argument("unknown dump object: " + object);
  }
  validate(manifest);
  const SpaceConfig cfg = config_of(manifest);
  ordered_json j;
  j["object"] = object;
  j["dim"] = cfg.dim();
  j["theta0"] = cfg.theta0();

  if (object == "phase-states") {
    ordered_json states = ordered_json::array();
    for (const auto& st : build_phase_frame(cfg).states) states.push_back(state_to_json(st)["amp"]);
    j["states"] = std::move(states);
  } else if (object == "phi") {
    j["matrix"] = matrix_to_json(hermitian_phase_operator(cfg));
  } else if (object == "exp-iphi") {
    j["matrix"] = matrix_to_json(unitary_phase_operator(cfg));
  } else if (object == "qN") {
    j["operator"] = "q^{-N}";
    j["matrix"] = matrix_to_json(number_shift_operator(cfg, ShiftSign::minus));
  } else if (object == "A" || object == "Adag") {
    const EtaParameter eta(manifest.eta);
    const DeformationProfile profile = resolve_profile(manifest, cfg);
    const GeneralizedFrame frame = build_generalized_frame(cfg, eta);
    const LadderOperators ladder = build_ladder_operators(frame, profile);
    j["eta"] = eta.value;
    j["profile"] = std::vector<double>(profile.values().begin(), profile.values().end());
    j["matrix"] = matrix_to_json(object == "A" ? ladder.annihilation : ladder.creation);
  } else if (object == "H") {
    j["omega"] = manifest.omega;
    j["matrix"] = matrix_to_json(hamiltonian(cfg, manifest.omega));
  } else {
    const OperatorMatrix direct = commutator(hermitian_phase_operator(cfg), number_operator(cfg));
    const OperatorMatrix closed = commutator_closed_form(cfg);
    const OperatorMatrix printed = commutator_rhs_printed(cfg);
    auto deviations = [&](const OperatorMatrix& a) {
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < cfg.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < cfg.dim(); ++c) row.push_back(std::abs(a(r, c) - closed(r, c)));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    j["direct"] = matrix_to_json(direct);
    j["closed_form"] = matrix_to_json(closed);
    j["printed"] = matrix_to_json(printed);
    j["deviation_direct_vs_closed"] = deviations(direct);
    j["deviation_printed_vs_closed"] = deviations(printed);
    j["max_deviation_direct_vs_closed"] = max_abs_diff(direct, closed);
    j["max_deviation_printed_vs_closed"] = max_abs_diff(printed, closed);
  }
  return dump_canonical(j);
}

namespace {

void add_manifest_options(CLI::App& cmd, RunManifest& m, std::string& out_path,
                          bool dim_required) {
  auto* dim = cmd.add_option("--dim", m.dim, "Hilbert-space dimension s+1");
  if (dim_required) dim->required();
  cmd.add_option("--theta0", m.theta0, "phase window origin (radians)");
  cmd.add_option("--eta", m.eta, "number-spectrum offset eta");
  cmd.add_option("--omega", m.omega, "oscillator angular frequency");
  cmd.add_option("--profile", m.profile, "deformation profile: 'linear' or JSON array file");
  cmd.add_option("--seed", m.seed, "seed for randomized state sampling");
  cmd.add_option("--out", out_path, "output file (default stdout)");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw FormatError("cannot write " + out_path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pegg-Barnett phase operators and root-of-unity deformed oscillator checks",
               "pbphase"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunManifest manifest;
  manifest.suites = {"all"};
  std::string out_path;
  std::string format = "json";
  std::string state_path;
  std::string mode = "hamiltonian";
  std::size_t steps = 1;
  std::string object;

  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  add_manifest_options(*verify, manifest, out_path, true);
  verify->add_option("--suite", manifest.suites,
                     "pb-core, gdo, evolution, cross-module or all (repeatable)");
  verify->add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* evolve = app.add_subcommand("evolve", "evolve a state file through full cycles");
  add_manifest_options(*evolve, manifest, out_path, false);
  evolve->add_option("--state", state_path, "input state JSON")->required();
  evolve->add_option("--mode", mode, "hamiltonian or shift")
      ->check(CLI::IsMember({"hamiltonian", "shift"}));
  evolve->add_option("--steps", steps, "number of cycles / shift applications");

  auto* dump = app.add_subcommand("dump", "write an operator or frame as JSON");
  add_manifest_options(*dump, manifest, out_path, true);
  dump->add_option("--object", object, "phase-states, phi, exp-iphi, qN, A, Adag, H, commutators")
      ->required()
      ->check(CLI::IsMember(dump_objects()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      manifest.format = format == "csv"      ? ReportFormat::csv
                        : format == "pretty" ? ReportFormat::pretty
                                             : ReportFormat::json;
      const VerificationReport report = cmd_verify(manifest);
      emit(render_report(report), out_path, out);
      if (any_failed(report.records)) {
        for (const auto& r : report.records) {
          if (r.status == CheckStatus::fail) {
            err << "FAIL " << r.check_id << ": deviation " << format_double(r.max_deviation)
                << " > " << format_double(r.tolerance) << "\n";
          }
        }
        return kExitCheckFailed;
      }
      return kExitOk;
    }
    if (evolve->parsed()) {
      const StateVector input = read_state_file(state_path);
      if (manifest.dim == 0) manifest.dim = input.dim();
      const EvolveMode m = mode == "shift" ? EvolveMode::shift : EvolveMode::hamiltonian;
      const EvolveResult result = cmd_evolve(manifest, input, m, steps);
      if (result.input_normalized) {
        err << "warning: input state norm " << format_double(result.input_norm)
            << " normalized to 1\n";
      }
      emit(render_evolve(manifest, result, m, steps), out_path, out);
      return kExitOk;
    }
    emit(cmd_dump(manifest, object), out_path, out);
    return kExitOk;
  } catch (const NumericsError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pbphase
