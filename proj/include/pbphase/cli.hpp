#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pbphase/report.hpp"

namespace pbphase {

// Exit-status contract of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the manifest's suites in canonical order. Throws ConfigError /
// ProfileError / FormatError for an unusable manifest.
VerificationReport cmd_verify(const RunManifest& manifest);

enum class EvolveMode { hamiltonian, shift };

struct EvolveResult {
  StateVector state;
  bool input_normalized = false;
  double input_norm = 1.0;
  std::optional<double> global_phase;
};

// hamiltonian: U(2 pi/omega)^steps; shift: (q^{-N_eta})^steps.
EvolveResult cmd_evolve(const RunManifest& manifest, const StateVector& input,
                        EvolveMode mode, std::size_t steps);
std::string render_evolve(const RunManifest& manifest, const EvolveResult& result,
                          EvolveMode mode, std::size_t steps);

const std::vector<std::string>& dump_objects();
// Throws std::invalid_argument for unknown object names.
std::string cmd_dump(const RunManifest& manifest, const std::string& object);

// argv-style entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbphase
