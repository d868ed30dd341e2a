#pragma once

// Verification suites. Each returns its records in a fixed order so that
// reports are reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbphase/gdo.hpp"
#include "pbphase/pb_core.hpp"
#include "pbphase/verification.hpp"

namespace pbphase {

struct SuiteOptions {
  SpaceConfig config;
  EtaParameter eta;
  double omega = 1.0;
  DeformationProfile profile;
  std::uint64_t seed = 0;
};

std::vector<CheckRecord> run_pb_core_suite(const SuiteOptions& opts);
std::vector<CheckRecord> run_gdo_suite(const SuiteOptions& opts);
std::vector<CheckRecord> run_evolution_suite(const SuiteOptions& opts);
std::vector<CheckRecord> run_cross_module_suite(const SuiteOptions& opts);

// Canonical suite order: pb-core, gdo, evolution, cross-module.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace pbphase
