#include "pbphase/evolution.hpp"
#include "pbphase/gdo.hpp"
#include "test_helpers.hpp"

using namespace pbphase;
using namespace test_helpers;

namespace {
constexpr double kTight = 1e-12;
}

TEST_CASE("hamiltonian spectrum") {
  CHECK(diff(hamiltonian(SpaceConfig::from_dim(1)), {{1.0}}) == 0.0);
  CHECK(diff(hamiltonian(SpaceConfig::from_dim(2)), {{0.5, 0.0}, {0.0, 2.5}}) == 0.0);
  CHECK(diff(hamiltonian(SpaceConfig::from_dim(3)),
             {{0.5, 0.0, 0.0}, {0.0, 1.5, 0.0}, {0.0, 0.0, 4.0}}) == 0.0);
  CHECK(hamiltonian(SpaceConfig::from_dim(3)).has_tag(Tag::hermitian));
  CHECK_THROWS_AS(hamiltonian(SpaceConfig::from_dim(2), 0.0), ConfigError);
  CHECK_THROWS_AS(hamiltonian(SpaceConfig::from_dim(2), -1.0), ConfigError);

  for (std::size_t dim = 1; dim <= 32; ++dim) {
    const double omega = 0.5 + 0.1 * static_cast<double>(dim);
    const OscillatorSpectrum sp = oscillator_spectrum(SpaceConfig::from_dim(dim), omega);
    for (std::size_t n = 0; n + 1 < dim; ++n) CHECK(sp.energies[n] < sp.energies[n + 1]);
    const double s = static_cast<double>(dim - 1);
    CHECK(sp.energies.back() - (s + 0.5) * omega ==
          doctest::Approx(static_cast<double>(dim) / 2.0 * omega));
  }
}

TEST_CASE("time_evolution") {
  CHECK(max_abs_diff(time_evolution(SpaceConfig::from_dim(4), 1.0, 0.0), OperatorMatrix::identity(4)) ==
        0.0);
  CHECK(diff(time_evolution(SpaceConfig::from_dim(2), 1.0, cycle_period(1.0)),
             {{-1.0, 0.0}, {0.0, -1.0}}) < kTight);
  CHECK(diff(time_evolution(SpaceConfig::from_dim(3), 1.0, cycle_period(1.0)),
             {{-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 1.0}}) < kTight);
  // omega only rescales time
  CHECK(diff(time_evolution(SpaceConfig::from_dim(3), 2.5, cycle_period(2.5)),
             {{-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 1.0}}) < kTight);
}

TEST_CASE("group law and multi-cycle powers") {
  for (std::size_t dim = 1; dim <= 16; ++dim) {
    const SpaceConfig cfg = SpaceConfig::from_dim(dim);
    const double tol = cfg.tolerances().op;
    for (double t1 : {0.1, 1.3, 5.0}) {
      for (double t2 : {0.7, 2.2}) {
        CHECK(max_abs_diff(mat_mul(time_evolution(cfg, 1.0, t1), time_evolution(cfg, 1.0, t2)),
                           time_evolution(cfg, 1.0, t1 + t2)) <= tol);
      }
    }
    const OperatorMatrix u = time_evolution(cfg, 1.0, cycle_period(1.0));
    CHECK(u.has_tag(Tag::unitary));
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(max_abs_diff(time_evolution(cfg, 1.0, static_cast<double>(k) * cycle_period(1.0)),
                         matrix_power(u, k)) <= tol);
    }
  }
}

TEST_CASE("cycle_phase_per_level") {
  for (std::size_t dim = 1; dim <= 32; ++dim) {
    const SpaceConfig cfg = SpaceConfig::from_dim(dim);
    const auto phases = cycle_phase_per_level(cfg);
    for (std::size_t n = 0; n + 1 < dim; ++n) CHECK(std::abs(phases[n] + 1.0) < kTight);
    // top level: -1 for even dim, +1 for odd dim (including dim 1)
    const double top = dim % 2 == 0 ? -1.0 : 1.0;
    CHECK(std::abs(phases.back() - top) < kTight);
    const auto u = time_evolution(cfg, 1.0, cycle_period(1.0)).diagonal_entries();
    for (std::size_t n = 0; n < dim; ++n) CHECK(std::abs(phases[n] - u[n]) <= cfg.tolerances().elem);
  }
}

TEST_CASE("classify_cycle") {
  const CycleOutcome c2 = classify_cycle(SpaceConfig::from_dim(2));
  CHECK(c2.classification == CycleClass::global_sign_flip);
  REQUIRE(c2.global_phase);
  CHECK(phase_distance(*c2.global_phase, oracle::pi) <= 1e-9);

  CHECK(classify_cycle(SpaceConfig::from_dim(4)).classification == CycleClass::global_sign_flip);
  for (const auto& p : classify_cycle(SpaceConfig::from_dim(4)).per_level_phase) {
    CHECK(std::abs(p + 1.0) < kTight);
  }

  const CycleOutcome c3 = classify_cycle(SpaceConfig::from_dim(3));
  CHECK(c3.classification == CycleClass::mixed_phases);
  CHECK_FALSE(c3.global_phase);
  CHECK(std::abs(c3.per_level_phase[0] + 1.0) < kTight);
  CHECK(std::abs(c3.per_level_phase[1] + 1.0) < kTight);
  CHECK(std::abs(c3.per_level_phase[2] - 1.0) < kTight);

  const CycleOutcome c1 = classify_cycle(SpaceConfig::from_dim(1));
  CHECK(c1.classification == CycleClass::identity);
  CHECK(cycle_class_name(c1.classification) == "Identity");
}

TEST_CASE("odd dims are far from every scalar multiple of I") {
  for (std::size_t dim = 3; dim <= 31; dim += 2) {
    const auto d = time_evolution(SpaceConfig::from_dim(dim), 1.0, cycle_period(1.0)).diagonal_entries();
    // best scalar fit is bounded below by half the spread between -1 and +1 entries
    CHECK(std::abs(d.back() - d.front()) / 2.0 >= 1.0 - 1e-12);
  }
}

TEST_CASE("eta_sector_map") {
  const auto e2 = eta_sector_map(SpaceConfig::from_dim(2));
  CHECK(e2 == std::vector<double>{0.5, 1.5});
  const auto e3 = eta_sector_map(SpaceConfig::from_dim(3));
  CHECK(e3 == std::vector<double>{0.5, 0.5, 2.0});
  const auto e1 = eta_sector_map(SpaceConfig::from_dim(1));
  CHECK(e1 == std::vector<double>{1.0});
}

TEST_CASE("compare_shift_vs_evolution") {
  for (std::size_t dim = 1; dim <= 16; ++dim) {
    const auto records = compare_shift_vs_evolution(SpaceConfig::from_dim(dim));
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
      CHECK(r.status == CheckStatus::pass);
      CHECK(r.max_deviation <= 1e-9);
    }
  }
}

TEST_CASE("half-integer shift cycle reproduces the even-dim evolution") {
  for (std::size_t dim = 2; dim <= 16; dim += 2) {
    const SpaceConfig cfg = SpaceConfig::from_dim(dim, 0.3);
    CHECK(max_abs_diff(cycle_operator_power(cfg, EtaParameter(0.5), dim),
                       time_evolution(cfg, 1.0, cycle_period(1.0))) <= cfg.tolerances().op);
  }
}
