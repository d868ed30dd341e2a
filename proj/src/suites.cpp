#include "pbphase/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pbphase/evolution.hpp"
#include "pbphase/format.hpp"

namespace pbphase {

namespace {

double frame_completeness_deviation(const Frame& frame) {
  const std::size_t dim = frame.size();
  std::vector<Complex> ones(dim, 1.0);
  return max_abs_diff(spectral_synthesize(frame, ones, 1.0),
                      OperatorMatrix::identity(dim));
}

double diagonal_in_frame_deviation(const OperatorMatrix& m, const Frame& frame,
                                   const std::vector<Complex>& expected) {
  return max_abs_diff(to_frame_coordinates(m, frame), OperatorMatrix::diagonal(expected));
}

}  // namespace

std::vector<CheckRecord> run_pb_core_suite(const SuiteOptions& opts) {
  const SpaceConfig& cfg = opts.config;
  const std::size_t dim = cfg.dim();
  const TolerancePolicy tol = cfg.tolerances();
  const PhaseFrame frame = build_phase_frame(cfg);
  std::vector<CheckRecord> out;

  out.push_back(make_check("phase_frame_orthonormal",
      "<theta_m|theta_m'> = delta_mm'", frame.orthonormality_deviation, tol.op));
  out.push_back(make_check("phase_frame_completeness",
      "sum_m |theta_m><theta_m| = I", frame_completeness_deviation(frame.states), tol.op));

  // DFT route: e^{i n theta_m} = e^{i n theta0} q^{nm}
  double dev_comp = 0.0;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t n = 0; n < dim; ++n) {
      const Complex expected = norm * std::polar(1.0, static_cast<double>(n) * cfg.theta0()) *
                               cfg.q_power(static_cast<long long>(n * m));
      dev_comp = std::max(dev_comp, std::abs(frame.states[m][n] - expected));
    }
  }
  out.push_back(make_check("phase_frame_components",
      "<n|theta_m> = e^{in theta_m}/sqrt(s+1)", dev_comp, tol.elem));

  const OperatorMatrix phi = hermitian_phase_operator(cfg);
  out.push_back(make_check("phi_hermitian", "Phi = Phi^dagger",
      certify(phi, Tag::hermitian, tol.op).deviation, tol.op));
  std::vector<Complex> thetas(dim);
  std::vector<Complex> phases(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    thetas[m] = cfg.theta(m);
    phases[m] = std::polar(1.0, cfg.theta(m));
  }
  out.push_back(make_check("phi_spectrum", "Phi|theta_m> = theta_m|theta_m>",
      diagonal_in_frame_deviation(phi, frame.states, thetas), tol.op));

  const OperatorMatrix exp_phi = unitary_phase_operator(cfg);
  double dev_down = 0.0;
  for (std::size_t n = 1; n < dim; ++n) {
    dev_down = std::max(dev_down, max_abs_diff(mat_apply(exp_phi, StateVector::basis(dim, n)),
                                               StateVector::basis(dim, n - 1)));
  }
  out.push_back(make_check("exp_iphi_shift_down", "e^{iPhi}|n> = |n-1>, n != 0",
      dev_down, tol.elem));
  const Complex corner = std::polar(1.0, static_cast<double>(dim) * cfg.theta0());
  out.push_back(make_check("exp_iphi_shift_corner", "e^{iPhi}|0> = e^{i(s+1)theta0}|s>",
      max_abs_diff(mat_apply(exp_phi, StateVector::basis(dim, 0)),
                   StateVector::basis(dim, dim - 1).scaled(corner)),
      tol.elem, "factor=" + format_complex(corner)));
  out.push_back(make_check("exp_iphi_realization_vs_spectrum",
      "|0><1| + ... + e^{i(s+1)theta0}|s><0| = sum_m e^{i theta_m}|theta_m><theta_m|",
      max_abs_diff(exp_phi, unitary_phase_from_spectrum(cfg)), tol.op));
  out.push_back(make_check("exp_iphi_diagonal_in_phase_frame",
      "e^{iPhi}|theta_m> = e^{i theta_m}|theta_m>",
      diagonal_in_frame_deviation(exp_phi, frame.states, phases), tol.op));
  out.push_back(make_check("exp_iphi_unitary", "e^{iPhi} unitary",
      certify(exp_phi, Tag::unitary, tol.op).deviation, tol.op));

  const OperatorMatrix shift = number_shift_operator(cfg, ShiftSign::minus);
  out.push_back(make_check("qN_realization",
      "q^{-N} = |theta_0><theta_1| + ... + |theta_s><theta_0|",
      max_abs_diff(shift, number_shift_realization(cfg)), tol.op));
  double dev_shift = 0.0;
  for (std::size_t m = 0; m < dim; ++m) {
    const auto& target = frame.states[wrap_index(static_cast<long long>(m) - 1, dim)];
    dev_shift = std::max(dev_shift, max_abs_diff(mat_apply(shift, frame.states[m]), target));
  }
  out.push_back(make_check("qN_shift_phase_states",
      "q^{-N}|theta_m> = |theta_{m-1}>, q^{-N}|theta_0> = |theta_s>", dev_shift, tol.op));
  out.push_back(make_check("qN_diagonal_in_number_basis", "q^{-N}|n> = q^{-n}|n>",
      certify(shift, Tag::diagonal, tol.op).deviation, tol.op));

  out.push_back(make_check("exp_iphi_cycle", "(e^{iPhi})^{s+1} = e^{i(s+1)theta0} I",
      max_abs_diff(matrix_power(exp_phi, dim),
                   scale(OperatorMatrix::identity(dim), corner)),
      tol.op));
  out.push_back(make_check("qN_cycle", "(q^{-N})^{s+1} = I",
      max_abs_diff(matrix_power(shift, dim), OperatorMatrix::identity(dim)), tol.op));
  out.push_back(make_check("weyl_relation", "q^{-N} e^{iPhi} = q e^{iPhi} q^{-N}",
      max_abs_diff(mat_mul(shift, exp_phi), scale(mat_mul(exp_phi, shift), cfg.q())),
      tol.op));

  const OperatorMatrix direct = commutator(phi, number_operator(cfg));
  const OperatorMatrix closed = commutator_closed_form(cfg);
  out.push_back(make_check("commutator_closed_form",
      "[Phi,N] = closed form from the phase-state expansion",
      max_abs_diff(direct, closed), tol.op));
  out.push_back(make_flagged_check("commutator_printed_form",
      "[Phi,N] = (2pi/(s+1)) sum (n'-n)|n'><n| / (exp[2pi i(n-n')/(s+1)]-1)",
      max_abs_diff(commutator_rhs_printed(cfg), closed), tol.op,
      "printed double sum vs closed form; expected discrepancy"));
  return out;
}

std::vector<CheckRecord> run_gdo_suite(const SuiteOptions& opts) {
  const SpaceConfig& cfg = opts.config;
  const std::size_t dim = cfg.dim();
  const TolerancePolicy tol = cfg.tolerances();
  const double eta = opts.eta.value;
  const DeformationProfile& profile = opts.profile;
  const GeneralizedFrame gf = build_generalized_frame(cfg, opts.eta);
  const PhaseFrame pb = build_phase_frame(cfg);
  std::vector<CheckRecord> out;

  out.push_back(make_check("generalized_frame_orthonormal",
      "<n+eta|n'+eta> = delta, <theta_m|theta_m'> = delta (modified states)",
      std::max(gf.number_deviation, gf.phase_deviation), tol.op));

  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  double dev_inverse = 0.0;
  double dev_coeff = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    const double level = static_cast<double>(n) + eta;
    std::vector<Complex> amp(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      const Complex c = std::polar(norm, -level * cfg.theta(m));
      for (std::size_t r = 0; r < dim; ++r) amp[r] += c * pb.states[m][r];
      dev_coeff = std::max(dev_coeff,
          std::abs(inner(gf.number_states[n], gf.phase_states[m]) -
                   std::polar(norm, level * cfg.theta(m))));
    }
    dev_inverse = std::max(dev_inverse, max_abs_diff(gf.number_states[n], StateVector(amp)));
  }
  out.push_back(make_check("continuous_shift_inverse_transform",
      "e^{-i eta Phi}|n> = (s+1)^{-1/2} sum_m e^{-i(n+eta)theta_m}|theta_m>",
      dev_inverse, tol.op));
  out.push_back(make_check("modified_phase_state_coefficients",
      "<n+eta|theta_m> = e^{i(n+eta)theta_m}/sqrt(s+1)", dev_coeff, tol.op));

  const LadderOperators ladder = build_ladder_operators(gf, profile);
  const OperatorMatrix& a = ladder.annihilation;
  const OperatorMatrix& adag = ladder.creation;
  const Complex corner = std::polar(1.0, static_cast<double>(dim) * cfg.theta0());

  double dev_q = 0.0;
  double dev_a = 0.0;
  double dev_adag = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    const StateVector& ket = gf.number_states[n];
    dev_q = std::max(dev_q, max_abs_diff(mat_apply(ladder.q_number, ket),
        ket.scaled(cfg.q_real_power(static_cast<double>(n) + eta))));
    const StateVector a_expected =
        n == 0 ? gf.number_states[dim - 1].scaled(std::sqrt(profile[0]) * corner)
               : gf.number_states[n - 1].scaled(std::sqrt(profile[n]));
    dev_a = std::max(dev_a, max_abs_diff(mat_apply(a, ket), a_expected));
    const StateVector adag_expected =
        n + 1 == dim ? gf.number_states[0].scaled(std::sqrt(profile[0]) * std::conj(corner))
                     : gf.number_states[n + 1].scaled(std::sqrt(profile[n + 1]));
    dev_adag = std::max(dev_adag, max_abs_diff(mat_apply(adag, ket), adag_expected));
  }
  out.push_back(make_check("qN_eigen_action", "q^{N_eta}|n+eta> = q^{n+eta}|n+eta>",
      dev_q, tol.op));
  out.push_back(make_check("ladder_annihilation_action",
      "A|n+eta> = sqrt(F_n)|n+eta-1>, A|eta> = sqrt(F_0) e^{i(s+1)theta0}|s+eta>",
      dev_a, tol.op));
  out.push_back(make_check("ladder_creation_action",
      "A^dag|n+eta> = sqrt(F_{n+1})|n+eta+1>, A^dag|s+eta> = e^{-i(s+1)theta0} sqrt(F_0)|eta>",
      dev_adag, tol.op));
  out.push_back(make_check("ladder_adjoint", "A^dag = (A)^dagger",
      max_abs_diff(adag, adjoint(a)), tol.op));

  std::vector<Complex> f(dim);
  std::vector<Complex> f_shifted(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    f[n] = profile[n];
    f_shifted[n] = profile[(n + 1) % dim];
  }
  out.push_back(make_check("ladder_closure_AdagA", "A^dag A = diag(F_0..F_s)",
      diagonal_in_frame_deviation(mat_mul(adag, a), gf.number_states, f), tol.op));
  out.push_back(make_check("ladder_closure_AAdag", "A A^dag = diag(F_1..F_s, F_0)",
      diagonal_in_frame_deviation(mat_mul(a, adag), gf.number_states, f_shifted), tol.op));

  if (profile.all_positive()) {
    const OperatorMatrix recovered = recover_phase_operator(a, profile, gf);
    out.push_back(make_check("phase_operator_recovery",
        "A F(q^{N_eta})^{-1/2} = e^{iPhi}",
        max_abs_diff(recovered, unitary_phase_operator(cfg)), tol.op));
    out.push_back(make_check("recovered_phase_unitary", "A F^{-1/2} unitary",
        certify(recovered, Tag::unitary, tol.op).deviation, tol.op));
  }

  const OperatorMatrix shift = generalized_number_shift(gf, ShiftSign::minus);
  out.push_back(make_check("modified_shift_realization",
      "q^{-N_eta} = sum_{m>=1} |theta_{m-1}><theta_m| + e^{-i2pi eta}|theta_s><theta_0|",
      max_abs_diff(shift, modified_number_shift(cfg, opts.eta)), tol.op));
  out.push_back(make_check("continuous_shift_unitary", "e^{-i eta Phi} unitary",
      certify(continuous_shift_operator(cfg, opts.eta), Tag::unitary, tol.op).deviation,
      tol.op));

  DualityResult duality = duality_check(cfg, opts.eta);
  for (auto& r : duality.records) out.push_back(std::move(r));

  const OperatorMatrix cycle = matrix_power(shift, dim);
  const Complex factor = std::polar(1.0, -kTwoPi * eta);
  out.push_back(make_check("cycle_identity", "(q^{-N_eta})^{s+1} = e^{-i2pi eta} I",
      max_abs_diff(cycle, scale(OperatorMatrix::identity(dim), factor)), tol.op,
      "factor=" + format_complex(factor)));

  const CycleSign sign = classify_eta_cycle(opts.eta);
  const Complex expected = sign == CycleSign::no_sign_change ? Complex(1.0)
                           : sign == CycleSign::sign_change  ? Complex(-1.0)
                                                             : factor;
  const char* label = sign == CycleSign::no_sign_change ? "no_sign_change"
                      : sign == CycleSign::sign_change  ? "sign_change"
                                                        : "general_phase";
  out.push_back(make_check("cycle_sign_classification",
      "eta integer -> +I, eta half-odd -> -I after s+1 shifts",
      max_abs_diff(cycle, scale(OperatorMatrix::identity(dim), expected)), tol.op,
      label));
  return out;
}

std::vector<CheckRecord> run_evolution_suite(const SuiteOptions& opts) {
  const SpaceConfig& cfg = opts.config;
  const std::size_t dim = cfg.dim();
  const TolerancePolicy tol = cfg.tolerances();
  const double omega = opts.omega;
  const double period = cycle_period(omega);
  std::vector<CheckRecord> out;

  const OscillatorSpectrum spec = oscillator_spectrum(cfg, omega);
  double dev_spec = std::abs(spec.energies.back() -
                             (static_cast<double>(cfg.s()) + 0.5) * omega -
                             static_cast<double>(dim) / 2.0 * omega);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    // strict increase; a violation counts its full size plus one level spacing
    if (spec.energies[n + 1] <= spec.energies[n]) {
      dev_spec = std::max(dev_spec, spec.energies[n] - spec.energies[n + 1] + omega);
    }
  }
  out.push_back(make_check("hamiltonian_spectrum",
      "E_n = omega(n + 1/2 + (s+1)/2 delta_{n,s}), strictly increasing", dev_spec,
      tol.elem));
  out.push_back(make_check("hamiltonian_hermitian", "H = H^dagger",
      certify(hamiltonian(cfg, omega), Tag::hermitian, tol.op).deviation, tol.op));

  const OperatorMatrix u = time_evolution(cfg, omega, period);
  out.push_back(make_check("time_evolution_unitary", "U(t) = e^{-iHt} unitary",
      certify(u, Tag::unitary, tol.op).deviation, tol.op));
  constexpr double t1 = 0.37;
  constexpr double t2 = 1.91;
  out.push_back(make_check("time_evolution_group_law", "U(t1)U(t2) = U(t1+t2)",
      max_abs_diff(mat_mul(time_evolution(cfg, omega, t1), time_evolution(cfg, omega, t2)),
                   time_evolution(cfg, omega, t1 + t2)),
      tol.op));
  out.push_back(make_check("multi_cycle_power", "U(3T) = U(T)^3",
      max_abs_diff(time_evolution(cfg, omega, 3.0 * period), matrix_power(u, 3)), tol.op));

  const std::vector<Complex> closed = cycle_phase_per_level(cfg);
  const std::vector<Complex> diag = u.diagonal_entries();
  double dev_levels = 0.0;
  for (std::size_t n = 0; n < dim; ++n) dev_levels = std::max(dev_levels, std::abs(closed[n] - diag[n]));
  out.push_back(make_check("cycle_phase_per_level",
      "<n|U(2pi/omega)|n> = exp(-i2pi{n+1/2+(s+1)delta_{n,s}/2})", dev_levels, tol.elem));

  // even dim: -I; odd dim: diag(-1, ..., -1, +1)
  const CycleOutcome outcome = classify_cycle(cfg, omega);
  std::vector<Complex> expected(dim, -1.0);
  if (dim % 2 == 1) expected.back() = 1.0;
  const CycleClass expected_class = dim % 2 == 0 ? CycleClass::global_sign_flip
                                    : dim == 1   ? CycleClass::identity
                                                 : CycleClass::mixed_phases;
  std::string detail = cycle_class_name(outcome.classification);
  if (outcome.global_phase) detail += " global_phase=" + format_double(*outcome.global_phase);
  CheckRecord parity = make_check("parity_classification",
      "s+1 even -> U(2pi/omega) = -I; s+1 odd -> diag(-1,...,-1,+1)",
      max_abs_diff(u, OperatorMatrix::diagonal(expected)), tol.op, detail);
  if (outcome.classification != expected_class) parity.status = CheckStatus::fail;
  out.push_back(std::move(parity));

  for (auto& r : compare_shift_vs_evolution(cfg, omega)) out.push_back(std::move(r));

  // seeded random superpositions through one cycle
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double dev_random = 0.0;
  constexpr int kSamples = 8;
  for (int k = 0; k < kSamples; ++k) {
    std::vector<Complex> amp(dim);
    for (auto& a : amp) {
      const double re = dist(rng);
      const double im = dist(rng);
      a = Complex(re, im);
    }
    StateVector psi(std::move(amp));
    if (psi.norm() == 0.0) continue;
    psi = psi.normalized();
    const StateVector evolved = mat_apply(u, psi);
    std::vector<Complex> predicted(dim);
    for (std::size_t n = 0; n < dim; ++n) predicted[n] = closed[n] * psi[n];
    dev_random = std::max(dev_random, max_abs_diff(evolved, StateVector(predicted)));
    if (dim % 2 == 0) {
      const PhaseComparison cmp = equal_up_to_global_phase(psi, evolved, tol.norm);
      dev_random = std::max(dev_random, cmp.equal ? phase_distance(*cmp.phase, kPi) : 1.0);
    }
  }
  out.push_back(make_check("random_superposition_cycle",
      "U(2pi/omega) psi = per-level phases applied to psi (global sign flip for even s+1)",
      dev_random, tol.op, "samples=" + std::to_string(kSamples)));
  return out;
}

std::vector<CheckRecord> run_cross_module_suite(const SuiteOptions& opts) {
  const SpaceConfig& cfg = opts.config;
  const std::size_t dim = cfg.dim();
  const TolerancePolicy tol = cfg.tolerances();
  const OperatorMatrix u = time_evolution(cfg, opts.omega, cycle_period(opts.omega));
  std::vector<CheckRecord> out;

  if (dim % 2 == 0) {
    out.push_back(make_check("shift_cycle_matches_evolution",
        "(q^{-N_eta})^{s+1} at eta = 1/2 = U(2pi/omega) = -I",
        max_abs_diff(cycle_operator_power(cfg, EtaParameter(0.5), dim), u), tol.op));
  }

  // one-cycle factor of the eta_n shift operator versus U(T) level by level
  const std::vector<double> sector = eta_sector_map(cfg);
  const std::vector<Complex> diag = u.diagonal_entries();
  double dev_sector = 0.0;
  for (std::size_t n = 0; n < dim; ++n) {
    const EtaParameter eta(sector[n]);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix cycle =
        matrix_power(generalized_number_shift(gf, ShiftSign::minus), dim);
    const Complex factor =
        inner(gf.number_states[n], mat_apply(cycle, gf.number_states[n]));
    dev_sector = std::max(dev_sector, std::abs(factor - diag[n]));
  }
  out.push_back(make_check("sector_shift_cycle_matches_evolution",
      "<n+eta_n|(q^{-N_eta_n})^{s+1}|n+eta_n> = <n|U(2pi/omega)|n>", dev_sector, tol.op));

  const EtaParameter zero(0.0);
  const GeneralizedFrame gf0 = build_generalized_frame(cfg, zero);
  out.push_back(make_check("generalized_shift_reduces_at_eta_zero",
      "q^{-N_eta} at eta = 0 equals q^{-N}",
      max_abs_diff(generalized_number_shift(gf0, ShiftSign::minus),
                   number_shift_operator(cfg, ShiftSign::minus)),
      tol.op));
  out.push_back(make_check("modified_realization_reduces_at_eta_zero",
      "modified q^{-N_eta} realization at eta = 0 equals the phase-state sum for q^{-N}",
      max_abs_diff(modified_number_shift(cfg, zero), number_shift_realization(cfg)), tol.op));

  if (opts.profile.all_positive()) {
    // same recovery under a different offset and the linear profile
    const EtaParameter other(std::abs(opts.eta.value) + 0.5);
    const GeneralizedFrame gf_other = build_generalized_frame(cfg, other);
    const DeformationProfile lin = deformation_linear(cfg, other);
    const GeneralizedFrame gf = build_generalized_frame(cfg, opts.eta);
    const OperatorMatrix r1 = recover_phase_operator(
        build_ladder_operators(gf, opts.profile).annihilation, opts.profile, gf);
    const OperatorMatrix r2 = recover_phase_operator(
        build_ladder_operators(gf_other, lin).annihilation, lin, gf_other);
    out.push_back(make_check("recovered_phase_eta_independent",
        "A F^{-1/2} does not depend on eta or F", max_abs_diff(r1, r2), tol.op));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pb-core", "gdo", "evolution",
                                              "cross-module"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "pb-core") return run_pb_core_suite(opts);
  if (name == "gdo") return run_gdo_suite(opts);
  if (name == "evolution") return run_evolution_suite(opts);
  if (name == "cross-module") return run_cross_module_suite(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace pbphase
