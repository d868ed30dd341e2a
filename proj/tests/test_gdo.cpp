#include "pbphase/gdo.hpp"
#include "test_helpers.hpp"

using namespace pbphase;
using namespace test_helpers;

namespace {

constexpr double kTight = 1e-13;
const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("build_generalized_frame at eta = 0 is the standard frame") {
  const SpaceConfig cfg = SpaceConfig::from_dim(5, 0.3);
  const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(0.0));
  const PhaseFrame pf = build_phase_frame(cfg);
  for (std::size_t n = 0; n < 5; ++n) {
    CHECK(max_abs_diff(gf.number_states[n], StateVector::basis(5, n)) <= cfg.tolerances().elem);
    CHECK(max_abs_diff(gf.phase_states[n], pf.states[n]) <= cfg.tolerances().elem);
  }
}

TEST_CASE("integer eta only rephases the expansion coefficients") {
  const SpaceConfig cfg = SpaceConfig::from_dim(2);
  const GeneralizedFrame g0 = build_generalized_frame(cfg, EtaParameter(0.0));
  const GeneralizedFrame g1 = build_generalized_frame(cfg, EtaParameter(1.0));
  CHECK(std::max(g1.number_deviation, g1.phase_deviation) <= cfg.tolerances().op);
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t n = 0; n < 2; ++n) {
      const Complex c0 = inner(g0.number_states[n], g0.phase_states[m]);
      const Complex c1 = inner(g1.number_states[n], g1.phase_states[m]);
      CHECK(std::abs(c1 - std::polar(1.0, cfg.theta(m)) * c0) < kTight);
    }
  }
}

TEST_CASE("continuous shift preserves orthonormality") {
  const SpaceConfig cfg = SpaceConfig::from_dim(2);
  const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(0.5));
  CHECK(std::abs(inner(gf.number_states[0], gf.number_states[1])) <= cfg.tolerances().elem);
}

TEST_CASE("e^{-i eta Phi}|n> against the inverse-transform oracle") {
  for (std::size_t dim = 1; dim <= 16; ++dim) {
    for (double eta : {0.25, 0.5, 1.0, -0.7}) {
      const SpaceConfig cfg = SpaceConfig::from_dim(dim, 0.3);
      const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(eta));
      for (std::size_t n = 0; n < dim; ++n) {
        CHECK(diff(gf.number_states[n], oracle::generalized_number_state(dim, 0.3, eta, n)) <=
              cfg.tolerances().elem);
      }
    }
  }
}

TEST_CASE("deformation_linear") {
  const auto p3 = deformation_linear(SpaceConfig::from_dim(3), EtaParameter(0.5));
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == 0.5);
  CHECK(p3[1] == 1.5);
  CHECK(p3[2] == 2.5);
  CHECK(p3.variant() == ProfileVariant::linear);
  const auto p2 = deformation_linear(SpaceConfig::from_dim(2), EtaParameter(1.0));
  CHECK(p2[0] == 1.0);
  CHECK(p2[1] == 2.0);
  CHECK_THROWS_AS(deformation_linear(SpaceConfig::from_dim(2), EtaParameter(0.0)), ProfileError);
  CHECK_THROWS_AS(deformation_linear(SpaceConfig::from_dim(2), EtaParameter(-0.5)), ProfileError);
}

TEST_CASE("user profiles") {
  const auto p = DeformationProfile::from_values({2.0, 0.0, 1.0}, 3);
  CHECK(p.variant() == ProfileVariant::user);
  CHECK_FALSE(p.all_positive());
  CHECK_THROWS_AS(DeformationProfile::from_values({0.0, 1.0}, 2), ProfileError);
  CHECK_THROWS_AS(DeformationProfile::from_values({1.0, -1.0}, 2), ProfileError);
  CHECK_THROWS_AS(DeformationProfile::from_values({1.0, 1.0}, 3), ProfileError);
  CHECK_THROWS_AS(EtaParameter(NAN), ConfigError);
}

TEST_CASE("ladder operators") {
  SUBCASE("single level") {
    const SpaceConfig cfg = SpaceConfig::from_dim(1, 0.8);
    const auto profile = deformation_linear(cfg, EtaParameter(0.5));
    const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(0.5));
    const LadderOperators l = build_ladder_operators(gf, profile);
    CHECK(std::abs(l.annihilation(0, 0) - std::sqrt(0.5) * std::polar(1.0, 0.8)) < kTight);
  }
  SUBCASE("dim 2 entries in the generalized frame") {
    const SpaceConfig cfg = SpaceConfig::from_dim(2);
    const EtaParameter eta(0.5);
    const auto profile = deformation_linear(cfg, eta);
    CHECK(diff(annihilation_in_frame(cfg, profile),
               {{0.0, std::sqrt(1.5)}, {std::sqrt(0.5), 0.0}}) < kTight);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const LadderOperators l = build_ladder_operators(gf, profile);
    CHECK(diff(to_frame_coordinates(l.annihilation, gf.number_states),
               {{0.0, std::sqrt(1.5)}, {std::sqrt(0.5), 0.0}}) < kTight);
  }
  SUBCASE("closure relations") {
    for (std::size_t dim = 1; dim <= 12; ++dim) {
      for (double eta : {0.25, 0.5, 1.5}) {
        const SpaceConfig cfg = SpaceConfig::from_dim(dim, 1.1);
        const auto profile = deformation_linear(cfg, EtaParameter(eta));
        const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(eta));
        const LadderOperators l = build_ladder_operators(gf, profile);
        std::vector<Complex> f(dim);
        std::vector<Complex> f_shift(dim);
        for (std::size_t n = 0; n < dim; ++n) {
          f[n] = profile[n];
          f_shift[n] = profile[(n + 1) % dim];
        }
        const double tol = cfg.tolerances().op;
        CHECK(max_abs_diff(to_frame_coordinates(mat_mul(l.creation, l.annihilation), gf.number_states),
                           OperatorMatrix::diagonal(f)) <= tol);
        CHECK(max_abs_diff(to_frame_coordinates(mat_mul(l.annihilation, l.creation), gf.number_states),
                           OperatorMatrix::diagonal(f_shift)) <= tol);
        CHECK(max_abs_diff(l.creation, adjoint(l.annihilation)) <= tol);
        for (std::size_t n = 0; n < dim; ++n) {
          CHECK(max_abs_diff(mat_apply(l.q_number, gf.number_states[n]),
                             gf.number_states[n].scaled(
                                 cfg.q_real_power(static_cast<double>(n) + eta))) <= tol);
        }
      }
    }
  }
}

TEST_CASE("recover_phase_operator") {
  SUBCASE("dim 2") {
    const SpaceConfig cfg = SpaceConfig::from_dim(2);
    const EtaParameter eta(0.5);
    const auto profile = deformation_linear(cfg, eta);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix r =
        recover_phase_operator(build_ladder_operators(gf, profile).annihilation, profile, gf);
    CHECK(diff(r, {{0.0, 1.0}, {1.0, 0.0}}) < kTight);
    CHECK(r.has_tag(Tag::unitary));
  }
  SUBCASE("dim 3, theta0 = 0.4") {
    const SpaceConfig cfg = SpaceConfig::from_dim(3, 0.4);
    const EtaParameter eta(0.5);
    const auto profile = deformation_linear(cfg, eta);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix r =
        recover_phase_operator(build_ladder_operators(gf, profile).annihilation, profile, gf);
    CHECK(max_abs_diff(r, unitary_phase_operator(cfg)) <= cfg.tolerances().op);
  }
  SUBCASE("dim 1") {
    const SpaceConfig cfg = SpaceConfig::from_dim(1, 0.6);
    const EtaParameter eta(0.5);
    const auto profile = deformation_linear(cfg, eta);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix r =
        recover_phase_operator(build_ladder_operators(gf, profile).annihilation, profile, gf);
    CHECK(std::abs(r(0, 0) - std::polar(1.0, 0.6)) < kTight);
  }
  SUBCASE("user profile with a zero level is refused") {
    const SpaceConfig cfg = SpaceConfig::from_dim(3);
    const auto profile = DeformationProfile::from_values({1.0, 0.0, 4.0}, 3);
    const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(0.5));
    const LadderOperators l = build_ladder_operators(gf, profile);
    CHECK_THROWS_AS(recover_phase_operator(l.annihilation, profile, gf), ProfileError);
  }
  SUBCASE("arbitrary positive user profile") {
    const SpaceConfig cfg = SpaceConfig::from_dim(4, 2.9);
    const auto profile = DeformationProfile::from_values({0.3, 7.0, 2.5, 0.01}, 4);
    const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(1.25));
    const OperatorMatrix r =
        recover_phase_operator(build_ladder_operators(gf, profile).annihilation, profile, gf);
    CHECK(max_abs_diff(r, unitary_phase_operator(cfg)) <= cfg.tolerances().op);
  }
}

TEST_CASE("modified_number_shift") {
  SUBCASE("eta = 0 reduces to the plain realization") {
    for (std::size_t dim = 1; dim <= 8; ++dim) {
      const SpaceConfig cfg = SpaceConfig::from_dim(dim, 0.3);
      CHECK(max_abs_diff(modified_number_shift(cfg, EtaParameter(0.0)),
                         number_shift_realization(cfg)) <= cfg.tolerances().op);
    }
  }
  SUBCASE("dim 2, eta = 1/2 in generalized coordinates") {
    const SpaceConfig cfg = SpaceConfig::from_dim(2);
    const EtaParameter eta(0.5);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix m = modified_number_shift(cfg, eta);
    const Complex f = std::polar(1.0, -oracle::pi / 2.0);
    CHECK(diff(to_frame_coordinates(m, gf.number_states), {{f, 0.0}, {0.0, -f}}) < kTight);
    CHECK(max_abs_diff(m, generalized_number_shift(gf, ShiftSign::minus)) <= cfg.tolerances().op);
  }
  SUBCASE("corner action picks up e^{-i 2 pi eta}") {
    const SpaceConfig cfg = SpaceConfig::from_dim(4, 1.0);
    const EtaParameter eta(0.3);
    const GeneralizedFrame gf = build_generalized_frame(cfg, eta);
    const OperatorMatrix m = modified_number_shift(cfg, eta);
    CHECK(max_abs_diff(mat_apply(m, gf.phase_states[0]),
                       gf.phase_states[3].scaled(std::polar(1.0, -2.0 * oracle::pi * 0.3))) <=
          cfg.tolerances().op);
  }
}

TEST_CASE("cycle_operator_power") {
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    const SpaceConfig cfg = SpaceConfig::from_dim(dim, 0.9);
    const double tol = cfg.tolerances().op;
    const OperatorMatrix id = OperatorMatrix::identity(dim);
    CHECK(max_abs_diff(cycle_operator_power(cfg, EtaParameter(2.0), dim), id) <= tol);
    CHECK(max_abs_diff(cycle_operator_power(cfg, EtaParameter(0.5), dim), scale(id, -1.0)) <= tol);
  }
  const SpaceConfig c3 = SpaceConfig::from_dim(3);
  CHECK(max_abs_diff(cycle_operator_power(c3, EtaParameter(0.25), 3),
                     scale(OperatorMatrix::identity(3), -I)) <= c3.tolerances().op);
  CHECK(max_abs_diff(cycle_operator_power(c3, EtaParameter(0.25), 0), OperatorMatrix::identity(3)) ==
        0.0);
}

TEST_CASE("classify_eta_cycle") {
  CHECK(classify_eta_cycle(EtaParameter(0.0)) == CycleSign::no_sign_change);
  CHECK(classify_eta_cycle(EtaParameter(-1.0)) == CycleSign::no_sign_change);
  CHECK(classify_eta_cycle(EtaParameter(3.0 + 5e-10)) == CycleSign::no_sign_change);
  CHECK(classify_eta_cycle(EtaParameter(0.5)) == CycleSign::sign_change);
  CHECK(classify_eta_cycle(EtaParameter(-1.5)) == CycleSign::sign_change);
  CHECK(classify_eta_cycle(EtaParameter(0.25)) == CycleSign::general_phase);
  CHECK(classify_eta_cycle(EtaParameter(1.0 + 1e-6)) == CycleSign::general_phase);
}

TEST_CASE("duality_check") {
  SUBCASE("eta = 0, theta0 = 0") {
    const DualityResult d = duality_check(SpaceConfig::from_dim(4), EtaParameter(0.0));
    CHECK(std::abs(d.phase_corner - 1.0) < kTight);
    CHECK(std::abs(d.shift_corner - 1.0) < kTight);
    CHECK_FALSE(any_failed(d.records));
    CHECK(d.records.size() == 5);
  }
  SUBCASE("dim 2, eta = 1/2, theta0 = pi/2") {
    const DualityResult d = duality_check(SpaceConfig::from_dim(2, oracle::pi / 2.0), EtaParameter(0.5));
    CHECK(std::abs(d.phase_corner + 1.0) < kTight);
    CHECK(std::abs(d.shift_corner + 1.0) < kTight);
    CHECK_FALSE(any_failed(d.records));
  }
  SUBCASE("dim 5, eta = 0.3, theta0 = 1.1") {
    const SpaceConfig cfg = SpaceConfig::from_dim(5, 1.1);
    const DualityResult d = duality_check(cfg, EtaParameter(0.3));
    for (const auto& r : d.records) {
      CHECK(r.status == CheckStatus::pass);
      CHECK(r.max_deviation <= cfg.tolerances().op);
    }
  }
}

TEST_CASE("q^{-N_eta} and A F^{-1/2} are unitary") {
  for (std::size_t dim = 1; dim <= 10; ++dim) {
    for (double eta : {0.25, 0.5, 1.0, 1.5}) {
      const SpaceConfig cfg = SpaceConfig::from_dim(dim, 0.3);
      const GeneralizedFrame gf = build_generalized_frame(cfg, EtaParameter(eta));
      CHECK(generalized_number_shift(gf, ShiftSign::minus).has_tag(Tag::unitary));
      const auto profile = deformation_linear(cfg, EtaParameter(eta));
      CHECK(recover_phase_operator(build_ladder_operators(gf, profile).annihilation, profile, gf)
                .has_tag(Tag::unitary));
    }
  }
}
