#include "doctest.h"
#include "langlands/errors.hpp"
#include "langlands/torus_character.hpp"

#include <random>

using namespace langlands;

namespace {

std::shared_ptr<const LocalParams> params(std::int64_t p, std::int64_t ell, std::int64_t k = 3) {
  const Presentation pres = ((p - 1) % ell == 0) ? Presentation::kKummer : Presentation::kPolynomial;
  return LocalParams::make({p, ell, k, pres, XiConvention::kInverseFrobenius, {}});
}

LevelChar level0_char(const std::shared_ptr<const UnitGroupModel>& units, std::int64_t exp,
                      RootOfUnity varpi = RootOfUnity::one()) {
  return LevelChar(units, {RootOfUnity(exp, units->generators()[0].order)}, varpi);
}

}  // namespace

TEST_CASE("twisted norm closed form at ell = 2") {
  auto tower = FieldTower::make({3, 1, 2});
  ResidueTorus torus(tower);
  for (std::int64_t a = 0; a < 8; ++a)
    for (std::int64_t b = 0; b < 8; ++b) {
      const ResidueTorus::Tuple t{tower->from_exponent(a), tower->from_exponent(b)};
      // (x, y) -> x * y^q
      CHECK(torus.twisted_norm(t) == tower->from_exponent(a) * tower->from_exponent(b).pow(3));
    }
  CHECK(torus.twisted_norm(torus.section(tower->gen())) == tower->gen());
  CHECK(torus.twisted_norm(torus.section(tower->one())) == tower->one());
}

TEST_CASE("twisted norm closed form at ell = 3") {
  auto tower = FieldTower::make({3, 1, 3});
  ResidueTorus torus(tower);
  std::mt19937_64 rng(5);
  const std::int64_t q = 3;
  for (int trial = 0; trial < 300; ++trial) {
    ResidueTorus::Tuple t(3);
    for (auto& c : t) c = tower->from_exponent(static_cast<std::int64_t>(rng() % 26));
    // x1 * x2^(q^2) * x3^q
    const TowerElem direct = t[0] * t[1].pow(q * q) * t[2].pow(q);
    CHECK(torus.twisted_norm(t) == direct);
  }
  // Phi_sigma has order ell on tuples
  for (int trial = 0; trial < 50; ++trial) {
    ResidueTorus::Tuple t(3);
    for (auto& c : t) c = tower->from_exponent(static_cast<std::int64_t>(rng() % 26));
    auto u = torus.phi_sigma(torus.phi_sigma(torus.phi_sigma(t)));
    for (int i = 0; i < 3; ++i) CHECK(u[i] == t[i]);
  }
}

TEST_CASE("fixed tuples are exactly the frobenius orbits (x, x^q, ...)") {
  auto tower = FieldTower::make({3, 1, 2});
  ResidueTorus torus(tower);
  std::int64_t fixed_count = 0;
  for (std::int64_t a = 0; a < 8; ++a)
    for (std::int64_t b = 0; b < 8; ++b) {
      const ResidueTorus::Tuple t{tower->from_exponent(a), tower->from_exponent(b)};
      const bool orbit_shape = tower->from_exponent(b) == tower->from_exponent(a).frobenius();
      CHECK(torus.is_fixed(t) == orbit_shape);
      if (torus.is_fixed(t)) ++fixed_count;
    }
  CHECK(fixed_count == 8);  // T^{Phi_sigma} = f_{q^ell}^*
}

TEST_CASE("norm fibers and Lambda well-definedness, exhaustive at q = 3, ell = 2") {
  ResidueTorus torus(FieldTower::make({3, 1, 2}));
  CHECK(verify_norm_fibers_exhaustive(torus));
  CHECK(verify_lambda_well_defined_exhaustive(torus));
}

TEST_CASE("norm fibers at ell = 3 exhaustive, Lambda sampled") {
  ResidueTorus torus(FieldTower::make({3, 1, 3}));
  CHECK(verify_norm_fibers_exhaustive(torus));
  CHECK(verify_lambda_well_defined_sampled(torus, 20000));
}

TEST_CASE("norm fibers exhaustive for every q^ell up to 81") {
  // ell = 2 at q = 5, 7 and at q = 9 = 3^2
  for (auto cfg : {FieldConfig{5, 1, 2}, FieldConfig{7, 1, 2}, FieldConfig{3, 2, 2}}) {
    ResidueTorus torus(FieldTower::make(cfg));
    CHECK(verify_norm_fibers_exhaustive(torus));
    CHECK(verify_lambda_well_defined_sampled(torus, 4000));
  }
}

TEST_CASE("chi_s preimage brute force oracle at q = 3, ell = 2") {
  // enumerate every preimage of every base point and evaluate Lambda on it;
  // the result must be constant on fibers and equal chi_o
  auto tower = FieldTower::make({3, 1, 2});
  ResidueTorus torus(tower);
  for (std::int64_t e = 0; e < 8; ++e) {
    for (std::int64_t target = 0; target < 8; ++target) {
      const RootOfUnity expect(e * target, 8);  // chi_o(g^target)
      std::int64_t hits = 0;
      for (std::int64_t a = 0; a < 8; ++a)
        for (std::int64_t b = 0; b < 8; ++b) {
          const ResidueTorus::Tuple t{tower->from_exponent(a), tower->from_exponent(b)};
          if (!(torus.twisted_norm(t) == tower->from_exponent(target))) continue;
          ++hits;
          CHECK(torus.lambda_eval(e, t) == expect);
        }
      CHECK(hits == 8);
    }
  }
}

TEST_CASE("chi_s equals chi on units across admissible pairs") {
  // exhaustive over all admissible level-0 pairs at q in {3, 5}, ell = 2,
  // and q = 3, ell = 3
  for (auto [p, ell] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {5, 2}, {3, 3}}) {
    auto prm = params(p, ell);
    for (const auto& pair : enumerate_admissible(prm, 0, 2)) {
      const auto values = chi_s_from_parameter(induce_parameter(pair));
      CHECK(values == pair.chi.gen_values());
    }
  }
}

TEST_CASE("tau and chi_tau from the determinant coset") {
  auto prm2 = params(3, 2);
  auto units2 = UnitGroupModel::build(prm2, 0);
  const RootOfUnity a(1, 8);
  const auto [tau2, chi_tau2] = tau_from_parameter(induce_parameter({prm2, level0_char(units2, 1, a)}));
  CHECK(chi_tau2 == RootOfUnity::minus_one() * a);
  CHECK(tau2.is_diagonal());
  CHECK(tau2.det() == chi_tau2);

  auto prm3 = params(7, 3);
  auto units3 = UnitGroupModel::build(prm3, 0);
  const RootOfUnity b(1, 3);
  const auto [tau3, chi_tau3] = tau_from_parameter(induce_parameter({prm3, level0_char(units3, 1, b)}));
  CHECK(chi_tau3 == b);

  // ell = 5 with trivial chi(varpi): the 5-cycle has determinant +1
  auto prm5 = params(3, 5, 3);
  auto units5 = UnitGroupModel::build(prm5, 0);
  const auto [tau5, chi_tau5] = tau_from_parameter(induce_parameter({prm5, level0_char(units5, 1)}));
  CHECK(chi_tau5.is_one());
  (void)tau5;
}

TEST_CASE("depth zero chi_phi satisfies chi_phi = chi Delta_chi") {
  // ell = 2: varpi flips sign
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  const Trselp phi = induce_parameter({prm, level0_char(units, 1, RootOfUnity(1, 4))});
  const TorusChar tc = chi_phi(phi);
  CHECK(tc.cochar == RootOfUnity(3, 4));  // -i
  CHECK(tc.unit_gen_values == phi.inertia_char.gen_values());

  // full sweep: q in {3, 5}, ell = 2 and q = 3, ell = 3 at level zero
  for (auto [p, ell] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {5, 2}, {3, 3}}) {
    auto prms = params(p, ell);
    for (const auto& pair : enumerate_admissible(prms, 0, 4)) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      const TorusChar target = moy_target(pair);
      CHECK(computed == target);
      if (ell == 2)
        CHECK(computed.cochar == RootOfUnity::minus_one() * pair.chi.varpi_value());
      else
        CHECK(computed.cochar == pair.chi.varpi_value());
    }
  }
}

TEST_CASE("positive depth chi_phi agrees with chi Delta_chi") {
  auto prm = params(3, 2, 5);
  for (const auto& pair : enumerate_admissible(prm, 1, 2)) {
    const Trselp phi = induce_parameter(pair);
    const TorusChar computed = reeder_positive_depth_chi_phi(phi);
    CHECK(computed == moy_target(pair));
  }
  // ell = 3, r = 1: varpi value passes through untouched
  auto prm3 = params(3, 3, 5);
  const auto pairs3 = enumerate_admissible(prm3, 1, 3);
  REQUIRE(pairs3.size() > 0);
  for (std::size_t i = 0; i < pairs3.size(); i += 7) {
    const TorusChar computed = reeder_positive_depth_chi_phi(induce_parameter(pairs3[i]));
    CHECK(computed == moy_target(pairs3[i]));
    CHECK(computed.cochar == pairs3[i].chi.varpi_value());
  }
}

TEST_CASE("level 1 restriction agrees with the level 0 path on shared data") {
  auto prm = params(3, 2, 5);
  auto units0 = UnitGroupModel::build(prm, 0);
  auto units1 = UnitGroupModel::build(prm, 1);
  // inflate a level-0 character to level 1: Teichmueller value kept, trivial
  // on the principal generators
  const RootOfUnity val(1, 8);
  std::vector<RootOfUnity> vals1(units1->generators().size());
  vals1[0] = val;
  const LevelChar chi1(units1, vals1, RootOfUnity(1, 2));
  const LevelChar chi0(units0, {val}, RootOfUnity(1, 2));
  REQUIRE(is_admissible(chi1));
  REQUIRE_FALSE(chi1.has_exact_level());  // it is really a level-0 character

  const auto v1 = chi_s_from_parameter(induce_parameter({prm, chi1}));
  const auto v0 = chi_s_from_parameter(induce_parameter({prm, chi0}));
  CHECK(v1[0] == v0[0]);  // same value on the Teichmueller generator
  for (std::size_t i = 1; i < v1.size(); ++i) CHECK(v1[i].is_one());
}

TEST_CASE("both presentations close the same agreement at ell = 2") {
  for (auto pres : {Presentation::kKummer, Presentation::kPolynomial}) {
    auto prm = LocalParams::make({3, 2, 3, pres, XiConvention::kInverseFrobenius, {}});
    const auto pairs = enumerate_admissible(prm, 0, 4);
    CHECK(pairs.size() == 24);
    for (const auto& pair : pairs) CHECK(chi_phi(induce_parameter(pair)) == moy_target(pair));
  }
}

TEST_CASE("both xi conventions close the same agreement") {
  for (auto conv : {XiConvention::kInverseFrobenius, XiConvention::kFrobenius}) {
    auto prm = LocalParams::make({3, 3, 3, Presentation::kPolynomial, conv, {}});
    for (const auto& pair : enumerate_admissible(prm, 0, 3)) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      CHECK(computed == moy_target(pair));
    }
    auto prm2 = LocalParams::make({5, 2, 3, Presentation::kKummer, conv, {}});
    for (const auto& pair : enumerate_admissible(prm2, 0, 2)) {
      const TorusChar computed = chi_phi(induce_parameter(pair));
      CHECK(computed == moy_target(pair));
    }
  }
}

TEST_CASE("torus character evaluation factors through the decomposition") {
  auto prm = params(3, 2, 5);
  auto units = UnitGroupModel::build(prm, 0);
  const AdmissiblePair pair{prm, level0_char(units, 1, RootOfUnity(1, 8))};
  const TorusChar tc = chi_phi(induce_parameter(pair));
  const LocalElem u = prm->teichmueller(prm->residue_field()->gen());
  CHECK(tc.eval(prm->uniformizer()) == tc.cochar);
  CHECK(tc.eval(u) == pair.chi.eval_unit(u));
  CHECK(tc.eval(prm->uniformizer() * u) == tc.cochar * pair.chi.eval_unit(u));
}
