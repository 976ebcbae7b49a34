#include "doctest.h"
#include "langlands/errors.hpp"
#include "langlands/weil_parameter.hpp"

#include <map>
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

TEST_CASE("induced parameter normal form") {
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  const RootOfUnity a(1, 4);
  const Trselp phi = induce_parameter({prm, level0_char(units, 1, a)});

  // f = [[0, a], [1, 0]]: the cycle with chi(varpi) in the top-right corner
  CHECK(phi.frobenius_image.size() == 2);
  CHECK(phi.frobenius_image.perm(0) == 1);
  CHECK(phi.frobenius_image.scalar(0).is_one());
  CHECK(phi.frobenius_image.perm(1) == 0);
  CHECK(phi.frobenius_image.scalar(1) == a);
  CHECK(phi.chi_varpi() == a);

  // f^ell is the scalar matrix chi(varpi) * Id
  CHECK(phi.frobenius_image.pow(2) == MonomialMatrix::diagonal({a, a}));

  auto prm3 = params(7, 3);
  auto units3 = UnitGroupModel::build(prm3, 0);
  const RootOfUnity b(1, 3);
  const Trselp phi3 = induce_parameter({prm3, level0_char(units3, 1, b)});
  CHECK(phi3.frobenius_image.scalar(2) == b);
  CHECK(phi3.frobenius_image.perm(2) == 0);
  CHECK(phi3.frobenius_image.pow(3) == MonomialMatrix::diagonal({b, b, b}));

  CHECK_THROWS_AS(induce_parameter({prm, level0_char(units, 4)}), NotAdmissible);
  CHECK_THROWS_AS(induce_parameter({prm, level0_char(units, 0)}), NotAdmissible);
}

TEST_CASE("equivalence identifies exactly the Galois orbits") {
  auto prm = params(3, 2);
  const auto pairs = enumerate_admissible(prm, 0, 4);
  for (const auto& x : pairs) {
    const Trselp a = induce_parameter(x);
    CHECK(parameters_equivalent(a, a));
    const AdmissiblePair twisted{x.field, x.chi.xi_twist()};
    CHECK(parameters_equivalent(a, induce_parameter(twisted)));
    for (const auto& y : pairs) {
      const bool same_orbit = y.chi == x.chi || y.chi == x.chi.xi_twist();
      CHECK(parameters_equivalent(a, induce_parameter(y)) == same_orbit);
    }
  }
}

TEST_CASE("equivalence cross-checked by the induction oracle") {
  auto prm = params(3, 2);
  const auto pairs = enumerate_admissible(prm, 0, 4);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].chi.varpi_value().order() != 4) continue;
    const auto row_i = induction_oracle(pairs[i], 4);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (pairs[j].chi.varpi_value().order() != 4) continue;
      const auto row_j = induction_oracle(pairs[j], 4);
      const bool equivalent =
          parameters_equivalent(induce_parameter(pairs[i]), induce_parameter(pairs[j]));
      CHECK(equivalent == (oracle_inner_product(row_i, row_j) == 1));
    }
  }
}

TEST_CASE("round trip enumerate -> induce -> classify is a bijection on orbits") {
  auto prm = params(3, 2);
  const auto pairs = enumerate_admissible(prm, 0, 2);
  const auto orbits = orbit_representatives(pairs);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = 0; j < orbits.size(); ++j)
      CHECK(parameters_equivalent(induce_parameter(orbits[i]), induce_parameter(orbits[j])) == (i == j));
  for (const auto& pair : pairs) {
    int matches = 0;
    for (const auto& rep : orbits)
      if (parameters_equivalent(induce_parameter(pair), induce_parameter(rep))) ++matches;
    CHECK(matches == 1);
  }
}

TEST_CASE("finite Weil quotient group axioms") {
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  const FiniteWeilQuotient g(units, 4);
  CHECK(g.order() == 2 * 4 * 8);

  std::mt19937_64 rng(3);
  auto rand_elem = [&]() {
    return FiniteWeilQuotient::Elem{static_cast<std::int64_t>(rng() % (g.ell() * g.varpi_order())),
                                    static_cast<std::int64_t>(rng() % units->order())};
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = rand_elem(), y = rand_elem(), z = rand_elem();
    const auto left = g.mul(g.mul(x, y), z);
    const auto right = g.mul(x, g.mul(y, z));
    CHECK(left.a == right.a);
    CHECK(left.u == right.u);
    const auto inv = g.mul(x, g.inv(x));
    CHECK(inv.a == g.one().a);
    CHECK(inv.u == g.one().u);
  }

  // j t j^{-1} = xi(t) on the abelian part
  for (std::int64_t u = 0; u < units->order(); ++u) {
    const FiniteWeilQuotient::Elem j{1, units->identity_index()};
    const auto conj = g.mul(g.mul(j, FiniteWeilQuotient::Elem{0, u}), g.inv(j));
    CHECK(conj.a == 0);
    CHECK(conj.u == units->xi(u));
  }
}

TEST_CASE("Mackey oracle: norm 1 exactly for admissible characters") {
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  for (std::int64_t e = 0; e < 8; ++e) {
    const LevelChar chi = level0_char(units, e, RootOfUnity(1, 4));
    const AdmissiblePair pair{prm, chi};
    const auto row = induction_oracle(pair, 4);
    const std::int64_t norm = oracle_inner_product(row, row);
    if (is_admissible(chi)) {
      CHECK(norm == 1);
    } else {
      CHECK(norm == 2);  // xi-fixed at ell = 2
    }
    // Ind chi and Ind chi^xi are isomorphic
    const auto row_twist = induction_oracle({prm, chi.xi_twist()}, 4);
    CHECK(oracle_inner_product(row, row_twist) == norm);
  }
}

TEST_CASE("Mackey oracle at odd ell: xi-fixed norm is ell") {
  auto prm = params(3, 3);
  auto units = UnitGroupModel::build(prm, 0);
  // xi-fixed exponents satisfy 9e = e mod 26, i.e. e in {0, 13}
  const LevelChar fixed = level0_char(units, 13, RootOfUnity::one());
  REQUIRE_FALSE(is_admissible(fixed));
  const auto row = induction_oracle({prm, fixed}, 1);
  CHECK(oracle_inner_product(row, row) == 3);

  const LevelChar good = level0_char(units, 1, RootOfUnity(1, 3));
  REQUIRE(is_admissible(good));
  const auto row2 = induction_oracle({prm, good}, 3);
  CHECK(oracle_inner_product(row2, row2) == 1);
}

TEST_CASE("oracle values on the abelian part are Galois orbit sums") {
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  const LevelChar chi = level0_char(units, 1, RootOfUnity::one());
  const auto row = induction_oracle({prm, chi}, 1);
  const std::int64_t nu = units->order();
  for (std::int64_t u = 0; u < nu; ++u) {
    RootSum expect;
    expect.add(chi.eval_index(u));
    expect.add(chi.eval_index(units->xi(u)));
    RootSum got = row.values[0 * nu + u];
    got -= expect;
    CHECK(got.is_zero());
  }
  // off the abelian part the induced character vanishes
  for (std::int64_t u = 0; u < nu; ++u) CHECK(row.values[1 * nu + u].empty());
}

TEST_CASE("oracle guards") {
  auto prm = params(3, 2);
  auto units = UnitGroupModel::build(prm, 0);
  const LevelChar chi = level0_char(units, 1, RootOfUnity(1, 4));
  CHECK_THROWS_AS(induction_oracle({prm, chi}, 2), IncompatibleVarpiOrder);
  CHECK_THROWS_AS(induction_oracle({prm, chi}, 4, 10), BudgetExceeded);
}
