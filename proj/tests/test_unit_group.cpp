#include "doctest.h"
#include "langlands/errors.hpp"
#include "langlands/unit_group.hpp"

#include <random>

using namespace langlands;

namespace {

std::shared_ptr<const LocalParams> params_32(std::int64_t k = 5) {
  return LocalParams::make({3, 2, k, Presentation::kKummer, XiConvention::kInverseFrobenius, {}});
}

}  // namespace

TEST_CASE("level 0 is the cyclic Teichmueller part") {
  auto g = UnitGroupModel::build(params_32(), 0);
  CHECK(g->order() == 8);
  CHECK(g->generators().size() == 1);
  CHECK(g->generators()[0].order == 8);

  auto g5 = UnitGroupModel::build(
      LocalParams::make({5, 2, 3, Presentation::kKummer, XiConvention::kInverseFrobenius, {}}), 0);
  CHECK(g5->order() == 24);
  CHECK(g5->generators().size() == 1);
}

TEST_CASE("level 1 at q = 3, ell = 2 is the full order-72 unit group") {
  auto prm = params_32();
  auto g = UnitGroupModel::build(prm, 1);
  CHECK(g->order() == 72);
  // brute-force oracle: count units of o_E / p^2 directly
  std::int64_t units = 0;
  for (std::int64_t a = 0; a < 9; ++a)
    for (std::int64_t b = 0; b < 9; ++b)
      if (a % 3 != 0 || b % 3 != 0) ++units;
  CHECK(units == 72);
  // the model covers every unit exactly once
  std::int64_t covered = 0;
  for (std::int64_t a = 0; a < 9; ++a)
    for (std::int64_t b = 0; b < 9; ++b) {
      if (a % 3 == 0 && b % 3 == 0) continue;
      CHECK(g->coeffs_of(g->index_of_coeffs({a, b})) == std::vector<std::int64_t>{a, b});
      ++covered;
    }
  CHECK(covered == 72);
}

TEST_CASE("group law via exponent tuples") {
  auto g = UnitGroupModel::build(params_32(), 1);
  std::mt19937_64 rng(2);
  const auto& prm = *g->params();
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t a = static_cast<std::int64_t>(rng() % g->order());
    const std::int64_t b = static_cast<std::int64_t>(rng() % g->order());
    // oracle: multiply the coefficient vectors in the quotient ring
    const auto direct = prm.mul_coeffs(g->coeffs_of(a), g->coeffs_of(b), g->quotient_modulus());
    CHECK(g->mul(a, b) == g->index_of_coeffs(direct));
    CHECK(g->mul(a, g->inv(a)) == g->identity_index());
    CHECK(g->pow(a, 5) == g->mul(a, g->mul(a, g->mul(a, g->mul(a, a)))));
  }
}

TEST_CASE("xi and frobenius actions are group automorphisms of order ell") {
  for (std::int64_t level : {0, 1, 2}) {
    auto g = UnitGroupModel::build(params_32(7), level);
    std::mt19937_64 rng(7 + level);
    for (int trial = 0; trial < 100; ++trial) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % g->order());
      const std::int64_t b = static_cast<std::int64_t>(rng() % g->order());
      CHECK(g->xi(g->mul(a, b)) == g->mul(g->xi(a), g->xi(b)));
      // ell-fold application is the identity
      CHECK(g->xi(g->xi(a)) == a);
      CHECK(g->frob(g->frob(a)) == a);
    }
  }
}

TEST_CASE("order 648 at level 2") {
  auto g = UnitGroupModel::build(params_32(7), 2);
  CHECK(g->order() == 648);
  CHECK(g->quotient_modulus() == 27);
  std::int64_t prod = 1;
  for (const auto& gen : g->generators()) prod *= gen.order;
  CHECK(prod == 648);
}

TEST_CASE("budget and support guards") {
  CHECK_THROWS_AS(UnitGroupModel::build(params_32(), 1, 10), BudgetExceeded);
  CHECK_THROWS_AS(UnitGroupModel::build(params_32(2), 2), PrecisionLoss);
}

TEST_CASE("polynomial presentation unit groups") {
  auto prm = LocalParams::make({3, 3, 4, Presentation::kPolynomial, XiConvention::kInverseFrobenius, {}});
  auto g0 = UnitGroupModel::build(prm, 0);
  CHECK(g0->order() == 26);
  auto g1 = UnitGroupModel::build(prm, 1);
  CHECK(g1->order() == 26 * 27);
}
