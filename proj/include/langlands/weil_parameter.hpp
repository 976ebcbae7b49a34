#pragma once

// TRSELPs for GL(ell) stored by their restriction data: the inertia
// character (whose Galois twists fill the diagonal) and the monomial value
// at Frobenius, conjugated into the normal form w = (1 2 ... ell) with the
// single nontrivial scalar chi(varpi) in the top-right corner.
//
// The finite Weil quotient is the group <j> E^*/(1+p^(r+1)) with
// j^ell = varpi, j t j^{-1} = xi(t), and varpi^N = 1; the induction oracle
// computes Ind from the index-ell abelian part by the raw induced-character
// formula and answers inner products exactly.

#include <cstdint>
#include <memory>
#include <vector>

#include "langlands/characters.hpp"
#include "langlands/monomial_matrix.hpp"
#include "langlands/root_sum.hpp"

namespace langlands {

struct Trselp {
  std::shared_ptr<const LocalParams> field;
  LevelChar inertia_char;            // the inducing character; varpi value included
  MonomialMatrix frobenius_image;    // phi(Phi) in normal form
  std::vector<int> weyl;             // the associated Weyl element, 0-indexed
  std::int64_t depth = 0;

  RootOfUnity chi_varpi() const { return frobenius_image.scalar_product(); }
};

Trselp induce_parameter(const AdmissiblePair& pair);  // NotAdmissible on regular failure

// true iff b arises from a by a Galois twist of the inducing character
bool parameters_equivalent(const Trselp& a, const Trselp& b);

class FiniteWeilQuotient {
 public:
  FiniteWeilQuotient(std::shared_ptr<const UnitGroupModel> units, std::int64_t varpi_order,
                     std::int64_t budget = 10'000);

  std::int64_t order() const { return ell_ * varpi_order_ * units_->order(); }
  std::int64_t ell() const { return ell_; }
  std::int64_t varpi_order() const { return varpi_order_; }
  const std::shared_ptr<const UnitGroupModel>& units() const { return units_; }

  // element = (a, u): the coset j^a u with a in [0, ell*N), u a unit index
  struct Elem {
    std::int64_t a;
    std::int64_t u;
  };
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem one() const { return {0, units_->identity_index()}; }
  bool in_abelian_part(Elem x) const { return x.a % ell_ == 0; }

 private:
  std::shared_ptr<const UnitGroupModel> units_;
  std::int64_t ell_ = 0, varpi_order_ = 0;
};

// the character of Ind_{E^*}^{W} chi as a function on the finite quotient;
// values indexed by (a, u) flattened as a * |units| + u
struct OracleRow {
  std::shared_ptr<const FiniteWeilQuotient> group;
  std::vector<RootSum> values;
};

OracleRow induction_oracle(const AdmissiblePair& pair, std::int64_t varpi_order,
                           std::int64_t budget = 10'000);

// <a, b> over the finite quotient; exact, throws CrossCheckFailure if the
// Hermitian sum fails to be a rational integer multiple of |G|
std::int64_t oracle_inner_product(const OracleRow& a, const OracleRow& b);

}  // namespace langlands
