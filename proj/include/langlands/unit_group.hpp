#pragma once

// A verified generator decomposition of (o_E / p_E^(r+1))^*, the finite
// quotient through which every level-r character factors.  For p odd the
// group splits as the Teichmueller part mu_(q^ell - 1) times the principal
// units, and 1 + p * (basis vector j) generate the principal part as a
// direct sum of cyclic groups of order p^r.  Construction regenerates the
// whole group from the claimed generators and refuses to hand back an
// unverified model.

#include <cstdint>
#include <memory>
#include <vector>

#include "langlands/local_field.hpp"

namespace langlands {

class UnitGroupModel : public std::enable_shared_from_this<UnitGroupModel> {
 public:
  struct Generator {
    std::vector<std::int64_t> coeffs;  // mod p^(r+1)
    std::int64_t order;
  };

  static std::shared_ptr<const UnitGroupModel> build(std::shared_ptr<const LocalParams> params,
                                                     std::int64_t level,
                                                     std::int64_t budget = FieldTower::kDefaultBudget);

  const std::shared_ptr<const LocalParams>& params() const { return params_; }
  std::int64_t level() const { return r_; }
  std::int64_t quotient_modulus() const { return pr1_; }  // p^(r+1)
  std::int64_t order() const { return order_; }
  const std::vector<Generator>& generators() const { return gens_; }

  // elements are dense indices 0 .. order()-1
  std::int64_t identity_index() const { return index_of_exponents(std::vector<std::int64_t>(gens_.size(), 0)); }
  std::int64_t index_of_coeffs(const std::vector<std::int64_t>& coeffs) const;
  std::int64_t index_of_unit(const LocalElem& u) const;
  const std::vector<std::int64_t>& coeffs_of(std::int64_t index) const { return elem_coeffs_[index]; }
  const std::vector<std::int64_t>& exponents_of(std::int64_t index) const { return elem_exps_[index]; }
  std::int64_t index_of_exponents(const std::vector<std::int64_t>& exps) const;

  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;
  std::int64_t xi(std::int64_t a) const { return xi_perm_[a]; }
  std::int64_t frob(std::int64_t a) const { return frob_perm_[a]; }
  std::int64_t frob_pow(std::int64_t a, std::int64_t e) const;

  // index of the Teichmueller lift of the residue-field generator
  std::int64_t teichmueller_gen_index() const { return teich_gen_index_; }

 private:
  UnitGroupModel() = default;

  std::shared_ptr<const LocalParams> params_;
  std::int64_t r_ = 0, pr1_ = 0, order_ = 0;
  std::vector<Generator> gens_;
  std::vector<std::vector<std::int64_t>> elem_coeffs_;
  std::vector<std::vector<std::int64_t>> elem_exps_;
  std::vector<std::int32_t> packed_to_index_;
  std::vector<std::int32_t> xi_perm_, frob_perm_;
  std::int64_t teich_gen_index_ = 0;
};

}  // namespace langlands
