#pragma once

// The residue tower f_q inside f_{q^ell}, q = p^e, with the Frobenius
// x -> x^q, discrete logs against a fixed generator, and the norm down to
// f_q.  Fields at desk scale are table driven: construction builds the full
// exp/log tables once, after which every operation is O(1) or O(ell).
//
// Determinism: the modulus is the first irreducible monic polynomial of
// degree e*ell in the base-p numeric encoding (coefficient c_i weighted by
// p^i), and the generator is the numerically least element of full order.

#include <cstdint>
#include <memory>
#include <vector>

namespace langlands {

struct FieldConfig {
  std::int64_t p = 3;
  std::int64_t e = 1;
  std::int64_t ell = 2;
};

class TowerElem;

class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  static constexpr std::int64_t kDefaultBudget = 1'000'000;

  static std::shared_ptr<const FieldTower> make(FieldConfig cfg, std::int64_t budget = kDefaultBudget);

  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t q() const { return q_; }
  std::int64_t q_ell() const { return q_ell_; }
  std::int64_t degree() const { return e_ * ell_; }
  // order of the unit group of the big field
  std::int64_t unit_order() const { return q_ell_ - 1; }
  std::int64_t norm_exponent() const { return (q_ell_ - 1) / (q_ - 1); }

  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  TowerElem zero() const;
  TowerElem one() const;
  TowerElem gen() const;
  TowerElem from_exponent(std::int64_t k) const;  // gen^k
  TowerElem from_coeffs(const std::vector<std::int64_t>& c) const;
  TowerElem from_packed(std::int64_t packed) const;
  // generator of the subfield f_q^*
  TowerElem base_gen() const;

  std::int64_t packed_count() const { return static_cast<std::int64_t>(log_.size()); }

 private:
  FieldTower() = default;
  friend class TowerElem;

  std::int64_t p_ = 0, e_ = 0, ell_ = 0, q_ = 0, q_ell_ = 0;
  std::vector<std::int64_t> modulus_;  // monic, degree e*ell, coeffs in [0,p)
  std::vector<std::int32_t> exp_;      // exponent -> packed element
  std::vector<std::int32_t> log_;      // packed element -> exponent (-1 for 0)
};

class TowerElem {
 public:
  TowerElem() = default;

  bool is_zero() const { return packed_ == 0; }
  bool is_one() const;
  std::int64_t packed() const { return packed_; }
  std::vector<std::int64_t> coeffs() const;
  const std::shared_ptr<const FieldTower>& field() const { return field_; }

  TowerElem operator+(const TowerElem& o) const;
  TowerElem operator-(const TowerElem& o) const;
  TowerElem operator-() const;
  TowerElem operator*(const TowerElem& o) const;
  TowerElem inverse() const;
  TowerElem pow(std::int64_t k) const;

  // x -> x^q; the identity on f_q, ell-fold application is the identity
  TowerElem frobenius() const;
  TowerElem frobenius_pow(std::int64_t i) const;

  // exponent of the fixed generator; throws ZeroElement on 0
  std::int64_t dlog() const;

  // x^(1 + q + ... + q^(ell-1)), always lands in f_q
  TowerElem norm_to_base() const;

  bool in_base_field() const;
  std::int64_t multiplicative_order() const;

  bool operator==(const TowerElem& o) const { return packed_ == o.packed_; }

 private:
  friend class FieldTower;
  TowerElem(std::shared_ptr<const FieldTower> f, std::int64_t packed)
      : field_(std::move(f)), packed_(packed) {}

  std::shared_ptr<const FieldTower> field_;
  std::int64_t packed_ = 0;
};

}  // namespace langlands
