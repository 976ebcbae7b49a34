#pragma once

// The representation-side ingredient for ell = 2: the cuspidal character of
// GL(2, f_q) attached to a regular character of f_{q^2}^*, with exact
// class-size verification of norm, cuspidality and orthogonality.  For odd
// ell the workbench only records the label and the dimension
// prod_{i<ell} (q^i - 1); see cuspidal_metadata.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "langlands/finite_field.hpp"
#include "langlands/root_sum.hpp"

namespace langlands {

struct Gl2Class {
  enum class Kind { kCentral, kCentralUnipotent, kSplit, kElliptic };
  Kind kind;
  std::int64_t size;
  // dlogs of the defining eigenvalues: central/unipotent use x only,
  // split uses (x, y) in f_q^* as base-field dlogs, elliptic uses w in
  // f_{q^2}^* as a tower dlog
  std::int64_t x = 0, y = 0;
  std::string label;
};

class Gl2ClassData {
 public:
  // tower must have ell == 2; q = tower. q()
  static Gl2ClassData build(std::shared_ptr<const FieldTower> tower);

  std::int64_t q() const { return tower_->q(); }
  std::int64_t group_order() const { return group_order_; }
  const std::vector<Gl2Class>& classes() const { return classes_; }
  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }

 private:
  std::shared_ptr<const FieldTower> tower_;
  std::int64_t group_order_ = 0;
  std::vector<Gl2Class> classes_;
};

struct CuspidalCharRow {
  std::int64_t chi_exponent;       // chi_o = gen -> zeta^(chi_exponent)
  std::int64_t dim;                // q - 1
  std::vector<RootSum> values;     // aligned with Gl2ClassData::classes()
};

// the full cuspidal row; NotRegular when chi_o is Frobenius-fixed
CuspidalCharRow cuspidal_character(const Gl2ClassData& data, std::int64_t chi_exponent);

// norm 1 and vanishing unipotent sums at every central element
bool verify_cuspidal(const Gl2ClassData& data, const CuspidalCharRow& row);

// <a, b> over GL(2,q) by exact class-size summation
std::int64_t row_inner_product(const Gl2ClassData& data, const CuspidalCharRow& a,
                               const CuspidalCharRow& b);

// odd-ell representation metadata: Galois orbit label and dimension
struct CuspidalMetadata {
  std::vector<std::int64_t> orbit_exponents;  // chi_o orbit under x -> qx
  std::int64_t dimension;                     // prod_{i=1}^{ell-1} (q^i - 1)
};
CuspidalMetadata cuspidal_metadata(const FieldTower& tower, std::int64_t chi_exponent);

}  // namespace langlands
