#pragma once

// Formal Z-linear combinations of roots of unity (traces, induced-character
// values, inner-product accumulators).  The only questions ever asked of such
// a sum are exact ones -- is it zero, is it the integer n -- and they are
// decided in Z[x]/Phi_D(x) with D the lcm of the orders involved.  No
// floating point anywhere.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "langlands/root_of_unity.hpp"

namespace langlands {

class RootSum {
 public:
  RootSum() = default;
  explicit RootSum(RootOfUnity r) { add(r, 1); }
  static RootSum integer(std::int64_t n);

  void add(RootOfUnity r, std::int64_t mult = 1);
  RootSum& operator+=(const RootSum& o);
  RootSum& operator-=(const RootSum& o);
  RootSum operator*(const RootSum& o) const;
  RootSum conj() const;
  RootSum scaled(std::int64_t c) const;

  bool is_zero() const;
  // the value as a rational integer, if it is one
  std::optional<std::int64_t> as_integer() const;
  bool equals_integer(std::int64_t n) const;

  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<RootOfUnity, std::int64_t>& terms() const { return terms_; }

 private:
  std::map<RootOfUnity, std::int64_t> terms_;  // value -> multiplicity, zeros erased
};

// Phi_n over Z, lowest degree first.  Exposed for tests.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace langlands
