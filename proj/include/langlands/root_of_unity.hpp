#pragma once

// mu_infinity, the group of all roots of unity, written additively as Q/Z:
// the reduced fraction a/d stands for exp(2*pi*i*a/d).  Multiplying values
// is adding fractions mod 1, so every identity stays exact.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace langlands {

class RootOfUnity {
 public:
  RootOfUnity() = default;  // the value 1, i.e. the fraction 0/1
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  // multiplicative order of the value
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(RootOfUnity o) const;
  RootOfUnity operator/(RootOfUnity o) const { return *this * o.inverse(); }
  RootOfUnity inverse() const;
  RootOfUnity conj() const { return inverse(); }
  RootOfUnity pow(std::int64_t k) const;

  friend bool operator==(RootOfUnity a, RootOfUnity b) = default;
  // order as rationals in [0,1); used for canonical containers and reports
  std::strong_ordering operator<=>(const RootOfUnity& o) const;

  std::string str() const;  // "num/den"
  static RootOfUnity parse(const std::string& s);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r);

}  // namespace langlands

template <>
struct std::hash<langlands::RootOfUnity> {
  std::size_t operator()(const langlands::RootOfUnity& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num() * 1000003 + r.den());
  }
};
