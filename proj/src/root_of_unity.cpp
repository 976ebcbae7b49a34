#include "langlands/root_of_unity.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace langlands {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::operator*(RootOfUnity o) const {
  // a/d + b/e mod 1, over the common denominator lcm(d,e)
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t l = den_ / g * o.den_;
  return RootOfUnity(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

RootOfUnity RootOfUnity::inverse() const {
  return num_ == 0 ? RootOfUnity() : RootOfUnity(den_ - num_, den_);
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const std::int64_t e = ((k % den_) + den_) % den_;
  return RootOfUnity(num_ * e, den_);
}

std::strong_ordering RootOfUnity::operator<=>(const RootOfUnity& o) const {
  const std::int64_t lhs = num_ * o.den_;
  const std::int64_t rhs = o.num_ * den_;
  if (lhs != rhs) return lhs <=> rhs;
  return den_ <=> o.den_;
}

std::string RootOfUnity::str() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

RootOfUnity RootOfUnity::parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("RootOfUnity: expected \"num/den\", got " + s);
  const std::int64_t num = std::stoll(s.substr(0, slash));
  const std::int64_t den = std::stoll(s.substr(slash + 1));
  return RootOfUnity(num, den);
}

std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) { return os << r.str(); }

}  // namespace langlands
