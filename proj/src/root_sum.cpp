#include "langlands/root_sum.hpp"

#include <cstdlib>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "langlands/errors.hpp"

namespace langlands {

namespace {

// remainder of a mod b, b monic, exact over Z
std::vector<std::int64_t> poly_mod_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        a[shift + i] -= lead * b[i];
        if (std::llabs(a[shift + i]) > (std::int64_t{1} << 52))
          throw BudgetExceeded("cyclotomic reduction: coefficient overflow guard");
      }
    }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

// exact division q = a / b with b monic, remainder known to be zero
std::vector<std::int64_t> poly_div_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {0};
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::int64_t c = a[shift + db];
    if (c != 0) {
      q[shift] = c;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    }
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::unordered_map<std::int64_t, std::vector<std::int64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<std::int64_t> phi_d;
    if (auto it = cache.find(d); it != cache.end()) {
      phi_d = it->second;
    } else {
      std::vector<std::int64_t> g(d + 1, 0);
      g[0] = -1;
      g[d] = 1;
      for (std::int64_t dd = 1; dd < d; ++dd)
        if (d % dd == 0) g = poly_div_monic(std::move(g), cache.at(dd));
      phi_d = g;
      cache.emplace(d, phi_d);
    }
    f = poly_div_monic(std::move(f), phi_d);
  }
  cache.emplace(n, f);
  return f;
}

RootSum RootSum::integer(std::int64_t n) {
  RootSum s;
  s.add(RootOfUnity::one(), n);
  return s;
}

void RootSum::add(RootOfUnity r, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(r, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

RootSum& RootSum::operator+=(const RootSum& o) {
  for (const auto& [r, m] : o.terms_) add(r, m);
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& o) {
  for (const auto& [r, m] : o.terms_) add(r, -m);
  return *this;
}

RootSum RootSum::operator*(const RootSum& o) const {
  RootSum out;
  for (const auto& [a, ma] : terms_)
    for (const auto& [b, mb] : o.terms_) out.add(a * b, ma * mb);
  return out;
}

RootSum RootSum::conj() const {
  RootSum out;
  for (const auto& [r, m] : terms_) out.add(r.conj(), m);
  return out;
}

RootSum RootSum::scaled(std::int64_t c) const {
  RootSum out;
  if (c == 0) return out;
  for (const auto& [r, m] : terms_) out.add(r, m * c);
  return out;
}

std::optional<std::int64_t> RootSum::as_integer() const {
  if (terms_.empty()) return 0;
  std::int64_t d = 1;
  for (const auto& [r, m] : terms_) {
    (void)m;
    d = std::lcm(d, r.den());
    if (d > 200000) throw BudgetExceeded("RootSum: cyclotomic modulus too large");
  }
  if (d == 1) return terms_.begin()->second;

  std::vector<std::int64_t> coeffs(d, 0);
  for (const auto& [r, m] : terms_) coeffs[r.num() * (d / r.den())] += m;
  const auto rem = poly_mod_monic(std::move(coeffs), cyclotomic_polynomial(d));
  for (std::size_t i = 1; i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return rem[0];
}

bool RootSum::is_zero() const {
  auto n = as_integer();
  return n.has_value() && *n == 0;
}

bool RootSum::equals_integer(std::int64_t n) const {
  auto v = as_integer();
  return v.has_value() && *v == n;
}

}  // namespace langlands
