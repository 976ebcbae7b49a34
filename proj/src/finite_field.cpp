#include "langlands/finite_field.hpp"

#include <numeric>
#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

namespace {

using Poly = std::vector<std::int64_t>;  // coeffs in [0,p), lowest degree first

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  // m monic over F_p
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::int64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i < dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

// does any monic polynomial of degree 1..deg(m)/2 divide m?
bool is_irreducible(const Poly& m, std::int64_t p) {
  const std::int64_t d = static_cast<std::int64_t>(m.size()) - 1;
  for (std::int64_t k = 1; 2 * k <= d; ++k) {
    Poly div(k + 1, 0);
    div[k] = 1;
    for (std::int64_t packed = 0; packed < ipow(p, k); ++packed) {
      std::int64_t v = packed;
      for (std::int64_t i = 0; i < k; ++i) {
        div[i] = v % p;
        v /= p;
      }
      Poly r = poly_mod(m, div, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t pack(const Poly& a, std::int64_t p, std::int64_t deg) {
  std::int64_t v = 0;
  for (std::int64_t i = deg - 1; i >= 0; --i) v = v * p + (i < static_cast<std::int64_t>(a.size()) ? a[i] : 0);
  return v;
}

Poly unpack(std::int64_t v, std::int64_t p, std::int64_t deg) {
  Poly a(deg, 0);
  for (std::int64_t i = 0; i < deg; ++i) {
    a[i] = v % p;
    v /= p;
  }
  trim(a);
  return a;
}

}  // namespace

std::shared_ptr<const FieldTower> FieldTower::make(FieldConfig cfg, std::int64_t budget) {
  if (!is_prime(cfg.p)) throw std::invalid_argument("FieldTower: p must be prime");
  if (!is_prime(cfg.ell)) throw std::invalid_argument("FieldTower: ell must be prime");
  if (cfg.e < 1) throw std::invalid_argument("FieldTower: e must be positive");

  const std::int64_t d = cfg.e * cfg.ell;
  std::int64_t space = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    space *= cfg.p;
    if (space > budget) throw BudgetExceeded("FieldTower: p^(e*ell) exceeds enumeration budget");
  }

  auto f = std::shared_ptr<FieldTower>(new FieldTower());
  f->p_ = cfg.p;
  f->e_ = cfg.e;
  f->ell_ = cfg.ell;
  f->q_ = ipow(cfg.p, cfg.e);
  f->q_ell_ = ipow(f->q_, cfg.ell);

  // first irreducible monic polynomial of degree d in the numeric encoding
  Poly m;
  for (std::int64_t low = 0; low < space; ++low) {
    Poly cand = unpack(low, cfg.p, d);
    cand.resize(d + 1, 0);
    cand[d] = 1;
    if (is_irreducible(cand, cfg.p)) {
      m = cand;
      break;
    }
  }
  if (m.empty()) throw std::logic_error("FieldTower: no irreducible modulus found");
  f->modulus_ = m;

  // numerically least generator of the unit group
  const std::int64_t group = f->q_ell_ - 1;
  const auto primes = prime_factors(group);
  Poly gen;
  for (std::int64_t v = 2; v < space; ++v) {
    Poly cand = unpack(v, cfg.p, d);
    bool full_order = true;
    for (std::int64_t r : primes) {
      // cand^(group/r) by square-and-multiply
      Poly acc{1}, base = cand;
      std::int64_t exp = group / r;
      while (exp > 0) {
        if (exp & 1) acc = poly_mul_mod(acc, base, m, cfg.p);
        base = poly_mul_mod(base, base, m, cfg.p);
        exp >>= 1;
      }
      if (acc.size() == 1 && acc[0] == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      gen = cand;
      break;
    }
  }
  if (gen.empty()) throw std::logic_error("FieldTower: no generator found");

  f->exp_.resize(group);
  f->log_.assign(space, -1);
  Poly cur{1};
  for (std::int64_t k = 0; k < group; ++k) {
    const std::int64_t packed = pack(cur, cfg.p, d);
    f->exp_[k] = static_cast<std::int32_t>(packed);
    if (f->log_[packed] != -1) throw std::logic_error("FieldTower: generator order too small");
    f->log_[packed] = static_cast<std::int32_t>(k);
    cur = poly_mul_mod(cur, gen, m, cfg.p);
  }
  if (!(cur.size() == 1 && cur[0] == 1)) throw std::logic_error("FieldTower: generator order check failed");

  return f;
}

TowerElem FieldTower::zero() const { return TowerElem(shared_from_this(), 0); }
TowerElem FieldTower::one() const { return TowerElem(shared_from_this(), 1); }
TowerElem FieldTower::gen() const { return TowerElem(shared_from_this(), exp_[1 % (q_ell_ - 1)]); }
TowerElem FieldTower::base_gen() const { return from_exponent(norm_exponent()); }

TowerElem FieldTower::from_exponent(std::int64_t k) const {
  const std::int64_t group = q_ell_ - 1;
  k = ((k % group) + group) % group;
  return TowerElem(shared_from_this(), exp_[k]);
}

TowerElem FieldTower::from_coeffs(const std::vector<std::int64_t>& c) const {
  Poly a(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) a[i] = ((c[i] % p_) + p_) % p_;
  if (static_cast<std::int64_t>(a.size()) > degree()) {
    a = poly_mod(std::move(a), modulus_, p_);
  }
  return TowerElem(shared_from_this(), pack(a, p_, degree()));
}

TowerElem FieldTower::from_packed(std::int64_t packed) const {
  if (packed < 0 || packed >= static_cast<std::int64_t>(log_.size()))
    throw std::invalid_argument("FieldTower: packed value out of range");
  return TowerElem(shared_from_this(), packed);
}

bool TowerElem::is_one() const { return packed_ == 1 && field_ && field_->p_ > 1; }

std::vector<std::int64_t> TowerElem::coeffs() const {
  Poly a = unpack(packed_, field_->p_, field_->degree());
  a.resize(field_->degree(), 0);
  return a;
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
  const std::int64_t p = field_->p_, d = field_->degree();
  Poly a = unpack(packed_, p, d), b = unpack(o.packed_, p, d);
  a.resize(d, 0);
  b.resize(d, 0);
  for (std::int64_t i = 0; i < d; ++i) a[i] = (a[i] + b[i]) % p;
  return TowerElem(field_, pack(a, p, d));
}

TowerElem TowerElem::operator-() const {
  const std::int64_t p = field_->p_, d = field_->degree();
  Poly a = unpack(packed_, p, d);
  a.resize(d, 0);
  for (std::int64_t i = 0; i < d; ++i) a[i] = (p - a[i]) % p;
  return TowerElem(field_, pack(a, p, d));
}

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + (-o); }

TowerElem TowerElem::operator*(const TowerElem& o) const {
  if (is_zero() || o.is_zero()) return TowerElem(field_, 0);
  const std::int64_t group = field_->q_ell_ - 1;
  const std::int64_t k = (field_->log_[packed_] + static_cast<std::int64_t>(field_->log_[o.packed_])) % group;
  return TowerElem(field_, field_->exp_[k]);
}

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw ZeroElement("TowerElem: inverse of zero");
  const std::int64_t group = field_->q_ell_ - 1;
  return field_->from_exponent((group - field_->log_[packed_]) % group);
}

TowerElem TowerElem::pow(std::int64_t k) const {
  if (is_zero()) {
    if (k <= 0) throw ZeroElement("TowerElem: 0^k for k <= 0");
    return *this;
  }
  return field_->from_exponent(static_cast<std::int64_t>(field_->log_[packed_]) * (k % (field_->q_ell_ - 1)));
}

TowerElem TowerElem::frobenius() const {
  if (is_zero()) return *this;
  return field_->from_exponent(static_cast<std::int64_t>(field_->log_[packed_]) * field_->q_);
}

TowerElem TowerElem::frobenius_pow(std::int64_t i) const {
  if (is_zero()) return *this;
  i = ((i % field_->ell_) + field_->ell_) % field_->ell_;
  std::int64_t mult = 1;
  const std::int64_t group = field_->q_ell_ - 1;
  for (std::int64_t j = 0; j < i; ++j) mult = (mult * field_->q_) % group;
  return field_->from_exponent(static_cast<std::int64_t>(field_->log_[packed_]) * mult);
}

std::int64_t TowerElem::dlog() const {
  if (is_zero()) throw ZeroElement("TowerElem: dlog of zero");
  return field_->log_[packed_];
}

TowerElem TowerElem::norm_to_base() const {
  if (is_zero()) return *this;
  return field_->from_exponent(dlog() * field_->norm_exponent());
}

bool TowerElem::in_base_field() const {
  if (is_zero()) return true;
  return dlog() % field_->norm_exponent() == 0;
}

std::int64_t TowerElem::multiplicative_order() const {
  if (is_zero()) throw ZeroElement("TowerElem: order of zero");
  const std::int64_t group = field_->q_ell_ - 1;
  return group / std::gcd(group, dlog());
}

}  // namespace langlands
