#include "langlands/local_field.hpp"

#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

namespace {

std::int64_t mod_reduce(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t vp(std::int64_t a, std::int64_t p, std::int64_t cap) {
  if (a == 0) return cap;
  std::int64_t v = 0;
  while (a % p == 0 && v < cap) {
    a /= p;
    ++v;
  }
  return v;
}

// inverse mod a prime p
std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, base = mod_reduce(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// solve M x = rhs over F_p, M square invertible
std::vector<std::int64_t> solve_mod_p(std::vector<std::vector<std::int64_t>> m,
                                      std::vector<std::int64_t> rhs, std::int64_t p) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] % p == 0) ++piv;
    if (piv == n) throw std::logic_error("solve_mod_p: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const std::int64_t inv = inv_mod_p(m[col][col], p);
    for (std::size_t j = 0; j < n; ++j) m[col][j] = m[col][j] * inv % p;
    rhs[col] = rhs[col] * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] % p == 0) continue;
      const std::int64_t f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = mod_reduce(m[i][j] - f * m[col][j], p);
      rhs[i] = mod_reduce(rhs[i] - f * rhs[col], p);
    }
  }
  return rhs;
}

}  // namespace

std::shared_ptr<const LocalParams> LocalParams::make(LocalConfig cfg, std::int64_t budget) {
  if (cfg.precision < 1) throw std::invalid_argument("LocalParams: precision must be >= 1");

  auto prm = std::shared_ptr<LocalParams>(new LocalParams());
  prm->p_ = cfg.p;
  prm->ell_ = cfg.ell;
  prm->k_ = cfg.precision;
  prm->pres_ = cfg.presentation;
  prm->conv_ = cfg.convention;
  prm->xi_power_ = (cfg.convention == XiConvention::kInverseFrobenius) ? cfg.ell - 1 : 1;
  if (cfg.ell == 2) prm->xi_power_ = 1;  // the two conventions coincide

  prm->pk_ = 1;
  for (std::int64_t i = 0; i < cfg.precision; ++i) {
    prm->pk_ *= cfg.p;
    if (prm->pk_ > 1'000'000'000) throw BudgetExceeded("LocalParams: p^k too large for exact int64 arithmetic");
  }

  prm->residue_ = FieldTower::make({cfg.p, 1, cfg.ell}, budget);
  const auto& f = *prm->residue_;
  const std::int64_t ell = cfg.ell, p = cfg.p, pk = prm->pk_;

  // Teichmueller scalar lift in Z/p^k: iterate x -> x^p to the fixed point
  auto teich_scalar = [&](std::int64_t residue_value) {
    std::int64_t z = mod_reduce(residue_value, pk);
    for (std::int64_t it = 0; it <= prm->k_ + 1; ++it) {
      std::int64_t w = 1, b = z, e = p;
      while (e > 0) {
        if (e & 1) w = w * b % pk;
        b = b * b % pk;
        e >>= 1;
      }
      z = w;
    }
    return z;
  };

  if (cfg.presentation == Presentation::kKummer) {
    if ((f.q() - 1) % ell != 0)
      throw UnsupportedPresentation("Kummer presentation requires ell | q - 1");

    // Delta: a unit that is not an ell-th power mod p
    std::int64_t delta = 0;
    if (cfg.delta) {
      delta = *cfg.delta;
      const auto d_res = f.from_coeffs({delta});
      if (d_res.is_zero() || d_res.pow((f.q() - 1) / ell).is_one())
        throw std::invalid_argument("LocalParams: Delta must be a non-ell-th-power unit");
    } else {
      for (std::int64_t d = 2; d < p; ++d) {
        const auto d_res = f.from_coeffs({d});
        if (!d_res.pow((f.q() - 1) / ell).is_one()) {
          delta = d;
          break;
        }
      }
      if (delta == 0) throw std::logic_error("LocalParams: no Kummer unit found");
    }
    prm->delta_ = mod_reduce(delta, pk);

    // rho: the numerically least ell-th root of Delta in the residue tower
    const std::int64_t target = f.from_coeffs({delta}).dlog();
    std::int64_t t = -1;
    for (std::int64_t c = 0; c < f.unit_order(); ++c)
      if (mod_reduce(ell * c - target, f.unit_order()) == 0) {
        t = c;
        break;
      }
    if (t < 0) throw std::logic_error("LocalParams: Delta has no ell-th root in the residue tower");
    prm->rho_ = f.from_exponent(t);
    prm->rho_pows_.resize(ell);
    for (std::int64_t j = 0; j < ell; ++j) prm->rho_pows_[j] = prm->rho_.pow(j);

    // F(delta) = frob_scalar * delta with frob_scalar = Teich(rho^(q-1));
    // xi = F^s, so xi(delta) = frob_scalar^s * delta
    const std::int64_t zeta_f = prm->rho_.pow(f.q() - 1).coeffs()[0];
    prm->frob_scalar_ = teich_scalar(zeta_f);
    std::int64_t ups = 1;
    for (std::int64_t i = 0; i < prm->xi_power_; ++i) ups = ups * prm->frob_scalar_ % pk;
    prm->upsilon_ = ups;
  } else {
    // monic lift of the residue modulus
    prm->hmod_ = f.modulus();

    // Newton iteration for the root of h with residue X^q
    auto poly_eval = [&](const std::vector<std::int64_t>& poly, const LocalElem& z) {
      LocalElem acc = prm->from_int(poly.back());
      for (std::int64_t i = static_cast<std::int64_t>(poly.size()) - 2; i >= 0; --i)
        acc = acc * z + prm->from_int(poly[i]);
      return acc;
    };
    std::vector<std::int64_t> hprime(ell, 0);
    for (std::int64_t i = 1; i <= ell; ++i)
      hprime[i - 1] = mod_reduce(i * (i < ell ? prm->hmod_[i] : 1), pk);

    // the residue class of X is the packed value p (coefficient vector e_1)
    const TowerElem xbar = f.from_coeffs({0, 1});
    LocalElem root = prm->from_coeffs(xbar.frobenius().coeffs());
    for (std::int64_t it = 0; it <= prm->k_ + 1; ++it) {
      LocalElem num = poly_eval(prm->hmod_, root);
      LocalElem den = poly_eval(hprime, root);
      root = root - num * den.inverse();
    }
    if (!poly_eval(prm->hmod_, root).is_zero())
      throw std::logic_error("LocalParams: Newton iteration for the Frobenius root failed");

    prm->frob_mat_.assign(ell, std::vector<std::int64_t>(ell, 0));
    LocalElem rp = prm->one();
    for (std::int64_t j = 0; j < ell; ++j) {
      for (std::int64_t i = 0; i < ell; ++i) prm->frob_mat_[i][j] = rp.coeffs()[i];
      rp = rp * root;
    }
    // xi matrix: s-fold composition of the Frobenius lift
    auto mat_mul = [&](const auto& a, const auto& b) {
      std::vector<std::vector<std::int64_t>> c(ell, std::vector<std::int64_t>(ell, 0));
      for (std::int64_t i = 0; i < ell; ++i)
        for (std::int64_t kk = 0; kk < ell; ++kk)
          for (std::int64_t j = 0; j < ell; ++j) c[i][j] = (c[i][j] + a[i][kk] * b[kk][j]) % pk;
      return c;
    };
    std::vector<std::vector<std::int64_t>> id(ell, std::vector<std::int64_t>(ell, 0));
    for (std::int64_t i = 0; i < ell; ++i) id[i][i] = 1;
    prm->xi_mat_ = id;
    for (std::int64_t i = 0; i < prm->xi_power_; ++i) prm->xi_mat_ = mat_mul(prm->xi_mat_, prm->frob_mat_);
  }

  // matrix taking standard residue coordinates to presentation coordinates
  {
    std::vector<std::vector<std::int64_t>> basis(ell, std::vector<std::int64_t>(ell, 0));
    for (std::int64_t j = 0; j < ell; ++j) {
      const auto col = (cfg.presentation == Presentation::kKummer)
                           ? prm->rho_pows_[j].coeffs()
                           : f.from_coeffs({0, 1}).pow(j).coeffs();
      for (std::int64_t i = 0; i < ell; ++i) basis[i][j] = col[i];
    }
    // store the basis matrix; residue_coords solves against it
    prm->residue_coord_mat_ = basis;
  }

  return prm;
}

std::int64_t LocalParams::delta() const {
  if (pres_ != Presentation::kKummer) throw UnsupportedPresentation("delta: polynomial presentation");
  return delta_;
}

std::int64_t LocalParams::upsilon() const {
  if (pres_ != Presentation::kKummer) throw UnsupportedPresentation("upsilon: polynomial presentation");
  return upsilon_;
}

LocalElem LocalParams::zero() const {
  return LocalElem(shared_from_this(), std::vector<std::int64_t>(ell_, 0));
}

LocalElem LocalParams::one() const { return from_int(1); }

LocalElem LocalParams::from_int(std::int64_t c) const {
  std::vector<std::int64_t> v(ell_, 0);
  v[0] = mod_reduce(c, pk_);
  return LocalElem(shared_from_this(), std::move(v));
}

LocalElem LocalParams::from_coeffs(std::vector<std::int64_t> c) const {
  if (static_cast<std::int64_t>(c.size()) > ell_)
    throw std::invalid_argument("LocalParams: too many coefficients");
  c.resize(ell_, 0);
  for (auto& x : c) x = mod_reduce(x, pk_);
  return LocalElem(shared_from_this(), std::move(c));
}

LocalElem LocalParams::uniformizer() const { return from_int(p_); }

LocalElem LocalParams::basis_elem(int i) const {
  if (i < 0 || i >= ell_) throw std::invalid_argument("LocalParams: basis index out of range");
  std::vector<std::int64_t> v(ell_, 0);
  v[i] = 1;
  return LocalElem(shared_from_this(), std::move(v));
}

LocalElem LocalParams::teichmueller(const TowerElem& x) const {
  if (x.is_zero()) return zero();
  LocalElem z = from_coeffs(residue_coords(x));
  const std::int64_t qell = residue_->q_ell();
  for (std::int64_t it = 0; it <= k_ + 1; ++it) z = z.pow(qell);
  if (!(z.pow(qell) == z)) throw std::logic_error("teichmueller: iteration did not stabilize");
  return z;
}

std::vector<std::int64_t> LocalParams::mul_coeffs(const std::vector<std::int64_t>& a,
                                                  const std::vector<std::int64_t>& b,
                                                  std::int64_t mod) const {
  std::vector<std::int64_t> c(ell_, 0);
  if (pres_ == Presentation::kKummer) {
    const std::int64_t d = delta_ % mod;
    for (std::int64_t i = 0; i < ell_; ++i) {
      if (a[i] == 0) continue;
      for (std::int64_t j = 0; j < ell_; ++j) {
        const std::int64_t t = i + j;
        if (t < ell_) {
          c[t] = (c[t] + a[i] % mod * (b[j] % mod)) % mod;
        } else {
          c[t - ell_] = (c[t - ell_] + a[i] % mod * (b[j] % mod) % mod * d) % mod;
        }
      }
    }
  } else {
    std::vector<std::int64_t> full(2 * ell_ - 1, 0);
    for (std::int64_t i = 0; i < ell_; ++i) {
      if (a[i] == 0) continue;
      for (std::int64_t j = 0; j < ell_; ++j) full[i + j] = (full[i + j] + a[i] % mod * (b[j] % mod)) % mod;
    }
    for (std::int64_t t = 2 * ell_ - 2; t >= ell_; --t) {
      const std::int64_t lead = full[t];
      if (lead == 0) continue;
      full[t] = 0;
      for (std::int64_t i = 0; i < ell_; ++i)
        full[t - ell_ + i] = mod_reduce(full[t - ell_ + i] - lead * (hmod_[i] % mod), mod);
    }
    full.resize(ell_);
    c = std::move(full);
  }
  return c;
}

std::vector<std::int64_t> LocalParams::apply_xi(const std::vector<std::int64_t>& c, std::int64_t mod,
                                                std::int64_t power) const {
  power = ((power % ell_) + ell_) % ell_;
  std::vector<std::int64_t> out = c;
  for (auto& x : out) x = mod_reduce(x, mod);
  if (pres_ == Presentation::kKummer) {
    std::int64_t scale = 1;
    std::int64_t step = upsilon_ % mod;
    for (std::int64_t i = 0; i < power; ++i) scale = scale * step % mod;
    // coefficient i of xi^power: multiplied by upsilon^(power * i)
    std::int64_t factor = 1;
    for (std::int64_t i = 0; i < ell_; ++i) {
      out[i] = out[i] * factor % mod;
      factor = factor * scale % mod;
    }
  } else {
    for (std::int64_t it = 0; it < power; ++it) {
      std::vector<std::int64_t> next(ell_, 0);
      for (std::int64_t i = 0; i < ell_; ++i)
        for (std::int64_t j = 0; j < ell_; ++j) next[i] = (next[i] + xi_mat_[i][j] % mod * out[j]) % mod;
      out = std::move(next);
    }
  }
  return out;
}

std::vector<std::int64_t> LocalParams::apply_frob_lift(const std::vector<std::int64_t>& c,
                                                       std::int64_t mod, std::int64_t power) const {
  power = ((power % ell_) + ell_) % ell_;
  std::vector<std::int64_t> out = c;
  for (auto& x : out) x = mod_reduce(x, mod);
  if (pres_ == Presentation::kKummer) {
    std::int64_t scale = 1;
    std::int64_t step = frob_scalar_ % mod;
    for (std::int64_t i = 0; i < power; ++i) scale = scale * step % mod;
    std::int64_t factor = 1;
    for (std::int64_t i = 0; i < ell_; ++i) {
      out[i] = out[i] * factor % mod;
      factor = factor * scale % mod;
    }
  } else {
    for (std::int64_t it = 0; it < power; ++it) {
      std::vector<std::int64_t> next(ell_, 0);
      for (std::int64_t i = 0; i < ell_; ++i)
        for (std::int64_t j = 0; j < ell_; ++j) next[i] = (next[i] + frob_mat_[i][j] % mod * out[j]) % mod;
      out = std::move(next);
    }
  }
  return out;
}

TowerElem LocalParams::residue_of(const std::vector<std::int64_t>& c) const {
  const auto& f = *residue_;
  if (pres_ == Presentation::kKummer) {
    TowerElem acc = f.zero();
    for (std::int64_t i = 0; i < ell_; ++i) {
      if (c[i] % p_ == 0) continue;
      acc = acc + f.from_coeffs({c[i] % p_}) * rho_pows_[i];
    }
    return acc;
  }
  std::vector<std::int64_t> red(ell_);
  for (std::int64_t i = 0; i < ell_; ++i) red[i] = mod_reduce(c[i], p_);
  return f.from_coeffs(red);
}

std::vector<std::int64_t> LocalParams::residue_coords(const TowerElem& x) const {
  auto std_coords = x.coeffs();
  std_coords.resize(ell_, 0);
  if (pres_ == Presentation::kPolynomial) return std_coords;
  return solve_mod_p(residue_coord_mat_, std_coords, p_);
}

bool LocalElem::is_zero() const {
  for (auto c : c_)
    if (c != 0) return false;
  return true;
}

bool LocalElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool LocalElem::in_base_ring() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % params_->pk_;
  return LocalElem(params_, std::move(c));
}

LocalElem LocalElem::operator-(const LocalElem& o) const {
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mod_reduce(c_[i] - o.c_[i], params_->pk_);
  return LocalElem(params_, std::move(c));
}

LocalElem LocalElem::operator-() const {
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mod_reduce(-c_[i], params_->pk_);
  return LocalElem(params_, std::move(c));
}

LocalElem LocalElem::operator*(const LocalElem& o) const {
  return LocalElem(params_, params_->mul_coeffs(c_, o.c_, params_->pk_));
}

LocalElem LocalElem::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  LocalElem acc = params_->one(), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

LocalElem LocalElem::inverse() const {
  if (!is_unit()) throw PrecisionLoss("LocalElem: inverse of a non-unit");
  // Newton from the residue inverse: z <- z(2 - tz)
  const auto rbar = residue();
  LocalElem z = params_->from_coeffs(params_->residue_coords(rbar.inverse()));
  const LocalElem two = params_->from_int(2);
  for (std::int64_t it = 0; it <= params_->k_ + 1; ++it) z = z * (two - *this * z);
  if (!(z * *this).is_one()) throw std::logic_error("LocalElem: Newton inverse failed");
  return z;
}

std::int64_t LocalElem::valuation() const {
  std::int64_t v = params_->k_;
  for (auto c : c_) v = std::min(v, vp(c, params_->p_, params_->k_));
  return v;
}

std::pair<std::int64_t, LocalElem> LocalElem::unit_decompose() const {
  const std::int64_t n = valuation();
  if (n >= params_->k_) throw PrecisionLoss("unit_decompose: element vanishes at working precision");
  std::int64_t pn = 1;
  for (std::int64_t i = 0; i < n; ++i) pn *= params_->p_;
  std::vector<std::int64_t> u(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) u[i] = c_[i] / pn;
  return {n, LocalElem(params_, std::move(u))};
}

TowerElem LocalElem::residue() const { return params_->residue_of(c_); }

LocalElem LocalElem::xi(std::int64_t power) const {
  return LocalElem(params_, params_->apply_xi(c_, params_->pk_, power));
}

LocalElem LocalElem::frob_lift(std::int64_t power) const {
  return LocalElem(params_, params_->apply_frob_lift(c_, params_->pk_, power));
}

}  // namespace langlands
