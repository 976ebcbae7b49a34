#include "langlands/torus_character.hpp"

#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

RootOfUnity TorusChar::eval(const LocalElem& t) const {
  const auto [n, u] = t.unit_decompose();
  if (t.params()->precision() - n < units->level() + 1)
    throw PrecisionLoss("TorusChar: unit part not known to level precision");
  RootOfUnity out = cochar.pow(n);
  const auto& exps = units->exponents_of(units->index_of_coeffs(u.coeffs()));
  for (std::size_t i = 0; i < exps.size(); ++i) out = out * unit_gen_values[i].pow(exps[i]);
  return out;
}

TorusChar moy_target(const AdmissiblePair& pair) {
  return TorusChar{pair.chi.unit_group(), pair.chi.gen_values(),
                   pair.chi.varpi_value() * delta_varpi_value(pair.field->ell())};
}

// ---- ResidueTorus ------------------------------------------------------

ResidueTorus::ResidueTorus(std::shared_ptr<const FieldTower> tower) : tower_(std::move(tower)) {}

ResidueTorus::Tuple ResidueTorus::phi_sigma(const Tuple& x) const {
  const std::int64_t n = ell();
  Tuple out(n);
  out[0] = x[n - 1].frobenius();
  for (std::int64_t i = 1; i < n; ++i) out[i] = x[i - 1].frobenius();
  return out;
}

ResidueTorus::Tuple ResidueTorus::mul(const Tuple& x, const Tuple& y) const {
  Tuple out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

bool ResidueTorus::is_fixed(const Tuple& x) const {
  const Tuple y = phi_sigma(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(y[i] == x[i])) return false;
  return true;
}

TowerElem ResidueTorus::twisted_norm(const Tuple& x) const {
  Tuple acc = x, power = x;
  for (std::int64_t i = 1; i < ell(); ++i) {
    power = phi_sigma(power);
    acc = mul(acc, power);
  }
  if (!is_fixed(acc)) throw NormNotSurjective("twisted_norm: image is not Phi_sigma-fixed");
  return acc[0];
}

ResidueTorus::Tuple ResidueTorus::section(const TowerElem& a) const {
  Tuple out(ell(), tower_->one());
  out[0] = a;
  return out;
}

ResidueTorus::Tuple ResidueTorus::random_norm_one(std::mt19937_64& rng) const {
  Tuple t(ell());
  for (auto& c : t) c = tower_->from_exponent(static_cast<std::int64_t>(rng() % tower_->unit_order()));
  const Tuple ft = phi_sigma(t);
  Tuple out(ell());
  for (std::int64_t i = 0; i < ell(); ++i) out[i] = ft[i] * t[i].inverse();
  return out;
}

RootOfUnity ResidueTorus::lambda_eval(std::int64_t chi_exponent, const Tuple& x) const {
  // slot i carries chi_o composed with the (-i)-th power of x -> x^q; this is
  // the unique Phi_sigma-equivariant extension with chi_o itself in slot 0
  const std::int64_t group = tower_->unit_order();
  RootOfUnity out;
  for (std::int64_t i = 0; i < ell(); ++i) {
    const TowerElem twisted = x[i].frobenius_pow(ell() - i);
    out = out * RootOfUnity(chi_exponent * twisted.dlog(), group);
  }
  return out;
}

// ---- UnitTorus -----------------------------------------------------------

UnitTorus::UnitTorus(std::shared_ptr<const UnitGroupModel> units) : units_(std::move(units)) {}

UnitTorus::Tuple UnitTorus::phi_sigma(const Tuple& x) const {
  const std::int64_t n = ell();
  Tuple out(n);
  out[0] = units_->frob(x[n - 1]);
  for (std::int64_t i = 1; i < n; ++i) out[i] = units_->frob(x[i - 1]);
  return out;
}

UnitTorus::Tuple UnitTorus::mul(const Tuple& x, const Tuple& y) const {
  Tuple out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = units_->mul(x[i], y[i]);
  return out;
}

bool UnitTorus::is_fixed(const Tuple& x) const { return phi_sigma(x) == x; }

std::int64_t UnitTorus::twisted_norm(const Tuple& x) const {
  Tuple acc = x, power = x;
  for (std::int64_t i = 1; i < ell(); ++i) {
    power = phi_sigma(power);
    acc = mul(acc, power);
  }
  if (!is_fixed(acc)) throw NormNotSurjective("twisted_norm: image is not Phi_sigma-fixed");
  return acc[0];
}

UnitTorus::Tuple UnitTorus::section(std::int64_t a) const {
  Tuple out(ell(), units_->identity_index());
  out[0] = a;
  return out;
}

UnitTorus::Tuple UnitTorus::random_norm_one(std::mt19937_64& rng) const {
  Tuple t(ell());
  for (auto& c : t) c = static_cast<std::int64_t>(rng() % units_->order());
  const Tuple ft = phi_sigma(t);
  Tuple out(ell());
  for (std::int64_t i = 0; i < ell(); ++i) out[i] = units_->mul(ft[i], units_->inv(t[i]));
  return out;
}

RootOfUnity UnitTorus::lambda_eval(const LevelChar& chi, const Tuple& x) const {
  RootOfUnity out;
  for (std::int64_t i = 0; i < ell(); ++i)
    out = out * chi.eval_index(units_->frob_pow(x[i], ell() - i));
  return out;
}

// ---- the construction ----------------------------------------------------

std::vector<RootOfUnity> chi_s_from_parameter(const Trselp& phi, int preimage_samples) {
  const auto& chi = phi.inertia_char;
  const auto& units = chi.unit_group();
  UnitTorus torus(units);
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<std::uint64_t>(units->order()));

  const auto& gens = units->generators();
  std::vector<RootOfUnity> values(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::int64_t a = units->index_of_coeffs(gens[i].coeffs);
    const auto base = torus.section(a);
    if (torus.twisted_norm(base) != a)
      throw NormNotSurjective("chi_s: section is not a norm preimage");
    const RootOfUnity value = torus.lambda_eval(chi, base);

    for (int s = 0; s < preimage_samples; ++s) {
      const auto other = torus.mul(base, torus.random_norm_one(rng));
      if (torus.twisted_norm(other) != a)
        throw NormNotSurjective("chi_s: perturbed preimage left the fiber");
      if (!(torus.lambda_eval(chi, other) == value))
        throw CrossCheckFailure("chi_s: Lambda disagrees across N_sigma preimages");
    }
    if (!(value == chi.eval_index(a)))
      throw CrossCheckFailure("chi_s: isomorphism chain disagrees with the closed form chi");
    values[i] = value;
  }
  return values;
}

std::pair<MonomialMatrix, RootOfUnity> tau_from_parameter(const Trselp& phi) {
  const int ell = phi.frobenius_image.size();
  const RootOfUnity d = phi.frobenius_image.det();
  std::vector<RootOfUnity> diag(ell);
  diag[0] = d;
  MonomialMatrix tau = MonomialMatrix::diagonal(std::move(diag));
  // tau and f must lie in the same GL/SL coset
  if (!(tau * phi.frobenius_image.inverse()).det().is_one())
    throw CrossCheckFailure("tau_from_parameter: coset mismatch against f");
  return {std::move(tau), d};
}

TorusChar chi_phi(const Trselp& phi) {
  auto values = chi_s_from_parameter(phi);

  if (phi.depth == 0) {
    // cross-check the unit-group chain against the residue-field chain
    const auto& units = phi.inertia_char.unit_group();
    const auto& tower = units->params()->residue_field();
    ResidueTorus rtorus(tower);
    std::mt19937_64 rng(0xd1a90000ULL);
    const RootOfUnity chi_gen = phi.inertia_char.eval_index(units->teichmueller_gen_index());
    const std::int64_t chi_exp = chi_gen.num() * (tower->unit_order() / chi_gen.den());
    const auto base = rtorus.section(tower->gen());
    const RootOfUnity via_residue = rtorus.lambda_eval(chi_exp, base);
    for (int s = 0; s < 4; ++s) {
      const auto other = rtorus.mul(base, rtorus.random_norm_one(rng));
      if (!(rtorus.lambda_eval(chi_exp, other) == via_residue))
        throw CrossCheckFailure("chi_phi: residue-chain Lambda not constant on the fiber");
    }
    if (!(via_residue == values[0]))
      throw CrossCheckFailure("chi_phi: residue chain and unit chain disagree");
  }

  auto [tau, chi_tau] = tau_from_parameter(phi);
  (void)tau;
  return TorusChar{phi.inertia_char.unit_group(), std::move(values), chi_tau};
}

TorusChar reeder_positive_depth_chi_phi(const Trselp& phi) {
  if (phi.depth < 1)
    throw std::invalid_argument("reeder_positive_depth_chi_phi: depth must be >= 1");
  auto values = chi_s_from_parameter(phi);
  auto [tau, chi_tau] = tau_from_parameter(phi);
  (void)tau;
  return TorusChar{phi.inertia_char.unit_group(), std::move(values), chi_tau};
}

// ---- brute-force verifications -------------------------------------------

namespace {

// iterate all unit tuples of length ell; f returns false to abort
template <typename F>
bool for_all_tuples(const ResidueTorus& torus, F&& f) {
  const std::int64_t n = torus.tower()->unit_order();
  const std::int64_t ell = torus.ell();
  std::vector<std::int64_t> idx(ell, 0);
  for (;;) {
    ResidueTorus::Tuple t(ell);
    for (std::int64_t i = 0; i < ell; ++i) t[i] = torus.tower()->from_exponent(idx[i]);
    if (!f(t)) return false;
    std::int64_t i = 0;
    while (i < ell) {
      if (++idx[i] < n) break;
      idx[i] = 0;
      ++i;
    }
    if (i == ell) break;
  }
  return true;
}

}  // namespace

bool verify_norm_fibers_exhaustive(const ResidueTorus& torus) {
  const std::int64_t n = torus.tower()->unit_order();
  const std::int64_t ell = torus.ell();
  std::int64_t expected_fiber = 1;
  for (std::int64_t i = 1; i < ell; ++i) expected_fiber *= n;

  std::vector<std::int64_t> fiber(n, 0);
  const bool ok = for_all_tuples(torus, [&](const ResidueTorus::Tuple& t) {
    fiber[torus.twisted_norm(t).dlog()] += 1;
    return true;
  });
  if (!ok) return false;
  for (std::int64_t a = 0; a < n; ++a)
    if (fiber[a] != expected_fiber) return false;
  return true;
}

bool verify_lambda_well_defined_exhaustive(const ResidueTorus& torus) {
  const std::int64_t n = torus.tower()->unit_order();
  // precompute norm and all equivariant Lambda values per tuple, then run
  // every pair: equal norms must force equal values for every Lambda
  std::vector<std::int64_t> norms;
  std::vector<std::vector<RootOfUnity>> lambdas;
  for_all_tuples(torus, [&](const ResidueTorus::Tuple& t) {
    norms.push_back(torus.twisted_norm(t).dlog());
    std::vector<RootOfUnity> row(n);
    for (std::int64_t e = 0; e < n; ++e) row[e] = torus.lambda_eval(e, t);
    lambdas.push_back(std::move(row));
    return true;
  });
  for (std::size_t x = 0; x < norms.size(); ++x)
    for (std::size_t y = 0; y < norms.size(); ++y)
      if (norms[x] == norms[y] && lambdas[x] != lambdas[y]) return false;
  return true;
}

bool verify_lambda_well_defined_sampled(const ResidueTorus& torus, std::int64_t samples,
                                        std::uint64_t seed) {
  const std::int64_t n = torus.tower()->unit_order();
  std::mt19937_64 rng(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    ResidueTorus::Tuple x(torus.ell());
    for (auto& c : x) c = torus.tower()->from_exponent(static_cast<std::int64_t>(rng() % n));
    const auto y = torus.mul(x, torus.random_norm_one(rng));
    if (!(torus.twisted_norm(x) == torus.twisted_norm(y))) return false;
    const std::int64_t e = static_cast<std::int64_t>(rng() % n);
    if (!(torus.lambda_eval(e, x) == torus.lambda_eval(e, y))) return false;
  }
  return true;
}

}  // namespace langlands
