#include "langlands/unit_group.hpp"

#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

namespace {

std::int64_t pack_coeffs(const std::vector<std::int64_t>& c, std::int64_t base) {
  std::int64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * base + c[i];
  return v;
}

}  // namespace

std::shared_ptr<const UnitGroupModel> UnitGroupModel::build(std::shared_ptr<const LocalParams> params,
                                                            std::int64_t level, std::int64_t budget) {
  const std::int64_t p = params->p(), ell = params->ell(), k = params->precision();
  if (level < 0) throw std::invalid_argument("UnitGroupModel: level must be >= 0");
  if (level + 1 > k) throw PrecisionLoss("UnitGroupModel: level exceeds working precision");
  if (p == 2 && level >= 1) throw Unsupported("UnitGroupModel: principal units at p = 2");

  auto g = std::shared_ptr<UnitGroupModel>(new UnitGroupModel());
  g->params_ = params;
  g->r_ = level;

  std::int64_t pr1 = 1, space = 1;
  for (std::int64_t i = 0; i <= level; ++i) pr1 *= p;
  for (std::int64_t i = 0; i < ell; ++i) {
    space *= pr1;
    if (space > budget) throw BudgetExceeded("UnitGroupModel: q^(ell(r+1)) exceeds enumeration budget");
  }
  g->pr1_ = pr1;

  const auto& f = *params->residue_field();
  const std::int64_t pr = pr1 / p;  // p^r

  // generators: Teichmueller lift of the residue generator, then 1 + p*basis_j
  auto teich = params->teichmueller(f.gen());
  std::vector<std::int64_t> tcoeffs = teich.coeffs();
  for (auto& c : tcoeffs) c %= pr1;
  g->gens_.push_back({tcoeffs, f.unit_order()});
  if (level >= 1) {
    for (std::int64_t j = 0; j < ell; ++j) {
      std::vector<std::int64_t> c(ell, 0);
      c[0] = 1;
      c[j] = (c[j] + p) % pr1;
      g->gens_.push_back({c, pr});
    }
  }

  std::int64_t expected = f.unit_order();
  for (std::size_t i = 1; i < g->gens_.size(); ++i) expected *= pr;
  g->order_ = expected;

  // enumerate the span in mixed-radix order and verify it regenerates the group
  g->elem_coeffs_.reserve(expected);
  g->elem_exps_.reserve(expected);
  g->packed_to_index_.assign(space, -1);

  const std::size_t ngens = g->gens_.size();
  std::vector<std::int64_t> exps(ngens, 0);
  std::vector<std::vector<std::int64_t>> gen_pow(ngens);  // current power of each generator
  for (std::size_t i = 0; i < ngens; ++i) {
    gen_pow[i] = std::vector<std::int64_t>(ell, 0);
    gen_pow[i][0] = 1;
  }

  auto mul_mod = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return params->mul_coeffs(a, b, pr1);
  };

  for (std::int64_t count = 0; count < expected; ++count) {
    std::vector<std::int64_t> cur = gen_pow[0];
    for (std::size_t i = 1; i < ngens; ++i) cur = mul_mod(cur, gen_pow[i]);
    const std::int64_t packed = pack_coeffs(cur, pr1);
    if (g->packed_to_index_[packed] != -1)
      throw std::logic_error("UnitGroupModel: generator decomposition failed to be direct");
    g->packed_to_index_[packed] = static_cast<std::int32_t>(count);
    g->elem_coeffs_.push_back(cur);
    g->elem_exps_.push_back(exps);

    // increment the mixed-radix exponent tuple
    for (std::size_t i = 0; i < ngens; ++i) {
      exps[i] += 1;
      gen_pow[i] = mul_mod(gen_pow[i], g->gens_[i].coeffs);
      if (exps[i] < g->gens_[i].order) break;
      exps[i] = 0;
      gen_pow[i] = std::vector<std::int64_t>(ell, 0);
      gen_pow[i][0] = 1;
    }
  }

  // sanity: the unit count of the quotient ring matches
  std::int64_t units = f.unit_order();
  for (std::int64_t i = 0; i < level; ++i)
    for (std::int64_t j = 0; j < ell; ++j) units *= p;
  if (units != expected) throw std::logic_error("UnitGroupModel: order bookkeeping failed");

  g->xi_perm_.resize(expected);
  g->frob_perm_.resize(expected);
  for (std::int64_t i = 0; i < expected; ++i) {
    g->xi_perm_[i] = static_cast<std::int32_t>(g->index_of_coeffs(params->apply_xi(g->elem_coeffs_[i], pr1)));
    g->frob_perm_[i] =
        static_cast<std::int32_t>(g->index_of_coeffs(params->apply_frob_lift(g->elem_coeffs_[i], pr1)));
  }

  g->teich_gen_index_ = g->index_of_coeffs(tcoeffs);
  return g;
}

std::int64_t UnitGroupModel::index_of_coeffs(const std::vector<std::int64_t>& coeffs) const {
  std::vector<std::int64_t> red(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) red[i] = ((coeffs[i] % pr1_) + pr1_) % pr1_;
  const std::int64_t packed = pack_coeffs(red, pr1_);
  const std::int32_t idx = packed_to_index_[packed];
  if (idx < 0) throw std::invalid_argument("UnitGroupModel: coefficients do not name a unit");
  return idx;
}

std::int64_t UnitGroupModel::index_of_unit(const LocalElem& u) const {
  if (!u.is_unit()) throw std::invalid_argument("UnitGroupModel: element is not a unit");
  return index_of_coeffs(u.coeffs());
}

std::int64_t UnitGroupModel::index_of_exponents(const std::vector<std::int64_t>& exps) const {
  // mixed-radix rank with generator 0 slowest? generators are ranked in
  // enumeration order: exponent of gens_[0] increments first
  std::int64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const std::int64_t d = gens_[i].order;
    idx += ((exps[i] % d + d) % d) * stride;
    stride *= d;
  }
  return idx;
}

std::int64_t UnitGroupModel::mul(std::int64_t a, std::int64_t b) const {
  const auto& ea = elem_exps_[a];
  const auto& eb = elem_exps_[b];
  std::vector<std::int64_t> e(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
  return index_of_exponents(e);
}

std::int64_t UnitGroupModel::inv(std::int64_t a) const {
  const auto& ea = elem_exps_[a];
  std::vector<std::int64_t> e(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i) e[i] = -ea[i];
  return index_of_exponents(e);
}

std::int64_t UnitGroupModel::pow(std::int64_t a, std::int64_t e) const {
  const auto& ea = elem_exps_[a];
  std::vector<std::int64_t> out(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const std::int64_t d = gens_[i].order;
    out[i] = ((ea[i] * (e % d)) % d + d) % d;
  }
  return index_of_exponents(out);
}

std::int64_t UnitGroupModel::frob_pow(std::int64_t a, std::int64_t e) const {
  e = ((e % params_->ell()) + params_->ell()) % params_->ell();
  std::int64_t out = a;
  for (std::int64_t i = 0; i < e; ++i) out = frob_perm_[out];
  return out;
}

}  // namespace langlands
