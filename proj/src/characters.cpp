#include "langlands/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

LevelChar::LevelChar(std::shared_ptr<const UnitGroupModel> units, std::vector<RootOfUnity> gen_values,
                     RootOfUnity varpi_value)
    : units_(std::move(units)), gen_values_(std::move(gen_values)), varpi_value_(varpi_value) {
  const auto& gens = units_->generators();
  if (gen_values_.size() != gens.size())
    throw std::invalid_argument("LevelChar: one value per generator required");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gen_values_[i].pow(gens[i].order).is_one())
      throw std::invalid_argument("LevelChar: value order must divide the generator order");
}

LevelChar LevelChar::trivial(std::shared_ptr<const UnitGroupModel> units) {
  const std::size_t n = units->generators().size();
  return LevelChar(std::move(units), std::vector<RootOfUnity>(n), RootOfUnity::one());
}

bool LevelChar::has_exact_level() const {
  const std::int64_t r = level();
  if (r == 0) return true;
  // evaluate on 1 + p^r * basis_j; nontrivial somewhere iff level is exact
  const auto& prm = *units_->params();
  std::int64_t pr = 1;
  for (std::int64_t i = 0; i < r; ++i) pr *= prm.p();
  for (std::int64_t j = 0; j < prm.ell(); ++j) {
    std::vector<std::int64_t> c(prm.ell(), 0);
    c[0] = 1;
    c[j] = (c[j] + pr) % units_->quotient_modulus();
    if (!eval_index(units_->index_of_coeffs(c)).is_one()) return true;
  }
  return false;
}

bool LevelChar::trivial_on_units() const {
  for (const auto& v : gen_values_)
    if (!v.is_one()) return false;
  return true;
}

RootOfUnity LevelChar::eval_index(std::int64_t unit_index) const {
  const auto& exps = units_->exponents_of(unit_index);
  RootOfUnity out;
  for (std::size_t i = 0; i < exps.size(); ++i) out = out * gen_values_[i].pow(exps[i]);
  return out;
}

RootOfUnity LevelChar::eval_unit(const LocalElem& u) const { return eval_index(units_->index_of_unit(u)); }

RootOfUnity LevelChar::eval(const LocalElem& t) const {
  const auto [n, u] = t.unit_decompose();
  if (t.params()->precision() - n < level() + 1)
    throw PrecisionLoss("LevelChar: unit part not known to level precision");
  return varpi_value_.pow(n) * eval_index(units_->index_of_coeffs(u.coeffs()));
}

RootOfUnity LevelChar::eval_residue(const TowerElem& x) const {
  if (x.is_zero()) throw ZeroElement("LevelChar: residue character at zero");
  // chi_o(gen)^dlog; the Teichmueller generator reduces to the residue generator
  return eval_index(units_->teichmueller_gen_index()).pow(x.dlog());
}

LevelChar LevelChar::xi_twist(std::int64_t power) const {
  const std::int64_t ell = units_->params()->ell();
  power = ((power % ell) + ell) % ell;
  std::vector<RootOfUnity> vals(gen_values_.size());
  for (std::size_t i = 0; i < gen_values_.size(); ++i) {
    std::int64_t idx = units_->index_of_coeffs(units_->generators()[i].coeffs);
    for (std::int64_t s = 0; s < power; ++s) idx = units_->xi(idx);
    vals[i] = eval_index(idx);
  }
  return LevelChar(units_, std::move(vals), varpi_value_);
}

LevelChar LevelChar::frob_twist(std::int64_t power) const {
  std::vector<RootOfUnity> vals(gen_values_.size());
  for (std::size_t i = 0; i < gen_values_.size(); ++i) {
    const std::int64_t idx = units_->frob_pow(units_->index_of_coeffs(units_->generators()[i].coeffs), power);
    vals[i] = eval_index(idx);
  }
  return LevelChar(units_, std::move(vals), varpi_value_);
}

LevelChar LevelChar::operator*(const LevelChar& o) const {
  if (units_ != o.units_) throw std::invalid_argument("LevelChar: mismatched unit groups");
  std::vector<RootOfUnity> vals(gen_values_.size());
  for (std::size_t i = 0; i < gen_values_.size(); ++i) vals[i] = gen_values_[i] * o.gen_values_[i];
  return LevelChar(units_, std::move(vals), varpi_value_ * o.varpi_value_);
}

bool LevelChar::operator==(const LevelChar& o) const {
  return gen_values_ == o.gen_values_ && varpi_value_ == o.varpi_value_;
}

std::vector<std::int64_t> LevelChar::exponent_key() const {
  const auto& gens = units_->generators();
  std::vector<std::int64_t> key;
  key.reserve(gens.size() + 2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& v = gen_values_[i];
    key.push_back(v.num() * (gens[i].order / v.den()));
  }
  key.push_back(varpi_value_.den());
  key.push_back(varpi_value_.num());
  return key;
}

bool is_admissible(const LevelChar& chi) {
  // varpi is xi-fixed, so only the unit part decides
  return !chi.unit_part_equal(chi.xi_twist());
}

RootOfUnity delta_varpi_value(std::int64_t ell) {
  return ell == 2 ? RootOfUnity::minus_one() : RootOfUnity::one();
}

LevelChar delta_twist(const AdmissiblePair& pair) {
  return LevelChar::trivial(pair.chi.unit_group()).with_varpi(delta_varpi_value(pair.field->ell()));
}

std::vector<AdmissiblePair> enumerate_admissible(std::shared_ptr<const LocalParams> params,
                                                 std::int64_t level, std::int64_t varpi_order_bound,
                                                 std::int64_t budget) {
  if (varpi_order_bound < 1) throw std::invalid_argument("enumerate_admissible: N must be >= 1");
  auto units = UnitGroupModel::build(params, level, budget);
  const auto& gens = units->generators();

  std::vector<AdmissiblePair> out;
  std::vector<std::int64_t> exps(gens.size(), 0);
  for (;;) {
    std::vector<RootOfUnity> vals(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) vals[i] = RootOfUnity(exps[i], gens[i].order);
    LevelChar chi(units, std::move(vals), RootOfUnity::one());
    if (chi.has_exact_level() && is_admissible(chi)) {
      for (std::int64_t j = 0; j < varpi_order_bound; ++j)
        out.push_back({params, chi.with_varpi(RootOfUnity(j, varpi_order_bound))});
    }

    std::size_t i = 0;
    while (i < gens.size()) {
      if (++exps[i] < gens[i].order) break;
      exps[i] = 0;
      ++i;
    }
    if (i == gens.size()) break;
  }

  std::sort(out.begin(), out.end(), [](const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.chi.exponent_key() < b.chi.exponent_key();
  });
  return out;
}

std::vector<AdmissiblePair> orbit_representatives(const std::vector<AdmissiblePair>& pairs) {
  std::map<std::vector<std::int64_t>, AdmissiblePair> reps;
  for (const auto& pair : pairs) {
    const std::int64_t ell = pair.field->ell();
    std::vector<std::int64_t> best;
    const LevelChar* best_chi = nullptr;
    std::vector<LevelChar> twists;
    twists.reserve(ell);
    for (std::int64_t i = 0; i < ell; ++i) twists.push_back(pair.chi.xi_twist(i));
    for (const auto& tw : twists) {
      auto key = tw.exponent_key();
      if (best.empty() || key < best) {
        best = std::move(key);
        best_chi = &tw;
      }
    }
    if (reps.find(best) == reps.end()) reps.emplace(best, AdmissiblePair{pair.field, *best_chi});
  }
  std::vector<AdmissiblePair> out;
  out.reserve(reps.size());
  for (auto& [key, pair] : reps) out.push_back(std::move(pair));
  return out;
}

}  // namespace langlands
