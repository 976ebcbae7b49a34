#include "langlands/weil_parameter.hpp"

#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

Trselp induce_parameter(const AdmissiblePair& pair) {
  if (!is_admissible(pair.chi)) throw NotAdmissible("induce_parameter: chi is Galois-fixed");
  const int ell = static_cast<int>(pair.field->ell());

  // normal form: w = (1 2 ... ell); the scalar chi(varpi) rides the wrap
  // column, which is the top-right matrix entry
  std::vector<RootOfUnity> scalars(ell);
  scalars[ell - 1] = pair.chi.varpi_value();
  MonomialMatrix f = MonomialMatrix::cycle(ell, std::move(scalars));

  std::vector<int> w(ell);
  for (int i = 0; i < ell; ++i) w[i] = (i + 1) % ell;

  return Trselp{pair.field, pair.chi, std::move(f), std::move(w), pair.chi.level()};
}

bool parameters_equivalent(const Trselp& a, const Trselp& b) {
  if (a.field->p() != b.field->p() || a.field->ell() != b.field->ell() || a.depth != b.depth) return false;
  if (!(a.chi_varpi() == b.chi_varpi())) return false;
  for (std::int64_t i = 0; i < a.field->ell(); ++i)
    if (b.inertia_char.unit_part_equal(a.inertia_char.xi_twist(i))) return true;
  return false;
}

FiniteWeilQuotient::FiniteWeilQuotient(std::shared_ptr<const UnitGroupModel> units,
                                       std::int64_t varpi_order, std::int64_t budget)
    : units_(std::move(units)), ell_(units_->params()->ell()), varpi_order_(varpi_order) {
  if (varpi_order_ < 1) throw std::invalid_argument("FiniteWeilQuotient: N must be >= 1");
  if (order() > budget) throw BudgetExceeded("FiniteWeilQuotient: group order exceeds budget");
}

FiniteWeilQuotient::Elem FiniteWeilQuotient::mul(Elem x, Elem y) const {
  // (j^a u)(j^b v) = j^(a+b) xi^(-b)(u) v
  const std::int64_t n = ell_ * varpi_order_;
  std::int64_t u = x.u;
  const std::int64_t back = ((-y.a) % ell_ + ell_) % ell_;
  for (std::int64_t i = 0; i < back; ++i) u = units_->xi(u);
  return {(x.a + y.a) % n, units_->mul(u, y.u)};
}

FiniteWeilQuotient::Elem FiniteWeilQuotient::inv(Elem x) const {
  // (j^a u)^{-1} = u^{-1} j^{-a} = j^{-a} xi^a(u^{-1})
  const std::int64_t n = ell_ * varpi_order_;
  std::int64_t u = units_->inv(x.u);
  const std::int64_t fwd = (x.a % ell_ + ell_) % ell_;
  for (std::int64_t i = 0; i < fwd; ++i) u = units_->xi(u);
  return {((n - x.a) % n + n) % n, u};
}

OracleRow induction_oracle(const AdmissiblePair& pair, std::int64_t varpi_order, std::int64_t budget) {
  const auto& chi = pair.chi;
  if (!chi.varpi_value().pow(varpi_order).is_one())
    throw IncompatibleVarpiOrder("induction_oracle: chi(varpi)^N != 1");

  auto group = std::make_shared<FiniteWeilQuotient>(chi.unit_group(), varpi_order, budget);
  const std::int64_t ell = group->ell();
  const std::int64_t n = ell * varpi_order;
  const std::int64_t nu = chi.unit_group()->order();

  OracleRow row{group, std::vector<RootSum>(static_cast<std::size_t>(n) * nu)};
  for (std::int64_t a = 0; a < n; ++a) {
    if (a % ell != 0) continue;  // induced character vanishes off the abelian part
    const RootOfUnity varpi_part = chi.varpi_value().pow(a / ell);
    for (std::int64_t u = 0; u < nu; ++u) {
      RootSum v;
      std::int64_t w = u;
      for (std::int64_t i = 0; i < ell; ++i) {
        v.add(varpi_part * chi.eval_index(w));
        w = group->units()->xi(w);
      }
      row.values[a * nu + u] = std::move(v);
    }
  }
  return row;
}

std::int64_t oracle_inner_product(const OracleRow& a, const OracleRow& b) {
  if (a.group->order() != b.group->order())
    throw std::invalid_argument("oracle_inner_product: mismatched groups");
  RootSum total;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i].empty() || b.values[i].empty()) continue;
    total += a.values[i] * b.values[i].conj();
  }
  const auto n = total.as_integer();
  if (!n || *n % a.group->order() != 0)
    throw CrossCheckFailure("oracle_inner_product: Hermitian sum is not an integer multiple of |G|");
  return *n / a.group->order();
}

}  // namespace langlands
