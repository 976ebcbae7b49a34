#pragma once

// Characters of E^* / (1 + p_E^(r+1)) = <varpi> x (o_E/p^(r+1))^*, Galois
// twisting, admissibility, the rectifier Delta_chi, and exhaustive
// enumeration of admissible pairs at a given exact level.

#include <cstdint>
#include <memory>
#include <vector>

#include "langlands/root_of_unity.hpp"
#include "langlands/unit_group.hpp"

namespace langlands {

class LevelChar {
 public:
  LevelChar(std::shared_ptr<const UnitGroupModel> units, std::vector<RootOfUnity> gen_values,
            RootOfUnity varpi_value);

  static LevelChar trivial(std::shared_ptr<const UnitGroupModel> units);

  const std::shared_ptr<const UnitGroupModel>& unit_group() const { return units_; }
  std::int64_t level() const { return units_->level(); }
  const std::vector<RootOfUnity>& gen_values() const { return gen_values_; }
  RootOfUnity varpi_value() const { return varpi_value_; }
  LevelChar with_varpi(RootOfUnity v) const { return LevelChar(units_, gen_values_, v); }

  // the character really has level r: nontrivial on the 1 + p^r layer (r >= 1)
  bool has_exact_level() const;
  bool trivial_on_units() const;

  RootOfUnity eval_index(std::int64_t unit_index) const;
  RootOfUnity eval_unit(const LocalElem& u) const;
  // full evaluation via t = varpi^n u
  RootOfUnity eval(const LocalElem& t) const;
  // the residue-field character chi_o (level 0 data): value on a residue unit
  RootOfUnity eval_residue(const TowerElem& x) const;

  LevelChar xi_twist(std::int64_t power = 1) const;     // chi^(xi^power)
  LevelChar frob_twist(std::int64_t power = 1) const;   // chi o (lift of x -> x^q)^power
  LevelChar operator*(const LevelChar& o) const;

  bool unit_part_equal(const LevelChar& o) const { return gen_values_ == o.gen_values_; }
  bool operator==(const LevelChar& o) const;

  // integer exponents against the generator orders, plus the varpi value;
  // the deterministic sort/orbit key
  std::vector<std::int64_t> exponent_key() const;

 private:
  std::shared_ptr<const UnitGroupModel> units_;
  std::vector<RootOfUnity> gen_values_;
  RootOfUnity varpi_value_;
};

struct AdmissiblePair {
  std::shared_ptr<const LocalParams> field;
  LevelChar chi;
};

// chi does not factor through the norm; for prime-degree unramified E/F this
// is Galois regularity of the unit part
bool is_admissible(const LevelChar& chi);

// the rectifier: unramified quadratic for ell = 2, trivial for odd prime ell
LevelChar delta_twist(const AdmissiblePair& pair);
RootOfUnity delta_varpi_value(std::int64_t ell);

// all admissible pairs of exact level r with chi(varpi)^N = 1
std::vector<AdmissiblePair> enumerate_admissible(std::shared_ptr<const LocalParams> params,
                                                 std::int64_t level, std::int64_t varpi_order_bound,
                                                 std::int64_t budget = FieldTower::kDefaultBudget);
// collapse to F-isomorphism classes; representative = least exponent key
std::vector<AdmissiblePair> orbit_representatives(const std::vector<AdmissiblePair>& pairs);

}  // namespace langlands
