#pragma once

// The passage from a parameter to a character of the elliptic torus
// T^{Phi_sigma} = {}^0T^{Phi_sigma} x X^sigma: chi_s through the twisted
// norm chain, chi_tau through the GL/SL determinant coset, and the
// assembled chi_phi.  chi_s is always computed twice -- through an actual
// N_sigma preimage and by the closed form -- and the two routes must agree
// or the workbench aborts.
//
// The depth-zero chain runs over the residue torus (tuples over f_{q^ell}^*),
// the positive-depth chain over tuples of level-r units; both use the
// coordinatewise lift of x -> x^q composed with the cyclic shift.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "langlands/monomial_matrix.hpp"
#include "langlands/weil_parameter.hpp"

namespace langlands {

struct TorusChar {
  std::shared_ptr<const UnitGroupModel> units;
  std::vector<RootOfUnity> unit_gen_values;  // chi_s on the unit-group generators
  RootOfUnity cochar;                        // value on lambda_(1,...,1)

  RootOfUnity eval(const LocalElem& t) const;  // via t = varpi^n u
  bool operator==(const TorusChar& o) const {
    return unit_gen_values == o.unit_gen_values && cochar == o.cochar;
  }
};

// chi * Delta_chi as a torus character; the comparison target
TorusChar moy_target(const AdmissiblePair& pair);

// ---- twisted tori ----------------------------------------------------

// depth zero: tuples over f_{q^ell}^*
class ResidueTorus {
 public:
  using Tuple = std::vector<TowerElem>;

  explicit ResidueTorus(std::shared_ptr<const FieldTower> tower);

  std::int64_t ell() const { return tower_->ell(); }
  const std::shared_ptr<const FieldTower>& tower() const { return tower_; }

  Tuple phi_sigma(const Tuple& x) const;
  Tuple mul(const Tuple& x, const Tuple& y) const;
  bool is_fixed(const Tuple& x) const;
  // N_sigma, identified with its first coordinate; NormNotSurjective if the
  // result fails to be a fixed tuple
  TowerElem twisted_norm(const Tuple& x) const;
  Tuple section(const TowerElem& a) const;  // (a, 1, ..., 1)
  Tuple random_norm_one(std::mt19937_64& rng) const;

  // lambda attached to a residue character exponent: the unique
  // Phi_sigma-equivariant extension with exponent e in the first slot
  RootOfUnity lambda_eval(std::int64_t chi_exponent, const Tuple& x) const;

 private:
  std::shared_ptr<const FieldTower> tower_;
};

// level r: tuples of unit-group element indices
class UnitTorus {
 public:
  using Tuple = std::vector<std::int64_t>;

  explicit UnitTorus(std::shared_ptr<const UnitGroupModel> units);

  std::int64_t ell() const { return units_->params()->ell(); }
  const std::shared_ptr<const UnitGroupModel>& units() const { return units_; }

  Tuple phi_sigma(const Tuple& x) const;
  Tuple mul(const Tuple& x, const Tuple& y) const;
  bool is_fixed(const Tuple& x) const;
  std::int64_t twisted_norm(const Tuple& x) const;
  Tuple section(std::int64_t a) const;
  Tuple random_norm_one(std::mt19937_64& rng) const;

  RootOfUnity lambda_eval(const LevelChar& chi, const Tuple& x) const;

 private:
  std::shared_ptr<const UnitGroupModel> units_;
};

// ---- the construction -------------------------------------------------

// chi_s on the unit-group generators: computed through N_sigma preimages,
// verified choice-independent on sampled preimages, checked against the
// closed form.  preimage_samples counts extra preimages tested per value.
std::vector<RootOfUnity> chi_s_from_parameter(const Trselp& phi, int preimage_samples = 8);

// tau as a diagonal matching f's GL/SL coset, and chi_tau on lambda_(1,..,1)
std::pair<MonomialMatrix, RootOfUnity> tau_from_parameter(const Trselp& phi);

TorusChar chi_phi(const Trselp& phi);
// the positive-depth path; requires depth >= 1
TorusChar reeder_positive_depth_chi_phi(const Trselp& phi);

// ---- brute-force verifications (acceptance criterion 4) ---------------

// N_sigma surjective with all fibers of size (q^ell - 1)^(ell - 1), exhaustively
bool verify_norm_fibers_exhaustive(const ResidueTorus& torus);
// every Phi_sigma-equivariant Lambda agrees on all preimages: exhaustive pairs
bool verify_lambda_well_defined_exhaustive(const ResidueTorus& torus);
// sampled version for larger tori
bool verify_lambda_well_defined_sampled(const ResidueTorus& torus, std::int64_t samples,
                                        std::uint64_t seed = 12345);

}  // namespace langlands
