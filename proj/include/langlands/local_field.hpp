#pragma once

// Truncated exact arithmetic in the unramified degree-ell extension E of F
// at precision p^k.  The residue field of F is required to be prime (q = p)
// and the uniformizer is fixed as the rational prime itself, so o_F mod p^k
// is Z/p^k and o_E mod p^k is a free module of rank ell over it.
//
// Two presentations of E are supported:
//   Kummer      E = F(delta), delta^ell = Delta for a unit Delta that is not
//               an ell-th power; needs ell | q - 1.  This is the presentation
//               the rational conjugation layer requires.
//   Polynomial  E = F[X]/(h) for the monic lift h of the residue modulus;
//               works for every q and carries the character-level pipeline
//               when the Kummer model does not exist.
//
// The Galois generator xi of Gal(E/F) is pinned by a convention parameter:
// by default xi induces x -> x^(q^(ell-1)) on the residue field (the inverse
// of the q-power map), the alternative makes it induce x -> x^q.  Either
// choice yields the same final agreement; tests exercise both.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "langlands/finite_field.hpp"

namespace langlands {

enum class Presentation { kKummer, kPolynomial };
enum class XiConvention { kInverseFrobenius, kFrobenius };

struct LocalConfig {
  std::int64_t p = 3;
  std::int64_t ell = 2;
  std::int64_t precision = 3;  // arithmetic is exact in o_E / p^precision
  Presentation presentation = Presentation::kKummer;
  XiConvention convention = XiConvention::kInverseFrobenius;
  std::optional<std::int64_t> delta;  // Kummer unit; defaults to the least usable one
};

class LocalElem;

class LocalParams : public std::enable_shared_from_this<LocalParams> {
 public:
  static std::shared_ptr<const LocalParams> make(LocalConfig cfg,
                                                 std::int64_t budget = FieldTower::kDefaultBudget);

  std::int64_t p() const { return p_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t precision() const { return k_; }
  std::int64_t modulus() const { return pk_; }  // p^k
  Presentation presentation() const { return pres_; }
  XiConvention convention() const { return conv_; }
  // s with residue(xi(t)) = frobenius^s(residue(t))
  std::int64_t xi_residue_power() const { return xi_power_; }
  const std::shared_ptr<const FieldTower>& residue_field() const { return residue_; }

  // Kummer data; throws UnsupportedPresentation on the polynomial model
  std::int64_t delta() const;
  std::int64_t upsilon() const;  // Teichmueller scalar with xi(delta) = upsilon * delta

  LocalElem zero() const;
  LocalElem one() const;
  LocalElem from_int(std::int64_t c) const;              // element of o_F
  LocalElem from_coeffs(std::vector<std::int64_t> c) const;
  LocalElem uniformizer() const;                          // varpi = p
  LocalElem basis_elem(int i) const;                      // delta^i resp. X^i
  LocalElem teichmueller(const TowerElem& x) const;       // the root-of-unity lift

  // coordinate action of xi^i (resp. the lift of x -> x^q) on coefficient
  // vectors mod the given modulus (any divisor p^m of p^k)
  std::vector<std::int64_t> apply_xi(const std::vector<std::int64_t>& c, std::int64_t mod,
                                     std::int64_t power = 1) const;
  std::vector<std::int64_t> apply_frob_lift(const std::vector<std::int64_t>& c, std::int64_t mod,
                                            std::int64_t power = 1) const;

  // residue-field image of a coefficient vector
  TowerElem residue_of(const std::vector<std::int64_t>& c) const;
  // coefficients (mod p) of a residue element in the presentation basis
  std::vector<std::int64_t> residue_coords(const TowerElem& x) const;

  // ring multiplication on raw coefficient vectors mod any divisor p^m of p^k
  std::vector<std::int64_t> mul_coeffs(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b, std::int64_t mod) const;

 private:
  LocalParams() = default;
  friend class LocalElem;

  std::int64_t p_ = 0, ell_ = 0, k_ = 0, pk_ = 0;
  Presentation pres_ = Presentation::kKummer;
  XiConvention conv_ = XiConvention::kInverseFrobenius;
  std::int64_t xi_power_ = 1;
  std::shared_ptr<const FieldTower> residue_;

  // Kummer
  std::int64_t delta_ = 0;
  std::int64_t frob_scalar_ = 0;  // F(delta) = frob_scalar * delta
  std::int64_t upsilon_ = 0;      // xi(delta) = upsilon * delta
  TowerElem rho_;                 // residue of delta
  std::vector<TowerElem> rho_pows_;

  // Polynomial
  std::vector<std::int64_t> hmod_;                     // monic lift of the residue modulus
  std::vector<std::vector<std::int64_t>> frob_mat_;    // columns: coords of F(X^j)
  std::vector<std::vector<std::int64_t>> xi_mat_;

  // residue coords: matrix taking standard residue coords to presentation coords, mod p
  std::vector<std::vector<std::int64_t>> residue_coord_mat_;
};

class LocalElem {
 public:
  LocalElem() = default;

  const std::shared_ptr<const LocalParams>& params() const { return params_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return valuation() == 0; }
  bool in_base_ring() const;  // fixed by xi, i.e. in o_F

  LocalElem operator+(const LocalElem& o) const;
  LocalElem operator-(const LocalElem& o) const;
  LocalElem operator-() const;
  LocalElem operator*(const LocalElem& o) const;
  LocalElem pow(std::int64_t k) const;
  LocalElem inverse() const;  // PrecisionLoss unless a unit

  // min p-adic valuation of the coefficients, capped at the precision
  std::int64_t valuation() const;
  // t = p^n * u exactly mod p^k; u is canonical mod p^(k-n)
  std::pair<std::int64_t, LocalElem> unit_decompose() const;

  TowerElem residue() const;
  LocalElem xi(std::int64_t power = 1) const;
  LocalElem frob_lift(std::int64_t power = 1) const;

  bool operator==(const LocalElem& o) const { return c_ == o.c_; }

 private:
  friend class LocalParams;
  LocalElem(std::shared_ptr<const LocalParams> prm, std::vector<std::int64_t> c)
      : params_(std::move(prm)), c_(std::move(c)) {}

  std::shared_ptr<const LocalParams> params_;
  std::vector<std::int64_t> c_;
};

}  // namespace langlands
