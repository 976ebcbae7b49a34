#pragma once

// Dense ell x ell matrices over o_E mod p^k.  Everything is exact quotient
// ring arithmetic; inversion pivots only on units, which is all the
// conjugation layer ever needs (its matrices have unit determinant by
// construction).

#include <vector>

#include "langlands/local_field.hpp"

namespace langlands {

class LocalMatrix {
 public:
  LocalMatrix() = default;
  LocalMatrix(std::shared_ptr<const LocalParams> prm, int n);  // zero matrix

  static LocalMatrix identity(std::shared_ptr<const LocalParams> prm, int n);
  static LocalMatrix diagonal(std::vector<LocalElem> d);
  // standard n-cycle permutation matrix e_i -> e_{i+1}
  static LocalMatrix cycle(std::shared_ptr<const LocalParams> prm, int n);

  int size() const { return n_; }
  const LocalElem& at(int i, int j) const { return m_[i * n_ + j]; }
  LocalElem& at(int i, int j) { return m_[i * n_ + j]; }

  LocalMatrix operator*(const LocalMatrix& o) const;
  LocalMatrix operator-(const LocalMatrix& o) const;
  LocalMatrix inverse() const;  // PrecisionLoss when no unit pivot exists
  LocalMatrix galois_xi(std::int64_t power = 1) const;
  LocalMatrix galois_frob(std::int64_t power = 1) const;

  LocalElem det() const;  // Laplace expansion, exact
  bool is_diagonal() const;
  bool is_zero() const;
  bool operator==(const LocalMatrix& o) const { return m_ == o.m_; }

 private:
  std::shared_ptr<const LocalParams> params_;
  int n_ = 0;
  std::vector<LocalElem> m_;
};

}  // namespace langlands
