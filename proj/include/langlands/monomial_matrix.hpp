#pragma once

// Monomial matrices with root-of-unity entries: the shape of every parameter
// value on the dual side.  Column j carries its single nonzero entry
// scalar(j) in row perm(j).  The trace is kept as a formal sum, never a
// float.

#include <cstdint>
#include <vector>

#include "langlands/root_of_unity.hpp"
#include "langlands/root_sum.hpp"

namespace langlands {

class MonomialMatrix {
 public:
  // perm is 0-indexed: column j is nonzero in row perm[j]
  MonomialMatrix(std::vector<int> perm, std::vector<RootOfUnity> scalars);

  static MonomialMatrix identity(int n);
  static MonomialMatrix diagonal(std::vector<RootOfUnity> entries);
  // the standard n-cycle i -> i+1 with given per-column scalars
  static MonomialMatrix cycle(int n, std::vector<RootOfUnity> scalars);

  int size() const { return static_cast<int>(perm_.size()); }
  int perm(int col) const { return perm_[col]; }
  const RootOfUnity& scalar(int col) const { return scal_[col]; }
  // entry (row, col); RootOfUnity cannot express 0, so callers query shape first
  bool nonzero_at(int row, int col) const { return perm_[col] == row; }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  MonomialMatrix pow(std::int64_t k) const;

  bool operator==(const MonomialMatrix& o) const = default;
  bool is_identity() const;
  bool is_diagonal() const;

  RootSum trace() const;
  RootOfUnity det() const;  // sign of perm folded into the scalar product
  RootOfUnity scalar_product() const;

  // complete invariant for conjugacy by monomial matrices: the multiset of
  // (cycle length, product of scalars along the cycle)
  std::vector<std::pair<int, RootOfUnity>> cycle_invariants() const;

 private:
  std::vector<int> perm_;
  std::vector<RootOfUnity> scal_;
};

// true iff a = M b M^{-1} for some monomial M
bool monomially_conjugate(const MonomialMatrix& a, const MonomialMatrix& b);

}  // namespace langlands
