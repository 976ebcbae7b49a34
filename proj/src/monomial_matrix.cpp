#include "langlands/monomial_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace langlands {

MonomialMatrix::MonomialMatrix(std::vector<int> perm, std::vector<RootOfUnity> scalars)
    : perm_(std::move(perm)), scal_(std::move(scalars)) {
  if (perm_.size() != scal_.size()) throw std::invalid_argument("MonomialMatrix: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int r : perm_) {
    if (r < 0 || r >= static_cast<int>(perm_.size()) || seen[r])
      throw std::invalid_argument("MonomialMatrix: perm is not a permutation");
    seen[r] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return MonomialMatrix(std::move(p), std::vector<RootOfUnity>(n));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<RootOfUnity> entries) {
  std::vector<int> p(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) p[i] = static_cast<int>(i);
  return MonomialMatrix(std::move(p), std::move(entries));
}

MonomialMatrix MonomialMatrix::cycle(int n, std::vector<RootOfUnity> scalars) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return MonomialMatrix(std::move(p), std::move(scalars));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (size() != o.size()) throw std::invalid_argument("MonomialMatrix: size mismatch in product");
  const int n = size();
  std::vector<int> p(n);
  std::vector<RootOfUnity> s(n);
  for (int j = 0; j < n; ++j) {
    p[j] = perm_[o.perm_[j]];
    s[j] = scal_[o.perm_[j]] * o.scal_[j];
  }
  return MonomialMatrix(std::move(p), std::move(s));
}

MonomialMatrix MonomialMatrix::inverse() const {
  const int n = size();
  std::vector<int> p(n);
  std::vector<RootOfUnity> s(n);
  for (int j = 0; j < n; ++j) {
    p[perm_[j]] = j;
    s[perm_[j]] = scal_[j].inverse();
  }
  return MonomialMatrix(std::move(p), std::move(s));
}

MonomialMatrix MonomialMatrix::pow(std::int64_t k) const {
  MonomialMatrix base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  MonomialMatrix acc = identity(size());
  while (e != 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool MonomialMatrix::is_identity() const {
  for (int j = 0; j < size(); ++j)
    if (perm_[j] != j || !scal_[j].is_one()) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (int j = 0; j < size(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

RootSum MonomialMatrix::trace() const {
  RootSum t;
  for (int j = 0; j < size(); ++j)
    if (perm_[j] == j) t.add(scal_[j]);
  return t;
}

RootOfUnity MonomialMatrix::scalar_product() const {
  RootOfUnity p;
  for (const auto& s : scal_) p = p * s;
  return p;
}

RootOfUnity MonomialMatrix::det() const {
  // sign of the permutation: parity from cycle structure
  const int n = size();
  std::vector<bool> seen(n, false);
  int transpositions = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int c = j; !seen[c]; c = perm_[c]) {
      seen[c] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  RootOfUnity sign = (transpositions % 2 == 0) ? RootOfUnity::one() : RootOfUnity::minus_one();
  return sign * scalar_product();
}

std::vector<std::pair<int, RootOfUnity>> MonomialMatrix::cycle_invariants() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, RootOfUnity>> inv;
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    int len = 0;
    RootOfUnity prod;
    for (int c = j; !seen[c]; c = perm_[c]) {
      seen[c] = true;
      prod = prod * scal_[c];
      ++len;
    }
    inv.emplace_back(len, prod);
  }
  std::sort(inv.begin(), inv.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return inv;
}

bool monomially_conjugate(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) return false;
  return a.cycle_invariants() == b.cycle_invariants();
}

}  // namespace langlands
