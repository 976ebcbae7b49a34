#include "langlands/local_matrix.hpp"

#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

LocalMatrix::LocalMatrix(std::shared_ptr<const LocalParams> prm, int n)
    : params_(std::move(prm)), n_(n), m_(static_cast<std::size_t>(n) * n, params_->zero()) {}

LocalMatrix LocalMatrix::identity(std::shared_ptr<const LocalParams> prm, int n) {
  LocalMatrix id(prm, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = prm->one();
  return id;
}

LocalMatrix LocalMatrix::diagonal(std::vector<LocalElem> d) {
  if (d.empty()) throw std::invalid_argument("LocalMatrix: empty diagonal");
  LocalMatrix m(d[0].params(), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

LocalMatrix LocalMatrix::cycle(std::shared_ptr<const LocalParams> prm, int n) {
  LocalMatrix w(prm, n);
  for (int j = 0; j < n; ++j) w.at((j + 1) % n, j) = prm->one();
  return w;
}

LocalMatrix LocalMatrix::operator*(const LocalMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("LocalMatrix: size mismatch");
  LocalMatrix c(params_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const LocalElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) c.at(i, j) = c.at(i, j) + a * o.at(k, j);
    }
  return c;
}

LocalMatrix LocalMatrix::operator-(const LocalMatrix& o) const {
  LocalMatrix c(params_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c.at(i, j) = at(i, j) - o.at(i, j);
  return c;
}

LocalMatrix LocalMatrix::inverse() const {
  LocalMatrix a = *this;
  LocalMatrix inv = identity(params_, n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int i = col; i < n_; ++i)
      if (a.at(i, col).is_unit()) {
        piv = i;
        break;
      }
    if (piv < 0) throw PrecisionLoss("LocalMatrix: no unit pivot, matrix not invertible over o_E");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const LocalElem scale = a.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) = a.at(col, j) * scale;
      inv.at(col, j) = inv.at(col, j) * scale;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const LocalElem f = a.at(i, col);
      for (int j = 0; j < n_; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

LocalMatrix LocalMatrix::galois_xi(std::int64_t power) const {
  LocalMatrix c(params_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c.at(i, j) = at(i, j).xi(power);
  return c;
}

LocalMatrix LocalMatrix::galois_frob(std::int64_t power) const {
  LocalMatrix c(params_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c.at(i, j) = at(i, j).frob_lift(power);
  return c;
}

namespace {

LocalElem det_rec(const LocalMatrix& m, std::vector<int>& cols, int row) {
  const auto& prm = m.at(0, 0).params();
  if (cols.size() == 1) return m.at(row, cols[0]);
  LocalElem acc = prm->zero();
  for (std::size_t t = 0; t < cols.size(); ++t) {
    const int c = cols[t];
    if (m.at(row, c).is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t s = 0; s < cols.size(); ++s)
      if (s != t) rest.push_back(cols[s]);
    LocalElem term = m.at(row, c) * det_rec(m, rest, row + 1);
    acc = (t % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

LocalElem LocalMatrix::det() const {
  std::vector<int> cols(n_);
  for (int i = 0; i < n_; ++i) cols[i] = i;
  return det_rec(*this, cols, 0);
}

bool LocalMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

bool LocalMatrix::is_zero() const {
  for (const auto& e : m_)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace langlands
