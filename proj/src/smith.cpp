#include "langlands/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace langlands {

namespace {

bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  std::int64_t best = 0;
  for (std::size_t i = t; i < m.size(); ++i)
    for (std::size_t j = t; j < m[i].size(); ++j)
      if (m[i][j] != 0 && (!found || std::llabs(m[i][j]) < best)) {
        found = true;
        best = std::llabs(m[i][j]);
        pr = i;
        pc = j;
      }
  return found;
}

// clear row and column t by Euclidean steps, pivot at (t,t)
void clear_cross(IntMatrix& m, std::size_t t) {
  const std::size_t rows = m.size(), cols = m[0].size();
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      const std::int64_t q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) {
        std::swap(m[t], m[i]);
        dirty = true;
      }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      const std::int64_t q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) {
        for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
        dirty = true;
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> smith_invariant_factors(IntMatrix m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::size_t rank_bound = std::min(rows, cols);
  std::vector<std::int64_t> factors;

  for (std::size_t t = 0; t < rank_bound; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(m, t, pr, pc)) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    clear_cross(m, t);

    // enforce d_t | everything in the remaining block
    bool divisible = false;
    while (!divisible) {
      divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clear_cross(m, t);
            divisible = false;
          }
    }

    if (m[t][t] < 0)
      for (std::size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
    factors.push_back(m[t][t]);
  }

  while (factors.size() < rank_bound) factors.push_back(0);
  return factors;
}

bool cokernel_torsion_free(const IntMatrix& m) {
  for (std::int64_t d : smith_invariant_factors(m))
    if (d != 0 && d != 1) return false;
  return true;
}

IntMatrix one_minus_cycle(int n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    m[j][j] += 1;
    m[(j + 1) % n][j] -= 1;
  }
  return m;
}

int packet_size(int ell) {
  if (!cokernel_torsion_free(one_minus_cycle(ell)))
    throw std::logic_error("packet_size: [X/(1-w)X]_tor is nonzero");
  return 1;
}

}  // namespace langlands
