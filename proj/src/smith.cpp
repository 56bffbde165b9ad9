#include "absarith/smith.hpp"

#include <algorithm>
#include <utility>

namespace absarith {

namespace {

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

// Elementary divisor reduction on m[t.., t..]; returns false when the block is zero.
bool reduce_block(IntMatrix& m, std::size_t t) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (;;) {
    // Smallest nonzero entry becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == rows || abs_int(m[i][j]) < abs_int(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) return false;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      const Integer q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      const Integer q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Pivot must divide the rest of the block; otherwise fold the offending row in.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          divides = false;
          break;
        }
      }
    }
    if (divides) return true;
  }
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) throw DomainError("smith_diagonal: ragged matrix");
  }
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> out(diag, 0);
  for (std::size_t t = 0; t < diag; ++t) {
    if (!reduce_block(m, t)) break;
    out[t] = abs_int(m[t][t]);
  }
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& relations, std::size_t cols) {
  IntMatrix m = relations;
  for (auto& row : m) {
    if (row.size() != cols) throw DomainError("invariant_factors: relation of wrong length");
  }
  const auto diag = smith_diagonal(std::move(m));
  if (diag.size() < cols) throw DomainError("invariant_factors: quotient is infinite");
  std::vector<Integer> out;
  for (const auto& d : diag) {
    if (d == 0) throw DomainError("invariant_factors: quotient is infinite");
    if (d > 1) out.push_back(d);
  }
  return out;
}

}  // namespace absarith
