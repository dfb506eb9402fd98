#include "nichols/linalg.hpp"

#include "nichols/errors.hpp"

namespace nichols {

CycloMatrix identity_matrix(std::size_t n) {
  CycloMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycloNumber(1);
  return m;
}

CycloMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return CycloMatrix(rows, std::vector<CycloNumber>(cols));
}

CycloMatrix multiply(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  CycloMatrix c = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InputError("matrix dimensions do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) c[i][j].add_mul(a[i][k], b[k][j]);
    }
  }
  return c;
}

std::vector<CycloNumber> multiply(const CycloMatrix& a, const std::vector<CycloNumber>& v) {
  std::vector<CycloNumber> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw InputError("matrix dimensions do not match");
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!a[i][k].is_zero() && !v[k].is_zero()) out[i].add_mul(a[i][k], v[k]);
  }
  return out;
}

std::size_t row_reduce(CycloMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const CycloNumber inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const CycloNumber f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j].sub_mul(f, m[r][j]);
    }
    ++r;
  }
  return r;
}

std::size_t matrix_rank(CycloMatrix m) { return row_reduce(m); }

CycloNumber determinant(CycloMatrix m) {
  const std::size_t n = m.size();
  CycloNumber det(1);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw InputError("determinant of a non-square matrix");
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return CycloNumber();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const CycloNumber inv = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const CycloNumber f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m[c][j].is_zero()) m[i][j].sub_mul(f, m[c][j]);
    }
  }
  return det;
}

CycloMatrix inverse(CycloMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("inverse of a non-square matrix");
    m[i].resize(2 * n);
    m[i][n + i] = CycloNumber(1);
  }
  if (row_reduce(m) < n) throw DivisionByZero();
  for (std::size_t i = 0; i < n; ++i)
    if (!m[i][i].is_one()) throw DivisionByZero();
  CycloMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + static_cast<long>(n), m[i].end());
  return out;
}

std::vector<std::vector<CycloNumber>> kernel_basis(CycloMatrix m, std::size_t cols) {
  row_reduce(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : m) {
    std::size_t c = 0;
    while (c < cols && row[c].is_zero()) ++c;
    if (c == cols) break;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<CycloNumber>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycloNumber> v(cols);
    v[f] = CycloNumber(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nichols
