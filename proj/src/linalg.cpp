#include "mvt/linalg.hpp"

#include <stdexcept>

namespace mvt {

namespace {

// Multiplies a row by the lcm of its denominators.
std::vector<Z> integer_row(const std::vector<Q>& row) {
  Z l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Z> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

}  // namespace

int matrix_rank(const QMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::vector<std::vector<Z>> m;
  m.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    m.push_back(integer_row(row));
  }
  const std::size_t rows = m.size();
  Z prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Z v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<std::vector<Q>> kernel_basis(const QMatrix& a, int cols) {
  QMatrix m = a;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("matrix width mismatch");
  std::vector<int> pivot_cols;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Q inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Q>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(cols, Q(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int kernel_dim(const QMatrix& a, int cols) {
  if (a.empty()) return cols;
  if (static_cast<int>(a[0].size()) != cols) throw std::invalid_argument("matrix width mismatch");
  return cols - matrix_rank(a);
}

std::vector<Q> mat_vec(const QMatrix& a, const std::vector<Q>& x) {
  std::vector<Q> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != x.size()) throw std::invalid_argument("dimension mismatch");
    Q s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

QMatrix columns_matrix(const std::vector<Vec3>& cols) {
  QMatrix m(3, std::vector<Q>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < 3; ++i) m[i][j] = cols[j][i];
  return m;
}

}  // namespace mvt
