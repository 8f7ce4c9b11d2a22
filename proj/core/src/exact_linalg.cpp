#include "bicanon/exact_linalg.hpp"

#include <utility>

#include "bicanon/errors.hpp"

namespace bicanon::exact {

namespace {

std::size_t column_count(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw InvalidInput("ragged matrix");
  }
  return cols;
}

// Floor division for signed big integers.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Matrix from_int64(const std::vector<std::vector<std::int64_t>>& m) {
  Matrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Row r;
    r.reserve(row.size());
    for (auto v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = column_count(m);
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

BigInt determinant(Matrix m) {
  const std::size_t n = m.size();
  if (column_count(m) != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<BigInt> leading_principal_minors(const Matrix& m) {
  const std::size_t n = m.size();
  if (column_count(m) != n) throw InvalidInput("minors of a non-square matrix");
  std::vector<BigInt> minors;
  minors.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix block(k, Row(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block[i][j] = m[i][j];
    }
    minors.push_back(determinant(std::move(block)));
  }
  return minors;
}

Matrix hermite_rows(Matrix rows) {
  const std::size_t cols = column_count(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const BigInt q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& v : rows[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt q = floor_div(rows[i][c], rows[r][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool lattice_contains(const Matrix& generators, const Row& target) {
  if (generators.empty()) {
    for (const auto& v : target) {
      if (v != 0) return false;
    }
    return true;
  }
  if (column_count(generators) != target.size()) {
    throw InvalidInput("lattice membership: dimension mismatch");
  }
  const Matrix h = hermite_rows(generators);
  Row t = target;
  std::size_t next = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    const bool is_pivot = next < h.size() && h[next][c] != 0;
    if (!is_pivot) {
      if (t[c] != 0) return false;
      continue;
    }
    if (t[c] % h[next][c] != 0) return false;
    const BigInt q = t[c] / h[next][c];
    for (std::size_t j = c; j < t.size(); ++j) t[j] -= q * h[next][j];
    ++next;
  }
  return true;
}

}  // namespace bicanon::exact
