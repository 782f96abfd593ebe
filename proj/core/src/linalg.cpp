#include "ntlc/linalg.hpp"

#include "ntlc/diagram.hpp"

#include <algorithm>

namespace ntlc {

QMatrix QMatrix::zero(std::size_t r, std::size_t c) {
  QMatrix m;
  m.rows = r;
  m.cols = c;
  m.a.assign(r * c, Rational(0));
  return m;
}

QMatrix QMatrix::identity(std::size_t d) {
  QMatrix m = zero(d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

QMatrix qm_add(const QMatrix& x, const QMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw domain_error("matrix shape mismatch in addition");
  QMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

QMatrix qm_sub(const QMatrix& x, const QMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw domain_error("matrix shape mismatch in subtraction");
  QMatrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

QMatrix qm_mul(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw domain_error("matrix shape mismatch in product");
  QMatrix out = QMatrix::zero(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

QMatrix qm_scale(const QMatrix& x, const Rational& c) {
  QMatrix out = x;
  for (Rational& v : out.a) v *= c;
  return out;
}

std::size_t qm_rref(QMatrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j)
      std::swap(m.at(rank, j), m.at(pivot, j));
    Rational inv = Rational(1) / m.at(rank, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t qm_rank(QMatrix m) { return qm_rref(m); }

std::vector<Rational> qm_charpoly(const QMatrix& m) {
  if (m.rows != m.cols)
    throw domain_error("characteristic polynomial needs a square matrix");
  const std::size_t d = m.rows;
  // Faddeev-LeVerrier: B_1 = M, a_k = -tr(M B_{k-1} + a_{k-1} ...)/k.
  std::vector<Rational> coeff(d + 1, Rational(0));
  coeff[0] = 1;
  QMatrix b = QMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    b = qm_mul(m, b);
    Rational tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr += b.at(i, i);
    Rational ak = -tr / Rational(static_cast<long long>(k));
    coeff[k] = ak;
    for (std::size_t i = 0; i < d; ++i) b.at(i, i) += ak;
  }
  return coeff;
}

bool RowSpace::insert(std::vector<Rational> v) {
  if (v.size() != cols_) throw domain_error("row length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& lead = v[pivots_[r]];
    if (lead == 0) continue;
    Rational f = lead;
    for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Rational inv = Rational(1) / v[p];
  for (std::size_t j = 0; j < cols_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

} // namespace ntlc
