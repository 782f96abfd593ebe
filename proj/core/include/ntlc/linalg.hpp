// Small dense matrices over exact rationals: products, reduced echelon form,
// rank and null space dimension, and the characteristic polynomial.
#pragma once

#include "ntlc/rational.hpp"

#include <vector>

namespace ntlc {

struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a; // row major

  static QMatrix zero(std::size_t r, std::size_t c);
  static QMatrix identity(std::size_t d);

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  bool is_zero() const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QMatrix qm_add(const QMatrix& x, const QMatrix& y);
QMatrix qm_sub(const QMatrix& x, const QMatrix& y);
QMatrix qm_mul(const QMatrix& x, const QMatrix& y);
QMatrix qm_scale(const QMatrix& x, const Rational& c);

// In-place reduced row echelon form; returns the rank.
std::size_t qm_rref(QMatrix& m);
std::size_t qm_rank(QMatrix m);

// Coefficients of det(xI - M), highest power first (monic, length d+1).
std::vector<Rational> qm_charpoly(const QMatrix& m);

// Incremental row space in echelon form; used for span closures.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}
  // Reduces v against the space; inserts the remainder if nonzero.
  // Returns true when the dimension grew.
  bool insert(std::vector<Rational> v);
  std::size_t dim() const { return rows_.size(); }

private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_; // each begins with a 1 pivot
  std::vector<std::size_t> pivots_;
};

} // namespace ntlc
