#pragma once

#include <optional>

#include "sphex/rational.hpp"

namespace sphex {

/// Dense rational matrix, row major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  QVec row(int i) const;
  QVec col(int j) const;
  void set_row(int i, const QVec& v);

  QMatrix transpose() const;
  Rat trace() const;
  bool is_zero() const;

  bool operator==(const QMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rat& c, const QMatrix& a);
QVec mul(const QMatrix& a, const QVec& x);

/// Reduced row echelon form (Gauss-Jordan with exact pivots).
QMatrix rref(const QMatrix& m);

/// Solves a x = b. Inconsistent systems yield nullopt; underdetermined
/// systems get the canonical solution with every free variable set to zero.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

/// Canonical basis of {x : a x = 0} read off the RREF free-variable
/// parametrization, one vector per free column.
std::vector<QVec> kernel_basis(const QMatrix& a);

int rank(const QMatrix& m);
Rat det(QMatrix m);

}  // namespace sphex
