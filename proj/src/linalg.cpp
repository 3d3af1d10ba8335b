#include "sphex/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace sphex {

Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> error { return error("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [&](const std::string& t, bool sign_ok) {
    size_t i = 0;
    if (sign_ok && i < t.size() && (t[i] == '-' || t[i] == '+')) i++;
    if (i == t.size()) throw bad();
    for (; i < t.size(); i++)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
  };
  digits(num, true);
  digits(den, false);
  mpz_class n(num), d(den);
  if (d == 0) throw error("zero denominator in '" + s + "'");
  Rat q(n);
  q /= Rat(d);
  return q;
}

std::string rat_to_string(const Rat& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

QVec scale(const QVec& v, const Rat& c) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); i++) r[i] = c * v[i];
  return r;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
  return s;
}

QVec primitive(const QVec& v) {
  mpz_class den_lcm = 1;
  for (const Rat& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const Rat& x : v) {
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return QVec(v.size(), Rat(0));
  Rat c(den_lcm);
  c /= Rat(num_gcd);
  return scale(v, c);
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); i++) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); i++) {
    if (static_cast<int>(rows[i].size()) != cols) throw error("ragged rows in matrix literal");
    m.set_row(static_cast<int>(i), rows[i]);
  }
  return m;
}

QVec QMatrix::row(int i) const {
  return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

QVec QMatrix::col(int j) const {
  QVec v(rows_);
  for (int i = 0; i < rows_; i++) v[i] = at(i, j);
  return v;
}

void QMatrix::set_row(int i, const QVec& v) {
  std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
  return t;
}

Rat QMatrix::trace() const {
  Rat s = 0;
  for (int i = 0; i < std::min(rows_, cols_); i++) s += at(i, i);
  return s;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error("matrix size mismatch in +");
  QMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); i++)
    for (int j = 0; j < a.cols(); j++) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error("matrix size mismatch in -");
  QMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); i++)
    for (int j = 0; j < a.cols(); j++) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw error("matrix size mismatch in *");
  QMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); i++)
    for (int k = 0; k < a.cols(); k++) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); j++) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

QMatrix operator*(const Rat& c, const QMatrix& a) {
  QMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); i++)
    for (int j = 0; j < a.cols(); j++) r.at(i, j) = c * a.at(i, j);
  return r;
}

QVec mul(const QMatrix& a, const QVec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw error("matrix/vector size mismatch");
  QVec r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); i++)
    for (int j = 0; j < a.cols(); j++)
      if (a.at(i, j) != 0) r[i] += a.at(i, j) * x[j];
  return r;
}

QMatrix rref(const QMatrix& m) {
  QMatrix r = m;
  int lead = 0;
  for (int row = 0; row < r.rows() && lead < r.cols(); row++) {
    int pivot = -1;
    while (lead < r.cols()) {
      for (int i = row; i < r.rows(); i++)
        if (r.at(i, lead) != 0) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      lead++;
    }
    if (pivot < 0) break;
    if (pivot != row)
      for (int j = 0; j < r.cols(); j++) std::swap(r.at(pivot, j), r.at(row, j));
    Rat inv = 1 / r.at(row, lead);
    for (int j = lead; j < r.cols(); j++) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows(); i++) {
      if (i == row || r.at(i, lead) == 0) continue;
      Rat f = r.at(i, lead);
      for (int j = lead; j < r.cols(); j++) r.at(i, j) -= f * r.at(row, j);
    }
    lead++;
  }
  return r;
}

namespace {

std::vector<int> pivot_columns(const QMatrix& r) {
  std::vector<int> piv;
  for (int i = 0; i < r.rows(); i++) {
    int j = 0;
    while (j < r.cols() && r.at(i, j) == 0) j++;
    if (j == r.cols()) break;
    piv.push_back(j);
  }
  return piv;
}

}  // namespace

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  if (a.rows() != static_cast<int>(b.size())) throw error("solve: rhs size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); i++) {
    for (int j = 0; j < a.cols(); j++) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  QMatrix r = rref(aug);
  auto piv = pivot_columns(r);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  QVec x(a.cols(), Rat(0));
  for (size_t i = 0; i < piv.size(); i++) x[piv[i]] = r.at(static_cast<int>(i), a.cols());
  return x;
}

std::vector<QVec> kernel_basis(const QMatrix& a) {
  QMatrix r = rref(a);
  auto piv = pivot_columns(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int j : piv) is_pivot[j] = true;
  std::vector<QVec> basis;
  for (int j = 0; j < a.cols(); j++) {
    if (is_pivot[j]) continue;
    QVec v(a.cols(), Rat(0));
    v[j] = 1;
    for (size_t i = 0; i < piv.size(); i++) v[piv[i]] = -r.at(static_cast<int>(i), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const QMatrix& m) { return static_cast<int>(pivot_columns(rref(m)).size()); }

Rat det(QMatrix m) {
  if (m.rows() != m.cols()) throw error("det of non-square matrix");
  Rat d = 1;
  int n = m.rows();
  for (int col = 0; col < n; col++) {
    int pivot = -1;
    for (int i = col; i < n; i++)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < n; j++) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; i++) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; j++) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

}  // namespace sphex
