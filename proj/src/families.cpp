#include "sphex/families.hpp"

#include <algorithm>

namespace sphex {

namespace {

QMatrix unit(int n, int i, int j) {
  QMatrix m(n, n);
  m.at(i, j) = rat(1);
  return m;
}

QVec must_coords(const LieAlgebra& g, const QMatrix& m, const char* what) {
  auto c = g.coords_of(m);
  if (!c) throw error(std::string(what) + ": Cartan element outside the algebra");
  return *c;
}

}  // namespace

RealizedAlgebra sl_algebra(int n) {
  if (n < 2) throw error("sl: size must be at least 2");
  std::vector<QMatrix> basis;
  for (int i = 0; i + 1 < n; ++i) basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(unit(n, i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) basis.push_back(unit(n, i, j));

  RealizedAlgebra out;
  out.g = LieAlgebra::build(basis);
  std::vector<QVec> cart;
  for (int i = 0; i + 1 < n; ++i)
    cart.push_back(must_coords(out.g, unit(n, i, i) - unit(n, i + 1, i + 1), "sl"));
  out.cartan = Subspace::span(out.g.dim(), cart);
  out.name = "sl(" + std::to_string(n) + ",R)";
  return out;
}

RealizedAlgebra so_algebra(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw error("so: signature must have p + q >= 2");
  int n = p + q;
  std::vector<QMatrix> basis;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) basis.push_back(unit(n, i, j) - unit(n, j, i));
  for (int i = p; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(unit(n, i, j) - unit(n, j, i));
  for (int i = 0; i < p; ++i)
    for (int j = p; j < n; ++j) basis.push_back(unit(n, i, j) + unit(n, j, i));
  if (basis.empty()) throw error("so: algebra is zero for this signature");

  RealizedAlgebra out;
  out.g = LieAlgebra::build(basis);
  std::vector<QVec> cart;
  for (int i = 0; i < std::min(p, q); ++i)
    cart.push_back(must_coords(out.g, unit(n, i, p + i) + unit(n, p + i, i), "so"));
  out.cartan = Subspace::span(out.g.dim(), cart);
  out.name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return out;
}

RealizedAlgebra sp_algebra(int size) {
  if (size < 2 || size % 2 != 0) throw error("sp: size must be even and at least 2");
  int n = size / 2;
  std::vector<QMatrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      basis.push_back(unit(size, i, j) - unit(size, n + j, n + i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      QMatrix b = unit(size, i, n + j);
      if (i != j) b = b + unit(size, j, n + i);
      basis.push_back(b);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      QMatrix c = unit(size, n + i, j);
      if (i != j) c = c + unit(size, n + j, i);
      basis.push_back(c);
    }

  RealizedAlgebra out;
  out.g = LieAlgebra::build(basis);
  std::vector<QVec> cart;
  for (int i = 0; i < n; ++i)
    cart.push_back(must_coords(out.g, unit(size, i, i) - unit(size, n + i, n + i), "sp"));
  out.cartan = Subspace::span(out.g.dim(), cart);
  out.name = "sp(" + std::to_string(size) + ",R)";
  return out;
}

RealizedAlgebra product_algebra(const std::vector<RealizedAlgebra>& factors) {
  if (factors.empty()) throw error("product: needs at least one factor");
  if (factors.size() == 1) return factors[0];
  int n = 0;
  for (const auto& f : factors) n += f.g.matrix_size();

  std::vector<QMatrix> basis;
  std::vector<QVec> cart;
  int dim_total = 0;
  for (const auto& f : factors) dim_total += f.g.dim();

  int mat_off = 0, coord_off = 0;
  for (const auto& f : factors) {
    int m = f.g.matrix_size();
    for (const auto& b : f.g.basis()) {
      QMatrix big(n, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) big.at(mat_off + i, mat_off + j) = b.at(i, j);
      basis.push_back(big);
    }
    for (const auto& v : f.cartan.basis()) {
      QVec big(dim_total, rat(0));
      for (int k = 0; k < f.g.dim(); ++k) big[coord_off + k] = v[k];
      cart.push_back(big);
    }
    mat_off += m;
    coord_off += f.g.dim();
  }

  RealizedAlgebra out;
  out.g = LieAlgebra::build(basis);
  out.cartan = Subspace::span(dim_total, cart);
  out.name = factors[0].name;
  for (size_t i = 1; i < factors.size(); ++i) out.name += " x " + factors[i].name;
  return out;
}

}  // namespace sphex
