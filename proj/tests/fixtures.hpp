#pragma once

// The five reference pairs used across the test suites, with the subalgebra
// given in exact coordinates of the family basis.

#include "sphex/families.hpp"

namespace sphex::testing {

struct Pair {
  RealizedAlgebra alg;
  Subspace h;
  const char* name;
};

inline QVec fx_qv(std::vector<long> v) {
  QVec r;
  for (long x : v) r.push_back(Rat(x));
  return r;
}

// sl(2,R)/SO(1,1): h = span{E + F}.
inline Pair pair_sl2_so11() {
  auto alg = sl_algebra(2);
  return {alg, Subspace::span(3, {fx_qv({0, 1, 1})}), "sl2_so11"};
}

// sl(2,R)/SO(2): h = span{E - F}.
inline Pair pair_sl2_so2() {
  auto alg = sl_algebra(2);
  return {alg, Subspace::span(3, {fx_qv({0, 1, -1})}), "sl2_so2"};
}

// sl(2,R)/N: h = span{E}, horospherical.
inline Pair pair_sl2_n() {
  auto alg = sl_algebra(2);
  return {alg, Subspace::span(3, {fx_qv({0, 1, 0})}), "sl2_n"};
}

// (sl(2,R) x sl(2,R))/diagonal.
inline Pair pair_sl2xsl2_diag() {
  auto alg = product_algebra({sl_algebra(2), sl_algebra(2)});
  Subspace h = Subspace::span(6, {fx_qv({1, 0, 0, 1, 0, 0}), fx_qv({0, 1, 0, 0, 1, 0}),
                                  fx_qv({0, 0, 1, 0, 0, 1})});
  return {alg, h, "sl2xsl2_diag"};
}

// sl(3,R)/SO(2,1): h = fixed points of X -> -J X^T J with J = diag(1,1,-1).
inline Pair pair_sl3_so21() {
  auto alg = sl_algebra(3);
  Subspace h = Subspace::span(8, {fx_qv({0, 0, 1, 0, 0, -1, 0, 0}),
                                  fx_qv({0, 0, 0, 1, 0, 0, 1, 0}),
                                  fx_qv({0, 0, 0, 0, 1, 0, 0, 1})});
  return {alg, h, "sl3_so21"};
}

inline std::vector<Pair> all_pairs() {
  return {pair_sl2_so11(), pair_sl2_so2(), pair_sl2_n(), pair_sl2xsl2_diag(),
          pair_sl3_so21()};
}

}  // namespace sphex::testing
