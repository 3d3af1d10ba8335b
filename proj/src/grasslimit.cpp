#include "sphex/grasslimit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace sphex {

namespace {

using DVec = std::vector<double>;

double ddot(const DVec& a, const DVec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dnorm(const DVec& a) { return std::sqrt(ddot(a, a)); }

/// Lower Cholesky factor of a symmetric positive definite matrix.
std::vector<DVec> cholesky(const QMatrix& g) {
  int n = g.rows();
  std::vector<DVec> l(n, DVec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g.at(i, j).get_d();
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0) throw error("degeneration: gram form is not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return l;
}

/// Maps an ambient coordinate vector into the frame where the gram form is
/// the standard inner product: v -> transpose(L) v.
DVec to_frame(const std::vector<DVec>& l, const QVec& v) {
  int n = int(v.size());
  DVec e(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int k = i; k < n; ++k) s += l[k][i] * v[k].get_d();
    e[i] = s;
  }
  return e;
}

/// Modified Gram-Schmidt, run twice for stability. Returns the worst
/// deviation of the resulting frame from orthonormality.
double orthonormalize(std::vector<DVec>& cols) {
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t j = 0; j < cols.size(); ++j) {
      for (size_t k = 0; k < j; ++k) {
        double r = ddot(cols[k], cols[j]);
        for (size_t i = 0; i < cols[j].size(); ++i) cols[j][i] -= r * cols[k][i];
      }
      double nrm = dnorm(cols[j]);
      if (nrm < 1e-200) throw error("degeneration: deformed frame collapsed");
      for (double& v : cols[j]) v /= nrm;
    }
  }
  double worst = 0;
  for (size_t a = 0; a < cols.size(); ++a)
    for (size_t b = 0; b <= a; ++b) {
      double want = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(ddot(cols[a], cols[b]) - want));
    }
  return worst;
}

/// Frobenius distance of the orthoprojectors onto the spans of two
/// orthonormal frames of equal size d: sqrt(2d - 2 |Q1^T Q2|_F^2).
double projector_distance(const std::vector<DVec>& q1, const std::vector<DVec>& q2) {
  double s = 0;
  for (const DVec& a : q1)
    for (const DVec& b : q2) {
      double r = ddot(a, b);
      s += r * r;
    }
  double d2 = double(q1.size()) + double(q2.size()) - 2 * s;
  return std::sqrt(std::max(0.0, d2));
}

long draw(std::mt19937_64& eng, long lo, long hi) {
  return lo + long(eng() % (unsigned long)(hi - lo + 1));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    default: return "inconclusive";
  }
}

Trajectory degenerate(const LocalStructure& ls, const Subspace& h, const QVec& x,
                      const DegenerationLimits& limits) {
  const RootDatum& rd = ls.q.rd;
  const LieAlgebra& g = *rd.g;
  int n = g.dim();
  if (int(x.size()) != n || is_zero(x)) throw error("degeneration: direction is zero");
  if (!ls.a_z.contains(x)) throw error("degeneration: direction lies outside a_z");
  if (limits.t_max < 0) throw error("degeneration: schedule is empty");

  // Exact eigenbasis of ad(x): the centralizer of a with eigenvalue zero,
  // then each restricted root space with eigenvalue alpha(x).
  std::vector<QVec> wcols;
  QVec lambda;
  for (const QVec& v : rd.zero_space.basis()) {
    wcols.push_back(v);
    lambda.push_back(Rat(0));
  }
  for (const WeightSpace& ws : rd.roots) {
    Rat val = rd.eval(ws.weight, x);
    for (const QVec& v : ws.space.basis()) {
      wcols.push_back(v);
      lambda.push_back(val);
    }
  }
  QMatrix w(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) w.at(i, j) = wcols[j][i];

  // Coordinates of h in the eigenbasis, with the columns sorted by
  // decreasing eigenvalue and the rows brought to echelon form. Each row
  // then has its own leading eigenvalue, and the leading coordinates sit in
  // distinct columns, so the renormalized rows keep a uniformly invertible
  // gram matrix along the whole flow.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambda[a] > lambda[b]; });

  int d = h.dim();
  QMatrix coords(d, n);
  for (int r = 0; r < d; ++r) {
    auto c = solve(w, h.basis()[r]);
    if (!c) throw error("degeneration: eigenbasis does not span");
    for (int j = 0; j < n; ++j) coords.at(r, j) = (*c)[order[j]];
  }
  QMatrix ech = rref(coords);
  for (int r = 0; r < d; ++r)
    if (is_zero(ech.row(r))) throw error("degeneration: subalgebra frame is singular");

  Subspace h_lim = limiting_subalgebra(ls, h);

  // Everything below is floating point in the frame where the gram form of
  // the algebra basis is the standard inner product.
  std::vector<DVec> l = cholesky(g.gram());
  std::vector<DVec> ecol(n);
  for (int j = 0; j < n; ++j) ecol[j] = to_frame(l, wcols[order[j]]);

  std::vector<DVec> q_lim;
  for (const QVec& v : h_lim.basis()) q_lim.push_back(to_frame(l, v));
  double lim_residual = orthonormalize(q_lim);

  double xnorm = std::sqrt(dot(x, mul(g.gram(), x)).get_d());
  DVec rate(n);
  for (int j = 0; j < n; ++j) rate[j] = lambda[order[j]].get_d() / xnorm;

  std::vector<int> lead(d);
  std::vector<std::vector<double>> coef(d, std::vector<double>(n));
  for (int r = 0; r < d; ++r) {
    lead[r] = -1;
    for (int j = 0; j < n; ++j) {
      coef[r][j] = ech.at(r, j).get_d();
      if (lead[r] < 0 && ech.at(r, j) != 0) lead[r] = j;
    }
  }

  Trajectory traj;
  traj.direction = x;
  traj.max_residual = lim_residual;
  for (long t = 0; t <= long(limits.t_max); ++t) traj.times.push_back(double(t));
  if (traj.times.empty() || traj.times.back() < limits.t_max)
    traj.times.push_back(limits.t_max);

  for (double t : traj.times) {
    std::vector<DVec> q(d, DVec(n, 0.0));
    for (int r = 0; r < d; ++r) {
      // Scale each eigencomponent relative to the row's own fastest one, so
      // the deformed vector stays bounded and tends to its leading part.
      for (int j = 0; j < n; ++j) {
        double c = coef[r][j];
        if (c == 0) continue;
        double s = c * std::exp(t * (rate[j] - rate[lead[r]]));
        for (int i = 0; i < n; ++i) q[r][i] += s * ecol[j][i];
      }
    }
    traj.max_residual = std::max(traj.max_residual, orthonormalize(q));
    traj.distances.push_back(projector_distance(q, q_lim));
  }

  size_t tail = 0;
  while (tail + 1 < traj.times.size() && traj.times[tail] < 0.75 * limits.t_max - 1e-9)
    ++tail;
  bool monotone = true, above = true;
  for (size_t i = tail; i < traj.distances.size(); ++i) {
    if (i > tail && traj.distances[i] > traj.distances[i - 1] + 1e-12) monotone = false;
    if (traj.distances[i] <= limits.diverge_tol) above = false;
  }
  if (traj.distances.back() < limits.converge_tol && monotone)
    traj.verdict = Verdict::converged;
  else if (above)
    traj.verdict = Verdict::diverged;
  return traj;
}

ConeCheck verify_cone(const LocalStructure& ls, const Subspace& h, const Cone& cone,
                      int samples, std::uint64_t seed,
                      const DegenerationLimits& limits) {
  if (cone.ambient() != ls.rank) throw error("cone check: cone lives in the wrong space");
  ConeCheck out;
  if (ls.rank == 0) {
    out.passed = true;
    return out;
  }
  if (!cone.span_normals().empty())
    throw error("cone check: the cone has empty interior in a_z");
  auto ip = cone.interior_point();
  if (!ip) throw error("cone check: the cone has empty interior in a_z");

  const std::vector<QVec>& facets = cone.facets();
  Rat slack(1);
  Rat width(1);
  for (const QVec& f : facets) {
    Rat s = -dot(f, ip->point);
    if (s <= 0) throw error("cone check: canonical point is not interior");
    if (f == facets.front() || s < slack) slack = s;
    Rat rowsum(0);
    for (const Rat& c : f) rowsum += abs(c);
    if (rowsum > width) width = rowsum;
  }
  // Any perturbation bounded by slack / (2 width) per coordinate keeps every
  // facet inequality strict; the exactness check below never fires but is
  // kept as the contract.
  Rat bound = facets.empty() ? Rat(1) : slack / (2 * width);

  std::mt19937_64 eng(seed);
  auto strictly_interior = [&](const QVec& p) {
    if (is_zero(p)) return false;
    for (const QVec& f : facets)
      if (dot(f, p) >= 0) return false;
    return true;
  };
  auto ambient_direction = [&](const QVec& p) {
    QVec x(ls.q.rd.g->dim(), Rat(0));
    for (int i = 0; i < ls.rank; ++i)
      x = add(x, scale(ls.a_z.basis()[i], p[i]));
    return x;
  };

  std::vector<QVec> interior_points{ip->point};
  for (int s = 0; s < samples; ++s) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw error("cone check: interior sampling failed");
      QVec p = ip->point;
      for (int i = 0; i < ls.rank; ++i)
        p[i] += rat(draw(eng, -8, 8), 8) * bound;
      if (facets.empty() && is_zero(p)) continue;
      if (!facets.empty() && !strictly_interior(p)) continue;
      interior_points.push_back(p);
      break;
    }
  }

  std::vector<QVec> exterior_points;
  if (!facets.empty()) {
    for (int s = 0; s < samples; ++s) {
      for (int attempt = 0;; ++attempt) {
        if (attempt > 2000) throw error("cone check: exterior sampling failed");
        QVec p(ls.rank, Rat(0));
        for (int i = 0; i < ls.rank; ++i) p[i] = Rat(draw(eng, -5, 5));
        bool violates = false;
        for (const QVec& f : facets)
          if (dot(f, p) > 0) violates = true;
        if (!violates) continue;
        exterior_points.push_back(p);
        break;
      }
    }
  }

  out.passed = true;
  for (const QVec& p : interior_points) {
    SampledTrajectory st;
    st.trajectory = degenerate(ls, h, ambient_direction(p), limits);
    st.passed = st.trajectory.verdict == Verdict::converged;
    for (size_t i = 0; i < st.trajectory.times.size(); ++i)
      if (st.trajectory.times[i] >= 0.8 * limits.t_max - 1e-9 &&
          st.trajectory.distances[i] >= 1e-6)
        st.passed = false;
    out.passed = out.passed && st.passed;
    out.interior.push_back(std::move(st));
  }
  for (const QVec& p : exterior_points) {
    SampledTrajectory st;
    st.trajectory = degenerate(ls, h, ambient_direction(p), limits);
    st.passed = st.trajectory.verdict == Verdict::diverged;
    for (size_t i = 0; i < st.trajectory.times.size(); ++i)
      if (st.trajectory.times[i] >= 0.4 * limits.t_max - 1e-9 &&
          st.trajectory.distances[i] < limits.diverge_tol)
        st.passed = false;
    out.passed = out.passed && st.passed;
    out.exterior.push_back(std::move(st));
  }
  return out;
}

}  // namespace sphex
