#include "sphex/cone.hpp"

#include <algorithm>

namespace sphex {

namespace {

struct VHForm {
  std::vector<QVec> rays, lin;
};

std::vector<QVec> clean_vectors(int n, std::vector<QVec> vs) {
  for (const QVec& v : vs)
    if (static_cast<int>(v.size()) != n) throw error("cone: vector of wrong ambient size");
  for (QVec& v : vs) v = primitive(v);
  std::erase_if(vs, [](const QVec& v) { return is_zero(v); });
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Incremental double description: the cone is kept as cone(rays) + span(lin)
// with rays extreme and reduced modulo lin, while halfspaces are inserted one
// at a time.
struct DDState {
  int n = 0;
  std::vector<QVec> rays;
  std::vector<QVec> lin;  // RREF rows, primitive
  std::vector<QVec> inserted;

  void init_full(int ambient) {
    n = ambient;
    for (int i = 0; i < n; i++) {
      QVec e(n, Rat(0));
      e[i] = 1;
      lin.push_back(std::move(e));
    }
  }

  void canonicalize_lin() {
    if (lin.empty()) return;
    QMatrix r = rref(QMatrix::from_rows(lin, n));
    lin.clear();
    for (int i = 0; i < r.rows(); i++) {
      QVec row = r.row(i);
      if (is_zero(row)) break;
      lin.push_back(primitive(row));
    }
  }

  QVec reduce_mod_lin(QVec v) const {
    for (const QVec& l : lin) {
      int p = 0;
      while (p < n && l[p] == 0) p++;
      if (p < n && v[p] != 0) {
        Rat f = v[p] / l[p];
        for (int j = p; j < n; j++) v[j] -= f * l[j];
      }
    }
    return v;
  }

  void tidy_rays() {
    for (QVec& r : rays) r = primitive(reduce_mod_lin(std::move(r)));
    std::erase_if(rays, [](const QVec& v) { return is_zero(v); });
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  }

  std::vector<char> tight_mask(const QVec& r) const {
    std::vector<char> m(inserted.size());
    for (size_t k = 0; k < inserted.size(); k++) m[k] = dot(inserted[k], r) == 0;
    return m;
  }

  void insert(const QVec& a) {
    // Lineality case: one lineality vector leaves the hyperplane, becomes a
    // ray, and every other generator is shifted into the hyperplane.
    for (size_t i = 0; i < lin.size(); i++) {
      Rat da = dot(a, lin[i]);
      if (da == 0) continue;
      QVec l0 = lin[i];
      if (da > 0) {
        l0 = scale(l0, Rat(-1));
        da = -da;
      }
      std::vector<QVec> new_lin;
      for (size_t j = 0; j < lin.size(); j++) {
        if (j == i) continue;
        Rat dj = dot(a, lin[j]);
        new_lin.push_back(dj == 0 ? lin[j] : sub(lin[j], scale(l0, dj / da)));
      }
      for (QVec& r : rays) {
        Rat dr = dot(a, r);
        if (dr != 0) r = sub(r, scale(l0, dr / da));
      }
      rays.push_back(std::move(l0));
      lin = std::move(new_lin);
      canonicalize_lin();
      tidy_rays();
      inserted.push_back(a);
      return;
    }

    std::vector<int> pos, neg;
    std::vector<QVec> keep;
    std::vector<std::vector<char>> masks;
    for (const QVec& r : rays) masks.push_back(tight_mask(r));
    for (size_t i = 0; i < rays.size(); i++) {
      Rat d = dot(a, rays[i]);
      if (d > 0)
        pos.push_back(static_cast<int>(i));
      else if (d < 0)
        neg.push_back(static_cast<int>(i));
    }
    if (pos.empty()) {
      inserted.push_back(a);
      return;
    }
    auto adjacent = [&](int p, int q) {
      std::vector<char> common(inserted.size());
      for (size_t k = 0; k < inserted.size(); k++) common[k] = masks[p][k] && masks[q][k];
      for (size_t r = 0; r < rays.size(); r++) {
        if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
        bool superset = true;
        for (size_t k = 0; k < inserted.size(); k++)
          if (common[k] && !masks[r][k]) {
            superset = false;
            break;
          }
        if (superset) return false;
      }
      return true;
    };
    std::vector<QVec> next;
    for (size_t i = 0; i < rays.size(); i++) {
      Rat d = dot(a, rays[i]);
      if (d <= 0) next.push_back(rays[i]);
    }
    for (int p : pos)
      for (int q : neg) {
        if (!adjacent(p, q)) continue;
        // positive combination lying on the hyperplane {a = 0}
        QVec c = sub(scale(rays[q], dot(a, rays[p])), scale(rays[p], dot(a, rays[q])));
        next.push_back(primitive(c));
      }
    rays = std::move(next);
    tidy_rays();
    inserted.push_back(a);
  }
};

VHForm run_dd(int n, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
  DDState s;
  s.init_full(n);
  s.canonicalize_lin();
  for (const QVec& a : ineqs) s.insert(a);
  for (const QVec& e : eqs) {
    s.insert(e);
    s.insert(scale(e, Rat(-1)));
  }
  return {s.rays, s.lin};
}

// V-form of the polar dual {y : y.r <= 0, y.l = 0}.
VHForm polar(int n, const VHForm& f) { return run_dd(n, f.rays, f.lin); }

void cross_validate(int n, const VHForm& v, const VHForm& h) {
  for (const QVec& f : h.rays) {
    for (const QVec& r : v.rays)
      if (dot(f, r) > 0) throw error("cone: double description closure violated");
    for (const QVec& l : v.lin)
      if (dot(f, l) != 0) throw error("cone: double description closure violated");
  }
  for (const QVec& s : h.lin)
    for (const QVec& g : v.rays)
      if (dot(s, g) != 0) throw error("cone: double description closure violated");
  for (const QVec& s : h.lin)
    for (const QVec& l : v.lin)
      if (dot(s, l) != 0) throw error("cone: double description closure violated");
  (void)n;
}

}  // namespace

Cone Cone::from_inequalities(int ambient, const std::vector<QVec>& ineqs) {
  std::vector<QVec> clean = clean_vectors(ambient, ineqs);
  VHForm v = run_dd(ambient, clean, {});
  VHForm h = polar(ambient, v);
  cross_validate(ambient, v, h);
  for (const QVec& a : clean) {
    for (const QVec& r : v.rays)
      if (dot(a, r) > 0) throw error("cone: input inequality violated by computed ray");
    for (const QVec& l : v.lin)
      if (dot(a, l) != 0) throw error("cone: input inequality violated by computed lineality");
  }
  Cone c;
  c.ambient_ = ambient;
  c.rays_ = std::move(v.rays);
  c.lin_ = std::move(v.lin);
  c.facets_ = std::move(h.rays);
  c.span_normals_ = std::move(h.lin);
  return c;
}

Cone Cone::from_generators(int ambient, const std::vector<QVec>& gens) {
  std::vector<QVec> clean = clean_vectors(ambient, gens);
  VHForm h = run_dd(ambient, clean, {});  // polar of cone(gens)
  VHForm v = polar(ambient, h);
  cross_validate(ambient, v, h);
  Cone c;
  c.ambient_ = ambient;
  c.rays_ = std::move(v.rays);
  c.lin_ = std::move(v.lin);
  c.facets_ = std::move(h.rays);
  c.span_normals_ = std::move(h.lin);
  for (const QVec& g : clean)
    if (!c.contains(g)) throw error("cone: input generator outside reconstructed cone");
  return c;
}

std::vector<QVec> Cone::generators() const {
  std::vector<QVec> g = rays_;
  for (const QVec& l : lin_) {
    g.push_back(l);
    g.push_back(scale(l, Rat(-1)));
  }
  std::sort(g.begin(), g.end(), lex_less);
  return g;
}

std::vector<QVec> Cone::inequalities() const {
  std::vector<QVec> h = facets_;
  for (const QVec& s : span_normals_) {
    h.push_back(s);
    h.push_back(scale(s, Rat(-1)));
  }
  std::sort(h.begin(), h.end(), lex_less);
  return h;
}

Cone Cone::dual() const {
  Cone d;
  d.ambient_ = ambient_;
  d.rays_ = facets_;
  d.lin_ = span_normals_;
  d.facets_ = rays_;
  d.span_normals_ = lin_;
  return d;
}

Subspace Cone::edge() const { return Subspace::span(ambient_, lin_); }

bool Cone::contains(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_) throw error("cone contains: size mismatch");
  for (const QVec& f : facets_)
    if (dot(f, x) > 0) return false;
  for (const QVec& s : span_normals_)
    if (dot(s, x) != 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_ != ambient_) throw error("cone contains: ambient mismatch");
  for (const QVec& r : other.rays_)
    if (!contains(r)) return false;
  for (const QVec& l : other.lin_) {
    if (!contains(l)) return false;
    if (!contains(scale(l, Rat(-1)))) return false;
  }
  return true;
}

bool Cone::equals(const Cone& other) const { return contains(other) && other.contains(*this); }

Cone Cone::linear_image(const QMatrix& map) const {
  if (map.cols() != ambient_) throw error("cone linear_image: map size mismatch");
  std::vector<QVec> images;
  for (const QVec& g : generators()) images.push_back(mul(map, g));
  return from_generators(map.rows(), images);
}

int Cone::dim() const {
  std::vector<QVec> all = rays_;
  all.insert(all.end(), lin_.begin(), lin_.end());
  return Subspace::span(ambient_, all).dim();
}

std::optional<Cone::InteriorPoint> Cone::interior_point() const {
  if (rays_.empty() && lin_.empty()) return std::nullopt;
  QVec p(ambient_, Rat(0));
  for (const QVec& r : rays_) p = add(p, r);
  for (const QVec& l : lin_) p = add(p, l);
  return InteriorPoint{p, dim() == ambient_};
}

}  // namespace sphex
