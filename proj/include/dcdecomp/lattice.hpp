#pragma once

// Integer-point machinery: integral neighborhoods, enumeration of P ∩ Z^n,
// discrete Minkowski sums, holes, and windowed views of infinite sets.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dcdecomp/exactgeom.hpp"

namespace dcdecomp {

/// Finite set of integer points, kept in lexicographic order.
class LatticeSet {
 public:
  LatticeSet() = default;
  explicit LatticeSet(std::size_t dim) : dim_(dim) {}
  LatticeSet(std::size_t dim, const std::vector<IntVec>& pts) : dim_(dim) {
    for (const auto& p : pts) insert(p);
  }
  LatticeSet(std::size_t dim, std::initializer_list<IntVec> pts) : dim_(dim) {
    for (const auto& p : pts) insert(p);
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const IntVec& z) const { return pts_.count(z) > 0; }
  const std::set<IntVec>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  void insert(const IntVec& z) {
    if (z.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "lattice point " + format_point(z) + " in dimension " + std::to_string(dim_));
    pts_.insert(z);
  }

  std::vector<Point> as_points() const {
    std::vector<Point> v;
    v.reserve(pts_.size());
    for (const auto& z : pts_) v.push_back(to_point(z));
    return v;
  }

  friend bool operator==(const LatticeSet& a, const LatticeSet& b) { return a.dim_ == b.dim_ && a.pts_ == b.pts_; }

 private:
  std::size_t dim_ = 0;
  std::set<IntVec> pts_;
};

/// Observation region for infinite sets.
using Window = IntegralBox;

/// base + (cone(generators) ∩ Z^n).
struct GeneratedSet {
  LatticeSet base;
  std::vector<IntVec> generators;

  std::size_t dim() const { return base.dim(); }
};

inline LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b) {
  LatticeSet r(a.dim());
  for (const auto& z : a)
    if (!b.contains(z)) r.insert(z);
  return r;
}

inline LatticeSet set_intersection(const LatticeSet& a, const LatticeSet& b) {
  LatticeSet r(a.dim());
  for (const auto& z : a)
    if (b.contains(z)) r.insert(z);
  return r;
}

inline LatticeSet restrict_to(const LatticeSet& s, const IntegralBox& box) {
  LatticeSet r(s.dim());
  for (const auto& z : s)
    if (box.contains(z)) r.insert(z);
  return r;
}

inline IntegralBox bounding_box(const LatticeSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "bounding box of an empty set");
  IntVec lo = *s.begin(), hi = *s.begin();
  for (const auto& z : s)
    for (std::size_t i = 0; i < z.size(); ++i) {
      lo[i] = std::min(lo[i], z[i]);
      hi[i] = std::max(hi[i], z[i]);
    }
  return IntegralBox(lo, hi);
}

/// { z in Z^n : |x_i - z_i| < 1 }, i.e. floor(x) <= z <= ceil(x).
inline LatticeSet integral_neighborhood(const Point& x) {
  IntVec lo(x.size()), hi(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    lo[i] = to_int64(floor_of(x[i]));
    hi[i] = to_int64(ceil_of(x[i]));
  }
  LatticeSet N(x.size());
  for_each_integer_point(lo, hi, [&](const IntVec& z) {
    N.insert(z);
    return true;
  });
  return N;
}

namespace detail {

struct FmRow {
  Point a;
  Rational b;
};

// Scale to a primitive integer normal so duplicates compare equal.
inline std::optional<FmRow> normalize_row(const Point& a, const Rational& b) {
  if (is_zero(a)) return std::nullopt;
  Integer l = 1;
  for (const auto& q : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    z[i] = a[i].get_num() * (l / a[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  Rational f = Rational(l) / Rational(g);
  FmRow r;
  for (auto& c : z) r.a.emplace_back(c / g);
  r.b = b * f;
  return r;
}

// Deduplicate rows by normal, keeping the tightest offset. Returns false if
// a zero-normal row is violated.
inline bool tidy(std::vector<FmRow>& rows, std::vector<FmRow>& out) {
  std::map<Point, Rational, decltype(&point_less)> best(point_less);
  for (auto& r : rows) {
    if (is_zero(r.a)) {
      if (r.b < 0) return false;
      continue;
    }
    auto nr = normalize_row(r.a, r.b);
    auto it = best.find(nr->a);
    if (it == best.end())
      best.emplace(nr->a, nr->b);
    else if (nr->b < it->second)
      it->second = nr->b;
  }
  out.clear();
  for (auto& [a, b] : best) out.push_back({a, b});
  return true;
}

// Drops rows implied by the others (LP test); used when elimination grows
// the system.
inline std::vector<FmRow> prune_redundant(const std::vector<FmRow>& rows, std::size_t dim) {
  std::vector<FmRow> keep = rows;
  for (std::size_t i = keep.size(); i-- > 0;) {
    HPolyhedron others(dim);
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.add_le(keep[j].a, keep[j].b);
    auto r = lp_solve(others, keep[i].a, Sense::Maximize);
    if (r.optimal() && r.value <= keep[i].b) keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return keep;
}

inline constexpr std::size_t kFmPruneThreshold = 48;

/// proj[k] describes the projection onto the first k coordinates (rows use
/// only those coordinates). proj is empty when the system is infeasible.
inline std::vector<std::vector<FmRow>> fourier_motzkin_chain(const HPolyhedron& P) {
  const std::size_t n = P.dim();
  std::vector<FmRow> rows;
  for (const auto& h : P.rows()) {
    rows.push_back({h.a, h.b});
    if (h.rel == Relation::Equal) rows.push_back({scale(h.a, -1), -h.b});
  }
  std::vector<std::vector<FmRow>> proj(n + 1);
  if (!tidy(rows, proj[n])) return {};
  for (std::size_t k = n; k-- > 0;) {
    const auto& cur = proj[k + 1];
    std::vector<FmRow> next, up, down;
    for (const auto& r : cur) {
      int s = sgn(r.a[k]);
      (s > 0 ? up : s < 0 ? down : next).push_back(r);
    }
    for (const auto& u : up)
      for (const auto& d : down) {
        Rational cu = u.a[k], cd = -d.a[k];
        FmRow r;
        r.a.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.a[i] = cd * u.a[i] + cu * d.a[i];
        r.a[k] = 0;
        r.b = cd * u.b + cu * d.b;
        next.push_back(std::move(r));
      }
    if (!tidy(next, proj[k])) return {};
    if (proj[k].size() > kFmPruneThreshold) proj[k] = prune_redundant(proj[k], n);
  }
  return proj;
}

}  // namespace detail

/// Is P bounded? Decided on the characteristic cone { d | A d <= 0 }.
inline bool is_bounded(const HPolyhedron& P, const Limits& lim = {}) {
  HPolyhedron C(P.dim());
  for (const auto& h : P.rows()) C.add_row({h.a, Rational(0), h.rel});
  return to_vrep(C, lim).rays.empty();
}

/// P ∩ w ∩ Z^n in lexicographic order. Coordinates are fixed one at a time;
/// the admissible range of x_k given the prefix comes from the projection of
/// P ∩ w onto the first k+1 coordinates, so every prefix extends to a point
/// of the relaxation.
inline LatticeSet integer_points(const HPolyhedron& P, const std::optional<Window>& w = std::nullopt, const Limits& lim = {}) {
  const std::size_t n = P.dim();
  LatticeSet out(n);
  HPolyhedron Q = P;
  if (w) {
    if (w->dim() != n) throw Error(ErrorCode::DimensionMismatch, "window dimension differs from polyhedron");
    Q = intersect(P, w->to_hrep());
  } else {
    if (is_empty(P)) return out;
    if (!is_bounded(P, lim)) throw Error(ErrorCode::UnboundedWithoutWindow, "unbounded polyhedron needs a window");
  }
  auto proj = detail::fourier_motzkin_chain(Q);
  if (proj.empty()) return out;

  IntVec z(n);
  Point x(n);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.insert(z);
      return;
    }
    std::optional<Rational> lo, hi;
    for (const auto& r : proj[k + 1]) {
      const Rational& ak = r.a[k];
      if (ak == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < k; ++j)
        if (r.a[j] != 0) rest -= r.a[j] * x[j];
      Rational bound = rest / ak;
      if (ak > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    // Rows with a_k = 0 constrain the prefix only; they hold because the
    // prefix was drawn from the previous projection.
    if (!lo || !hi) throw Error(ErrorCode::UnboundedWithoutWindow, "unbounded coordinate during enumeration");
    Integer a = ceil_of(*lo), b = floor_of(*hi);
    for (Integer v = a; v <= b; ++v) {
      z[k] = to_int64(v);
      x[k] = v;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// conv(S) as an inequality system.
inline HPolyhedron hull_hrep(const LatticeSet& S, const Limits& lim = {}) {
  if (S.empty()) throw Error(ErrorCode::EmptySet, "convex hull of an empty set");
  return to_hrep(hull_of(S.dim(), S.as_points()), lim);
}

/// S == conv(S) ∩ Z^n.
inline bool is_hole_free(const LatticeSet& S, const Limits& lim = {}) {
  if (S.empty()) throw Error(ErrorCode::EmptySet, "hole-freeness of an empty set");
  return integer_points(hull_hrep(S, lim), std::nullopt, lim) == S;
}

inline LatticeSet minkowski_sum_sets(const LatticeSet& S1, const LatticeSet& S2) {
  if (S1.dim() != S2.dim()) throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of different dimensions");
  LatticeSet R(S1.dim());
  IntVec s(S1.dim());
  for (const auto& a : S1)
    for (const auto& b : S2) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
      R.insert(s);
    }
  return R;
}

/// (conv(S1+S2) ∩ Z^n) \ (S1+S2).
inline LatticeSet find_minkowski_holes(const LatticeSet& S1, const LatticeSet& S2, const Limits& lim = {}) {
  LatticeSet sum = minkowski_sum_sets(S1, S2);
  if (sum.empty()) return sum;
  return set_difference(integer_points(hull_hrep(sum, lim), std::nullopt, lim), sum);
}

/// H-representation of cone(generators) (the origin when there are none).
inline HPolyhedron generated_cone(std::size_t dim, const std::vector<IntVec>& generators, const Limits& lim = {}) {
  VPolyhedron V;
  V.dim = dim;
  V.vertices.push_back(Point(dim, Rational(0)));
  for (const auto& g : generators) V.rays.push_back(to_point(g));
  return to_hrep(V, lim);
}

/// { t + g | t in base, g in cone(generators) ∩ Z^n } ∩ w. Cone points are
/// enumerated once inside the box hull of the translated windows w - t.
inline LatticeSet truncate(const GeneratedSet& G, const Window& w, const Limits& lim = {}) {
  const std::size_t n = G.dim();
  if (w.dim() != n) throw Error(ErrorCode::DimensionMismatch, "window dimension differs from generated set");
  LatticeSet out(n);
  if (G.base.empty()) return out;
  if (G.generators.empty()) return restrict_to(G.base, w);
  IntVec lo(n), hi(n);
  bool first = true;
  for (const auto& t : G.base)
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t l = w.lower[i] - t[i], u = w.upper[i] - t[i];
      lo[i] = first ? l : std::min(lo[i], l);
      hi[i] = first ? u : std::max(hi[i], u);
      if (i + 1 == n) first = false;
    }
  LatticeSet cone_pts = integer_points(generated_cone(n, G.generators, lim), Window(lo, hi), lim);
  IntVec s(n);
  for (const auto& t : G.base)
    for (const auto& g : cone_pts) {
      for (std::size_t i = 0; i < n; ++i) s[i] = t[i] + g[i];
      if (w.contains(s)) out.insert(s);
    }
  return out;
}

}  // namespace dcdecomp
