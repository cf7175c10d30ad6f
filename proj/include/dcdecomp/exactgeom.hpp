#pragma once

// Polyhedral operations over exact rationals: representation conversion,
// intersection, inclusion/equality, Minkowski sums, integrality.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dcdecomp/double_description.hpp"
#include "dcdecomp/lp.hpp"
#include "dcdecomp/polyhedron.hpp"

namespace dcdecomp {

namespace detail {

inline Point zvec_to_point(const dd::ZVec& z) {
  Point p;
  p.reserve(z.size());
  for (const auto& c : z) p.emplace_back(c);
  return p;
}

inline bool point_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<Point>& v) {
  std::sort(v.begin(), v.end(), point_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// V-representation, or nothing when P is empty.
inline std::optional<VPolyhedron> vertex_enumeration(const HPolyhedron& P, const Limits& lim) {
  const std::size_t n = P.dim();
  check_dim_cap(n, lim);
  if (P.has_contradictory_row()) return std::nullopt;
  // Homogenize: (x, t) with a.x - b t <= 0 and t >= 0.
  std::vector<dd::ZVec> ineqs, eqs;
  {
    dd::ZVec t(n + 1, Integer(0));
    t[n] = -1;
    ineqs.push_back(std::move(t));
  }
  for (const auto& h : P.rows()) {
    if (h.is_trivial()) continue;
    Point row = h.a;
    row.push_back(-h.b);
    (h.rel == Relation::LessEq ? ineqs : eqs).push_back(dd::integer_row(row));
  }
  auto gens = dd::cone_generators(n + 1, ineqs, eqs);
  VPolyhedron V;
  V.dim = n;
  for (const auto& r : gens.rays) {
    Point p = zvec_to_point(r);
    Rational t = p[n];
    p.pop_back();
    if (t > 0)
      V.vertices.push_back(scale(p, 1 / t));
    else
      V.rays.push_back(std::move(p));
  }
  for (const auto& l : gens.lineality) {
    Point p = zvec_to_point(l);
    p.pop_back();  // t-component is zero on the lineality space
    V.rays.push_back(p);
    V.rays.push_back(scale(p, -1));
  }
  if (V.vertices.empty()) return std::nullopt;
  sort_unique(V.vertices);
  for (auto& r : V.rays) r = primitive_direction(r);
  sort_unique(V.rays);
  return V;
}

}  // namespace detail

/// Vertices (minimal-face representatives when P has lineality) and rays.
inline VPolyhedron to_vrep(const HPolyhedron& P, const Limits& lim = {}) {
  auto V = detail::vertex_enumeration(P, lim);
  if (!V) throw Error(ErrorCode::EmptyPolyhedron, "polyhedron has no points");
  return *std::move(V);
}

inline bool is_empty(const HPolyhedron& P) { return !is_feasible(P); }

/// Inequality description of conv(vertices) + cone(rays), computed as the
/// polar of the homogenized generator cone.
inline HPolyhedron to_hrep(const VPolyhedron& V, const Limits& lim = {}) {
  const std::size_t n = V.dim;
  check_dim_cap(n, lim);
  if (V.vertices.empty()) throw Error(ErrorCode::EmptyPolyhedron, "V-representation without vertices");
  std::vector<dd::ZVec> gens;
  for (const auto& v : V.vertices) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertex length differs from dim");
    Point g = v;
    g.push_back(1);
    gens.push_back(dd::integer_row(g));
  }
  for (const auto& r : V.rays) {
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "ray length differs from dim");
    if (is_zero(r)) continue;
    Point g = r;
    g.push_back(0);
    gens.push_back(dd::integer_row(g));
  }
  auto polar = dd::cone_generators(n + 1, gens, {});
  HPolyhedron H(n);
  auto split = [n](const dd::ZVec& h) {
    Point p = detail::zvec_to_point(h);
    Rational ht = p[n];
    p.pop_back();
    return std::pair<Point, Rational>(std::move(p), -ht);
  };
  for (const auto& l : polar.lineality) {
    auto [a, b] = split(l);
    if (is_zero(a)) continue;
    H.add_eq(std::move(a), std::move(b));
  }
  for (const auto& r : polar.rays) {
    auto [a, b] = split(r);
    if (is_zero(a)) continue;  // 0 <= b with b >= 0
    H.add_le(std::move(a), std::move(b));
  }
  return H;
}

/// Row concatenation.
inline HPolyhedron intersect(const HPolyhedron& P1, const HPolyhedron& P2) {
  if (P1.dim() != P2.dim()) throw Error(ErrorCode::DimensionMismatch, "intersecting polyhedra of different dimension");
  HPolyhedron R = P1;
  for (const auto& h : P2.rows()) R.add_row(h);
  return R;
}

inline bool contains_point(const HPolyhedron& P, const Point& x) {
  if (x.size() != P.dim()) throw Error(ErrorCode::DimensionMismatch, "point length differs from polyhedron dimension");
  return std::all_of(P.rows().begin(), P.rows().end(), [&](const Halfspace& h) { return h.satisfied_by(x); });
}

/// P1 subset of P2, tested row by row of P2 with LPs over P1.
inline bool is_subset(const HPolyhedron& P1, const HPolyhedron& P2) {
  if (P1.dim() != P2.dim()) throw Error(ErrorCode::DimensionMismatch, "comparing polyhedra of different dimension");
  if (is_empty(P1)) return true;
  for (const auto& h : P2.rows()) {
    auto hi = lp_solve(P1, h.a, Sense::Maximize);
    if (!hi.optimal() || hi.value > h.b) return false;
    if (h.rel == Relation::Equal) {
      auto lo = lp_solve(P1, h.a, Sense::Minimize);
      if (!lo.optimal() || lo.value < h.b) return false;
    }
  }
  return true;
}

inline bool polyhedra_equal(const HPolyhedron& P1, const HPolyhedron& P2) {
  return is_subset(P1, P2) && is_subset(P2, P1);
}

/// conv(V1) + conv(V2) with vertex set = pairwise sums (redundant points are
/// kept) and ray set = union.
inline VPolyhedron minkowski_sum_polyhedra(const VPolyhedron& V1, const VPolyhedron& V2) {
  if (V1.dim != V2.dim) throw Error(ErrorCode::DimensionMismatch, "Minkowski sum of different dimensions");
  VPolyhedron S;
  S.dim = V1.dim;
  for (const auto& a : V1.vertices)
    for (const auto& b : V2.vertices) S.vertices.push_back(add(a, b));
  S.rays = V1.rays;
  S.rays.insert(S.rays.end(), V2.rays.begin(), V2.rays.end());
  for (auto& r : S.rays) r = primitive_direction(r);
  std::erase_if(S.rays, [](const Point& r) { return is_zero(r); });
  detail::sort_unique(S.vertices);
  detail::sort_unique(S.rays);
  return S;
}

/// Does the integer system M x = c (M, c integral) have a solution x in Z^n?
/// Column-style Hermite reduction followed by forward substitution.
inline bool has_integer_solution(std::vector<std::vector<Integer>> M, std::vector<Integer> c) {
  const std::size_t k = M.size();
  if (k == 0) return true;
  const std::size_t n = M[0].size();
  std::size_t col = 0;
  std::vector<std::optional<std::size_t>> pivot_of_row(k);
  for (std::size_t i = 0; i < k && col < n; ++i) {
    // Reduce row i on columns [col, n) to a single nonzero at `col` using
    // unimodular column operations (extended Euclid on column pairs).
    for (std::size_t j = col + 1; j < n; ++j) {
      if (M[i][j] == 0) continue;
      if (M[i][col] == 0) {
        for (std::size_t r = 0; r < k; ++r) std::swap(M[r][col], M[r][j]);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), M[i][col].get_mpz_t(), M[i][j].get_mpz_t());
      Integer a = M[i][col] / g, b = M[i][j] / g;
      for (std::size_t r = 0; r < k; ++r) {
        Integer u = M[r][col], v = M[r][j];
        M[r][col] = s * u + t * v;
        M[r][j] = -b * u + a * v;
      }
    }
    if (M[i][col] != 0) pivot_of_row[i] = col++;
  }
  // Lower-echelon: solve for y with M y = c.
  std::vector<Integer> y(n, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!pivot_of_row[i] || j != *pivot_of_row[i]) s += M[i][j] * y[j];
    Integer rest = c[i] - s;
    if (pivot_of_row[i]) {
      const Integer& p = M[i][*pivot_of_row[i]];
      if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) return false;
      y[*pivot_of_row[i]] = rest / p;
    } else if (rest != 0) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline bool has_lineality(const VPolyhedron& V) {
  std::set<Point, decltype(&point_less)> rays(point_less);
  for (const auto& r : V.rays) rays.insert(r);
  for (const auto& r : V.rays)
    if (rays.count(scale(r, -1))) return true;
  return false;
}

}  // namespace detail

/// Every minimal face of P contains an integer point. For pointed P that is
/// "all vertices integral"; otherwise the affine hull of each minimal face is
/// tested for an integer solution.
inline bool is_integer_polyhedron(const HPolyhedron& P, const Limits& lim = {}) {
  VPolyhedron V = to_vrep(P, lim);
  if (!detail::has_lineality(V)) return std::all_of(V.vertices.begin(), V.vertices.end(), [](const Point& v) { return is_integral(v); });
  for (const auto& v : V.vertices) {
    std::vector<std::vector<Integer>> M;
    std::vector<Integer> c;
    for (const auto& h : P.rows()) {
      if (h.is_trivial() || dot(h.a, v) != h.b) continue;
      Point row = h.a;
      row.push_back(h.b);
      auto z = primitive_integer(row);
      c.push_back(z.back());
      z.pop_back();
      M.push_back(std::move(z));
    }
    if (!has_integer_solution(std::move(M), std::move(c))) return false;
  }
  return true;
}

/// Componentwise floor/ceil over the vertices; rays are ignored.
inline IntegralBox bounding_box(const VPolyhedron& V) {
  if (V.vertices.empty()) throw Error(ErrorCode::EmptyPolyhedron, "bounding box of a V-representation without vertices");
  const std::size_t n = V.dim;
  IntVec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = V.vertices[0][i], mx = V.vertices[0][i];
    for (const auto& v : V.vertices) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = to_int64(floor_of(mn));
    hi[i] = to_int64(ceil_of(mx));
  }
  return IntegralBox(std::move(lo), std::move(hi));
}

/// conv(points), as a V-representation.
inline VPolyhedron hull_of(std::size_t dim, const std::vector<Point>& points, const std::vector<Point>& rays = {}) {
  VPolyhedron V;
  V.dim = dim;
  V.vertices = points;
  V.rays = rays;
  return V;
}

}  // namespace dcdecomp
