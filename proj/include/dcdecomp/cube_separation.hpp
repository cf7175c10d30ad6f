#pragma once

// Separation of a point d of the unit cube from conv(R), R a set of cube
// vertices, by an ordered set B of vertices: R ∩ B = ∅, d ∉ conv(X \ B),
// and the chain condition conv{d1..di} ∩ conv({di..dl} ∪ (X \ B)) = {di}.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dcdecomp/lattice.hpp"

namespace dcdecomp {

struct CubeSeparation {
  std::vector<IntVec> order;  // B = [d1, ..., dl]
  Point normal;               // a, with B = { x in X : a.x > delta }
  Rational offset;            // delta
};

namespace detail {

inline std::vector<IntVec> cube_vertices(std::size_t m) {
  std::vector<IntVec> X;
  for_each_integer_point(IntVec(m, 0), IntVec(m, 1), [&](const IntVec& z) {
    X.push_back(z);
    return true;
  });
  return X;
}

// Weights 1, 3, 9, ...: distinct values on distinct 0/1 vectors.
inline Point tiebreak_weights(std::size_t m) {
  Point w(m);
  Rational p(1);
  for (auto& c : w) {
    c = p;
    p *= 3;
  }
  return w;
}

inline void check_cube_input(const std::vector<IntVec>& R, const Point& d, const Limits& lim) {
  const std::size_t m = d.size();
  if (m == 0) throw Error(ErrorCode::InvalidInput, "empty point");
  if (m > lim.cube_cap)
    throw Error(ErrorCode::DimensionCapExceeded, "cube dimension " + std::to_string(m) + " exceeds cap " + std::to_string(lim.cube_cap));
  for (const auto& c : d)
    if (c < 0 || c > 1) throw Error(ErrorCode::InvalidInput, "d lies outside the unit cube");
  for (const auto& r : R) {
    if (r.size() != m) throw Error(ErrorCode::DimensionMismatch, "vertex of R has wrong length");
    for (auto c : r)
      if (c != 0 && c != 1) throw Error(ErrorCode::InvalidInput, "R contains a non-{0,1} vector");
  }
}

inline bool contains_vertex(const std::vector<IntVec>& v, const IntVec& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

inline std::vector<Point> as_points(const std::vector<IntVec>& v) {
  std::vector<Point> out;
  for (const auto& x : v) out.push_back(to_point(x));
  return out;
}

// Do conv(A) and conv(B) meet? Phase one on the convex multipliers.
inline bool hulls_meet(const std::vector<IntVec>& A, const std::vector<IntVec>& B, std::size_t m) {
  if (A.empty() || B.empty()) return false;
  const std::size_t k = A.size() + B.size();
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(k, Rational(0));
    for (std::size_t j = 0; j < A.size(); ++j) row[j] = A[j][i];
    for (std::size_t j = 0; j < B.size(); ++j) row[A.size() + j] = -B[j][i];
    M.push_back(std::move(row));
    rhs.push_back(0);
  }
  std::vector<Rational> ones_a(k, Rational(0)), ones_b(k, Rational(0));
  for (std::size_t j = 0; j < A.size(); ++j) ones_a[j] = 1;
  for (std::size_t j = 0; j < B.size(); ++j) ones_b[A.size() + j] = 1;
  M.push_back(std::move(ones_a));
  rhs.push_back(1);
  M.push_back(std::move(ones_b));
  rhs.push_back(1);
  return nonneg_feasible(std::move(M), std::move(rhs));
}

// conv(A) ∩ conv(B) = {A[0]}, given that A[0] is in B and is a vertex of
// the cube: then every other common point needs weight < 1 on A[0], so the
// check is min lambda_0 = 1.
inline bool hulls_meet_only_at(const std::vector<IntVec>& A, const std::vector<IntVec>& B, std::size_t m) {
  const std::size_t ka = A.size(), k = A.size() + B.size();
  HPolyhedron P(k);
  auto unit = [&](std::size_t j) {
    Point a(k, Rational(0));
    a[j] = 1;
    return a;
  };
  for (std::size_t j = 0; j < k; ++j) P.add_ge(unit(j), Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Point row(k, Rational(0));
    for (std::size_t j = 0; j < ka; ++j) row[j] = A[j][i];
    for (std::size_t j = 0; j < B.size(); ++j) row[ka + j] = -B[j][i];
    P.add_eq(row, Rational(0));
  }
  Point sa(k, Rational(0)), sb(k, Rational(0));
  for (std::size_t j = 0; j < ka; ++j) sa[j] = 1;
  for (std::size_t j = ka; j < k; ++j) sb[j] = 1;
  P.add_eq(sa, Rational(1));
  P.add_eq(sb, Rational(1));
  auto res = lp_solve(P, unit(0), Sense::Minimize);
  return res.optimal() && res.value == 1;
}

}  // namespace detail

/// Checks R ∩ B = ∅, d ∉ conv(X \ B), conv(B) ∩ conv(X \ B) = ∅ and the
/// chain condition for the given order of B.
inline bool verify_cube_separation(const std::vector<IntVec>& R, const Point& d, const std::vector<IntVec>& order,
                                   const Limits& lim = {}) {
  detail::check_cube_input(R, d, lim);
  const std::size_t m = d.size();
  const auto X = detail::cube_vertices(m);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!detail::contains_vertex(X, order[i])) return false;
    if (detail::contains_vertex(R, order[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (order[j] == order[i]) return false;
  }
  std::vector<IntVec> rest;
  for (const auto& x : X)
    if (!detail::contains_vertex(order, x)) rest.push_back(x);
  if (!rest.empty() && in_generated_hull(d, detail::as_points(rest))) return false;
  if (order.empty()) return false;  // d would lie in conv(X) = conv(X \ B)
  if (detail::hulls_meet(order, rest, m)) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    // A lists d^i first, then d^1..d^{i-1}.
    std::vector<IntVec> A{order[i]};
    for (std::size_t j = 0; j < i; ++j) A.push_back(order[j]);
    std::vector<IntVec> B(order.begin() + static_cast<std::ptrdiff_t>(i), order.end());
    B.insert(B.end(), rest.begin(), rest.end());
    if (!detail::hulls_meet_only_at(A, B, m)) return false;
  }
  return true;
}

/// Constructs B. d integral: B = {d}. R nonempty: a maximum-margin
/// hyperplane a.x = delta with |a_i| <= 1 separates d from conv(R).
/// R empty: a = (1, 3, 9, ...) and delta just below a.d. B is ordered by
/// decreasing a.x, ties broken by decreasing (1, 3, 9, ...).x.
inline CubeSeparation separate_cube_subset(const std::vector<IntVec>& R, const Point& d, const Limits& lim = {}) {
  detail::check_cube_input(R, d, lim);
  const std::size_t m = d.size();
  if (!R.empty() && in_generated_hull(d, detail::as_points(R)))
    throw Error(ErrorCode::DInConvR, "d lies in conv(R)");
  const Point w = detail::tiebreak_weights(m);
  CubeSeparation out;

  if (is_integral(d)) {
    out.order = {to_intvec(d)};
    out.normal = scale(d, 2);
    for (auto& c : out.normal) c -= 1;  // a = 2d - 1 peaks at d over the cube
    out.offset = dot(out.normal, d) - Rational(1, 2);
    return out;
  }

  if (R.empty()) {
    out.normal = w;
    // delta below a.d and above every smaller value a.x.
    Rational ad = dot(w, d);
    Rational below = ad - 1;
    for (const auto& x : detail::cube_vertices(m)) {
      Rational v = dot(w, to_point(x));
      if (v < ad && v > below) below = v;
    }
    out.offset = (ad + below) / 2;
  } else {
    // Variables (a_1..a_m, delta, s): maximize s.
    const std::size_t k = m + 2;
    HPolyhedron P(k);
    auto row_for = [&](const Point& x, long sign) {
      Point a(k, Rational(0));
      for (std::size_t i = 0; i < m; ++i) a[i] = sign * x[i];
      a[m] = -sign;
      a[m + 1] = 1;
      return a;
    };
    for (const auto& r : R) P.add_le(row_for(to_point(r), 1), Rational(0));
    P.add_le(row_for(d, -1), Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Point e(k, Rational(0));
      e[i] = 1;
      P.add_le(e, Rational(1));
      P.add_ge(e, Rational(-1));
    }
    Point es(k, Rational(0));
    es[m + 1] = 1;
    P.add_le(es, Rational(1));
    auto res = lp_solve(P, es, Sense::Maximize);
    if (!res.optimal() || res.value <= 0) throw Error(ErrorCode::DInConvR, "no hyperplane separates d from conv(R)");
    out.normal.assign(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(m));
    out.offset = res.point[m];
  }

  for (const auto& x : detail::cube_vertices(m))
    if (dot(out.normal, to_point(x)) > out.offset) out.order.push_back(x);
  std::sort(out.order.begin(), out.order.end(), [&](const IntVec& p, const IntVec& q) {
    Rational ap = dot(out.normal, to_point(p)), aq = dot(out.normal, to_point(q));
    if (ap != aq) return ap > aq;
    return dot(w, to_point(p)) > dot(w, to_point(q));
  });
  return out;
}

}  // namespace dcdecomp
