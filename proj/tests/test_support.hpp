#pragma once

// Shared fixtures and independent brute-force oracles for the unit tests.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "dcdecomp/dcdecomp.hpp"

namespace dcdecomp::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

inline Point pti(std::initializer_list<long> xs) {
  Point p;
  for (auto x : xs) p.emplace_back(x);
  return p;
}

/// Row helper: coefficients, bound, relation ("<=", ">=", "=").
struct Row {
  std::vector<long> a;
  Rational b;
  const char* rel = "<=";
};

inline HPolyhedron hpoly(std::size_t n, std::initializer_list<Row> rows) {
  HPolyhedron P(n);
  for (const auto& r : rows) {
    Point a;
    for (auto c : r.a) a.emplace_back(c);
    std::string rel = r.rel;
    if (rel == "<=")
      P.add_le(a, r.b);
    else if (rel == ">=")
      P.add_ge(a, r.b);
    else
      P.add_eq(a, r.b);
  }
  return P;
}

/// { x in R^2 | x1 + x2 >= 1, |x1 - x2| <= 1 }.
inline HPolyhedron worked_example_2d() {
  return hpoly(2, {{{1, 1}, 1, ">="}, {{1, -1}, 1, "<="}, {{-1, 1}, 1, "<="}});
}

inline std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end(), detail::point_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Solves the square system M x = c exactly; nothing if singular.
inline std::optional<Point> solve_square(std::vector<Point> M, Point c) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(c[piv], c[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (std::size_t k = 0; k < n; ++k) M[r][k] -= f * M[col][k];
      c[r] -= f * c[col];
    }
  }
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = c[i] / M[i][i];
  return x;
}

/// Vertices of a pointed polyhedron by trying every n-subset of rows:
/// a vertex is a feasible point where n linearly independent rows are tight.
inline std::vector<Point> brute_force_vertices(const HPolyhedron& P) {
  const std::size_t n = P.dim();
  std::vector<Halfspace> rows;
  for (const auto& h : P.rows()) {
    rows.push_back({h.a, h.b, Relation::LessEq});
    if (h.rel == Relation::Equal) rows.push_back({scale(h.a, -1), -h.b, Relation::LessEq});
  }
  std::vector<Point> out;
  const std::size_t m = rows.size();
  if (m < n) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<Point> M;
    Point c;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        M.push_back(rows[i].a);
        c.push_back(rows[i].b);
      }
    if (auto x = solve_square(M, c))
      if (contains_point(P, *x)) out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sorted(out);
}

/// All integer points of P inside box w, by scanning the box.
inline LatticeSet brute_force_points(const HPolyhedron& P, const IntegralBox& w) {
  LatticeSet S(P.dim());
  for_each_integer_point(w.lower, w.upper, [&](const IntVec& z) {
    if (contains_point(P, to_point(z))) S.insert(z);
    return true;
  });
  return S;
}

inline HPolyhedron random_hpoly(std::mt19937& rng, std::size_t n, std::size_t rows, int coef) {
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<int> b(-2, 4);
  HPolyhedron P(n);
  for (std::size_t i = 0; i < rows; ++i) {
    Point a(n);
    for (auto& x : a) x = c(rng);
    P.add_le(a, b(rng));
  }
  return P;
}

inline LatticeSet random_subset(std::mt19937& rng, std::size_t n, std::int64_t hi, double density) {
  std::bernoulli_distribution keep(density);
  LatticeSet S(n);
  for_each_integer_point(IntVec(n, 0), IntVec(n, hi), [&](const IntVec& z) {
    if (keep(rng)) S.insert(z);
    return true;
  });
  return S;
}

/// Random difference-bound system, redrawn until nonempty.
inline LNatSystem random_lnat_system(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-2, 2), coin(0, 2);
  while (true) {
    LNatSystem sys;
    sys.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng) == 0) sys.lower[i] = val(rng);
      if (coin(rng) == 0) sys.upper[i] = val(rng) + 1;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && coin(rng) == 0) sys.edges[{i, j}] = val(rng);
    }
    if (!is_empty(lnat_to_hrep(sys))) return sys;
  }
}

/// Paramodular pair of offset + sum of segments and rays along e_i, -e_i and
/// e_i - e_j; rho and mu are the max and min of x(X) over that polyhedron.
inline ParamodularPair random_mnat_pair(std::mt19937& rng, std::size_t n, std::size_t segments, std::size_t rays) {
  std::uniform_int_distribution<int> off(-1, 1);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  auto direction = [&]() {
    IntVec v(n, 0);
    std::size_t i = idx(rng);
    switch (kind(rng)) {
      case 0: v[i] = 1; break;
      case 1: v[i] = -1; break;
      default: {
        std::size_t j = idx(rng);
        if (j == i) j = (i + 1) % n;
        v[i] = 1;
        if (n > 1) v[j] = -1;
      }
    }
    return v;
  };
  IntVec base(n);
  for (auto& c : base) c = off(rng);
  std::vector<IntVec> segs, rs;
  for (std::size_t k = 0; k < segments; ++k) segs.push_back(direction());
  for (std::size_t k = 0; k < rays; ++k) rs.push_back(direction());
  ParamodularPair pair;
  pair.dim = n;
  for (std::uint32_t X = 1; X < (1u << n); ++X) {
    auto meas = [&](const IntVec& v) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (X >> i & 1u) s += v[i];
      return s;
    };
    std::int64_t hi = meas(base), lo = meas(base);
    for (const auto& g : segs) {
      hi += std::max<std::int64_t>(0, meas(g));
      lo += std::min<std::int64_t>(0, meas(g));
    }
    bool up = true, down = true;
    for (const auto& r : rs) {
      if (meas(r) > 0) up = false;
      if (meas(r) < 0) down = false;
    }
    if (up) pair.rho[X] = hi;
    if (down) pair.mu[X] = lo;
  }
  return pair;
}

/// Nonempty set inside [0,3]^n for oracle comparisons: plain random
/// subsets, integer points of random polytopes, L♮ and M♮ sets, and hulls
/// of a few random points.
inline LatticeSet random_oracle_set(std::mt19937& rng, std::size_t n, int kind) {
  const auto box = IntegralBox::cube(n, 0, 3);
  std::uniform_int_distribution<int> coord(0, 3), count(2, 4);
  LatticeSet S(n);
  switch (kind % 5) {
    case 0: {
      std::uniform_real_distribution<double> dens(0.1, 0.9);
      S = random_subset(rng, n, 3, dens(rng));
      break;
    }
    case 1: S = integer_points(intersect(random_hpoly(rng, n, 2 + rng() % 4, 2), box.to_hrep()), box); break;
    case 2: S = integer_points(intersect(lnat_to_hrep(random_lnat_system(rng, n)), box.to_hrep()), box); break;
    case 3: {
      auto P = mnat_to_hrep(random_mnat_pair(rng, n, 4, 0));
      IntVec shift(n, 1);
      for (const auto& z : integer_points(P)) {
        IntVec y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = z[i] + shift[i];
        if (box.contains(y)) S.insert(y);
      }
      break;
    }
    default: {
      std::vector<Point> pts;
      for (int k = count(rng); k > 0; --k) {
        Point p(n);
        for (auto& c : p) c = coord(rng);
        pts.push_back(p);
      }
      S = integer_points(to_hrep(hull_of(n, pts)));
    }
  }
  if (S.empty()) S.insert(IntVec(n, 0));
  return S;
}

}  // namespace dcdecomp::testing
