#pragma once

// Exact two-phase primal simplex over the rationals (Bland's rule, so the
// pivot sequence and the returned vertex are deterministic).

#include <cstddef>
#include <optional>
#include <vector>

#include "dcdecomp/polyhedron.hpp"

namespace dcdecomp {

enum class Sense { Maximize, Minimize };

struct LpResult {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  Rational value;  // Optimal only
  Point point;     // Optimal only
  Point ray;       // Unbounded only: A r <= 0 (= 0 on equality rows), c.r improving

  bool optimal() const { return status == Status::Optimal; }
  bool unbounded() const { return status == Status::Unbounded; }
  bool infeasible() const { return status == Status::Infeasible; }
};

namespace detail {

// Standard form: minimize cost.y subject to M y = rhs, y >= 0, rhs >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t num_vars)
      : m_(rows.size()), nv_(num_vars) {
    // columns: [0, nv) structural, [nv, nv+m) artificial, last = rhs
    width_ = nv_ + m_ + 1;
    t_.assign(m_ + 1, std::vector<Rational>(width_, Rational(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < nv_; ++j) t_[i][j] = rows[i][j];
      t_[i][nv_ + i] = 1;
      t_[i][width_ - 1] = rhs[i];
      basis_[i] = nv_ + i;
    }
    active_.assign(m_, true);
  }

  // Returns false when the system has no nonnegative solution.
  bool phase_one() {
    auto& obj = t_[m_];
    for (auto& v : obj) v = 0;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < width_; ++j)
        if (j < nv_ || j == width_ - 1) obj[j] -= t_[i][j];
    allow_artificial_ = false;
    iterate(nullptr);
    if (obj[width_ - 1] != 0) return false;
    // Pivot remaining artificials out; rows where that is impossible are
    // linearly dependent and are dropped.
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < nv_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < nv_; ++j)
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      if (col)
        pivot(i, *col);
      else
        active_[i] = false;
    }
    return true;
  }

  // Returns the entering column of an unbounded direction, if any.
  std::optional<std::size_t> phase_two(const std::vector<Rational>& cost) {
    auto& obj = t_[m_];
    for (auto& v : obj) v = 0;
    for (std::size_t j = 0; j < nv_; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (j < nv_ || j == width_ - 1)
          if (t_[i][j] != 0) obj[j] -= cb * t_[i][j];
    }
    std::optional<std::size_t> unbounded;
    iterate(&unbounded);
    return unbounded;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> y(nv_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < nv_) y[basis_[i]] = t_[i][width_ - 1];
    return y;
  }

  std::vector<Rational> direction(std::size_t entering) const {
    std::vector<Rational> y(nv_, Rational(0));
    y[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < nv_) y[basis_[i]] = -t_[i][entering];
    return y;
  }

 private:
  void iterate(std::optional<std::size_t>* unbounded) {
    const std::size_t ncols = allow_artificial_ ? nv_ + m_ : nv_;
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols; ++j)
        if (t_[m_][j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || t_[i][*enter] <= 0) continue;
        Rational ratio = t_[i][width_ - 1] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) {
        if (unbounded) *unbounded = enter;
        return;
      }
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    for (auto& v : t_[r])
      if (v != 0) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || (i < m_ && !active_[i])) continue;
      Rational f = t_[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t nv_;
  std::size_t width_ = 0;
  bool allow_artificial_ = false;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace detail

/// Optimizes c.x over P. Free variables are split as x = x+ - x-.
inline LpResult lp_solve(const HPolyhedron& P, const Point& c, Sense sense) {
  const std::size_t n = P.dim();
  if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "objective length differs from polyhedron dimension");
  LpResult res;
  if (P.has_contradictory_row()) return res;

  std::vector<const Halfspace*> rows;
  std::size_t slacks = 0;
  for (const auto& h : P.rows()) {
    if (h.is_trivial()) continue;
    rows.push_back(&h);
    if (h.rel == Relation::LessEq) ++slacks;
  }
  const std::size_t nv = 2 * n + slacks;
  std::vector<std::vector<Rational>> M(rows.size(), std::vector<Rational>(nv, Rational(0)));
  std::vector<Rational> rhs(rows.size());
  std::size_t s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& h = *rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      M[i][j] = h.a[j];
      M[i][n + j] = -h.a[j];
    }
    if (h.rel == Relation::LessEq) M[i][2 * n + s++] = 1;
    rhs[i] = h.b;
    if (rhs[i] < 0) {
      for (auto& v : M[i]) v = -v;
      rhs[i] = -rhs[i];
    }
  }

  detail::Tableau tab(std::move(M), std::move(rhs), nv);
  if (!tab.phase_one()) return res;

  std::vector<Rational> cost(nv, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = sense == Sense::Maximize ? Rational(-c[j]) : Rational(c[j]);
    cost[j] = cj;
    cost[n + j] = -cj;
  }
  auto to_x = [n](const std::vector<Rational>& y) {
    Point x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    return x;
  };
  if (auto enter = tab.phase_two(cost)) {
    res.status = LpResult::Status::Unbounded;
    res.ray = primitive_direction(to_x(tab.direction(*enter)));
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.point = to_x(tab.solution());
  res.value = dot(c, res.point);
  return res;
}

inline bool is_feasible(const HPolyhedron& P) {
  return !lp_solve(P, Point(P.dim(), Rational(0)), Sense::Maximize).infeasible();
}

/// Is there y >= 0 with M y = rhs? Runs phase one only.
inline bool nonneg_feasible(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  if (M.empty()) return true;
  const std::size_t nv = M[0].size();
  for (std::size_t i = 0; i < M.size(); ++i)
    if (rhs[i] < 0) {
      for (auto& v : M[i]) v = -v;
      rhs[i] = -rhs[i];
    }
  detail::Tableau tab(std::move(M), std::move(rhs), nv);
  return tab.phase_one();
}

/// Is x a convex combination of `points` plus a nonnegative combination of
/// `directions`? With no points, only the conic part is tested.
inline bool in_generated_hull(const Point& x, const std::vector<Point>& points, const std::vector<Point>& directions = {}) {
  const std::size_t n = x.size();
  const std::size_t k = points.size() + directions.size();
  if (k == 0) return points.empty() && is_zero(x);
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(k);
    std::size_t c = 0;
    for (const auto& p : points) row[c++] = p[i];
    for (const auto& d : directions) row[c++] = d[i];
    M.push_back(std::move(row));
    rhs.push_back(x[i]);
  }
  if (!points.empty()) {
    std::vector<Rational> ones(k, Rational(0));
    for (std::size_t c = 0; c < points.size(); ++c) ones[c] = 1;
    M.push_back(std::move(ones));
    rhs.push_back(1);
  }
  return nonneg_feasible(std::move(M), std::move(rhs));
}

}  // namespace dcdecomp
