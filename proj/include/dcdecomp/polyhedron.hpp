#pragma once

// Representations of rational polyhedra: inequality systems (H) and
// generator lists (V), plus integral boxes.

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "dcdecomp/rational.hpp"

namespace dcdecomp {

inline constexpr std::size_t kDefaultDimCap = 8;

/// Size limits applied by the exponential-time routines.
struct Limits {
  std::size_t dim_cap = kDefaultDimCap;  // DD conversions, 3^n scans, cell sweeps
  std::size_t mnat_cap = 5;              // 2^n set-function tables
  std::size_t cube_cap = 6;              // {0,1}^m separation
};

/// Limits with the dimension cap taken from DCDECOMP_DIM_CAP when set.
inline Limits limits_from_env() {
  Limits lim;
  if (const char* env = std::getenv("DCDECOMP_DIM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) lim.dim_cap = static_cast<std::size_t>(v);
  }
  return lim;
}

inline void check_dim_cap(std::size_t n, const Limits& lim) {
  if (n > lim.dim_cap)
    throw Error(ErrorCode::DimensionCapExceeded,
                "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(lim.dim_cap));
}

enum class Relation { LessEq, Equal };

/// One row a.x <= b or a.x = b.
struct Halfspace {
  Point a;
  Rational b;
  Relation rel = Relation::LessEq;

  /// 0.x <= b with b >= 0 carries no information; it is kept but reported.
  bool is_trivial() const { return is_zero(a); }
  bool is_contradictory() const {
    return is_zero(a) && (rel == Relation::LessEq ? b < 0 : b != 0);
  }
  bool satisfied_by(const Point& x) const {
    Rational v = dot(a, x);
    return rel == Relation::LessEq ? v <= b : v == b;
  }
};

/// { x in R^n | rows }. Emptiness is a property to query, not an invariant.
class HPolyhedron {
 public:
  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {}
  HPolyhedron(std::size_t dim, std::vector<Halfspace> rows) : dim_(dim), rows_(std::move(rows)) {
    for (const auto& r : rows_) check_row(r);
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& rows() const { return rows_; }

  void add_row(Halfspace h) {
    check_row(h);
    rows_.push_back(std::move(h));
  }
  void add_le(Point a, Rational b) { add_row({std::move(a), std::move(b), Relation::LessEq}); }
  void add_ge(const Point& a, const Rational& b) { add_le(scale(a, -1), -b); }
  void add_eq(Point a, Rational b) { add_row({std::move(a), std::move(b), Relation::Equal}); }

  bool has_contradictory_row() const {
    for (const auto& r : rows_)
      if (r.is_contradictory()) return true;
    return false;
  }

  /// Full space R^n (no rows).
  static HPolyhedron universe(std::size_t dim) { return HPolyhedron(dim); }

 private:
  void check_row(const Halfspace& h) const {
    if (h.a.size() != dim_)
      throw Error(ErrorCode::DimensionMismatch,
                  "row of length " + std::to_string(h.a.size()) + " in dimension " + std::to_string(dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Halfspace> rows_;
};

/// conv(vertices) + cone(rays). A lineality direction l is stored as the
/// opposite pair l, -l.
struct VPolyhedron {
  std::size_t dim = 0;
  std::vector<Point> vertices;
  std::vector<Point> rays;

  bool is_bounded() const { return rays.empty(); }
};

/// { x | lower <= x <= upper } with integer bounds.
struct IntegralBox {
  IntVec lower;
  IntVec upper;

  IntegralBox() = default;
  IntegralBox(IntVec l, IntVec u) : lower(std::move(l)), upper(std::move(u)) {
    if (lower.size() != upper.size()) throw Error(ErrorCode::DimensionMismatch, "box bounds differ in length");
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (lower[i] > upper[i]) throw Error(ErrorCode::InvalidInput, "box with lower > upper");
  }

  static IntegralBox cube(std::size_t n, std::int64_t lo, std::int64_t hi) {
    return IntegralBox(IntVec(n, lo), IntVec(n, hi));
  }

  std::size_t dim() const { return lower.size(); }

  bool contains(const IntVec& z) const {
    for (std::size_t i = 0; i < z.size(); ++i)
      if (z[i] < lower[i] || z[i] > upper[i]) return false;
    return true;
  }

  bool contains(const Point& x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < static_cast<long>(lower[i]) || x[i] > static_cast<long>(upper[i])) return false;
    return true;
  }

  IntegralBox inflated(std::int64_t by) const {
    IntegralBox b = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
      b.lower[i] -= by;
      b.upper[i] += by;
    }
    return b;
  }

  HPolyhedron to_hrep() const {
    const std::size_t n = dim();
    HPolyhedron h(n);
    for (std::size_t i = 0; i < n; ++i) {
      Point e(n, Rational(0));
      e[i] = 1;
      h.add_le(e, Rational(static_cast<long>(upper[i])));
      h.add_ge(e, Rational(static_cast<long>(lower[i])));
    }
    return h;
  }
};

inline bool operator==(const IntegralBox& a, const IntegralBox& b) {
  return a.lower == b.lower && a.upper == b.upper;
}

/// Unit cell [z, z+1]^n.
inline IntegralBox unit_cell(const IntVec& z) {
  IntVec u = z;
  for (auto& c : u) ++c;
  return IntegralBox(z, u);
}

/// Calls f(z) for every integer z in the box, in lexicographic order. Stops
/// early when f returns false.
template <typename F>
bool for_each_integer_point(const IntVec& lo, const IntVec& hi, F&& f) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return true;
  IntVec z = lo;
  while (true) {
    if (!f(static_cast<const IntVec&>(z))) return false;
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (z[k] < hi[k]) {
        ++z[k];
        break;
      }
      z[k] = lo[k];
      if (k == 0) return true;
    }
    if (n == 0) return true;
  }
}

}  // namespace dcdecomp
