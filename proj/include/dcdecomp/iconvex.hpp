#pragma once

// Integral convexity and box-integrality tests, characteristic cones and
// their {-1,0,+1} generators, and the decompositions P = Q + C (polyhedra)
// and S = T + G (integrally convex sets).

#include <algorithm>
#include <optional>
#include <vector>

#include "dcdecomp/lattice.hpp"

namespace dcdecomp {

/// Offending unit cell [cell, cell+1]^n and a point of it.
struct CellWitness {
  IntVec cell;
  Point point;
};

/// Outcome of the integral-convexity test. On failure `witness.point` is a
/// vertex x of conv(S) ∩ B_cell with x not in conv(S ∩ N(x)); `candidates`
/// lists every such vertex of the offending cell in lexicographic order.
struct IcVerdict {
  bool holds = true;
  std::optional<CellWitness> witness;
  std::vector<Point> candidates;

  explicit operator bool() const { return holds; }
};

struct BoxIntegerVerdict {
  bool holds = true;
  std::optional<CellWitness> witness;  // lexicographically smallest fractional vertex

  explicit operator bool() const { return holds; }
};

namespace detail {

inline bool has_fraction(const Point& p) { return !is_integral(p); }

// Preferred witness: first fractional vertex, else first vertex.
inline const Point& pick_witness(const std::vector<Point>& sorted) {
  for (const auto& p : sorted)
    if (has_fraction(p)) return p;
  return sorted.front();
}

}  // namespace detail

/// Cell-wise test: S is integrally convex iff conv(S) ∩ B_z = conv(S ∩ B_z)
/// for every unit cell B_z. Cells are visited in lexicographic order, so the
/// reported cell is the smallest offending one.
inline IcVerdict is_integrally_convex(const LatticeSet& S, const Limits& lim = {}) {
  if (S.empty()) throw Error(ErrorCode::EmptySet, "integral convexity of an empty set");
  const std::size_t n = S.dim();
  check_dim_cap(n, lim);
  IcVerdict verdict;
  HPolyhedron hull = hull_hrep(S, lim);
  IntegralBox bb = bounding_box(S);
  IntVec hi = bb.upper;
  for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(bb.lower[i], bb.upper[i] - 1);

  for_each_integer_point(bb.lower, hi, [&](const IntVec& z) {
    IntegralBox cell = unit_cell(z);
    auto K = detail::vertex_enumeration(intersect(hull, cell.to_hrep()), lim);
    if (!K) return true;
    LatticeSet local = restrict_to(S, cell);
    std::vector<Point> offending;
    if (local.empty()) {
      offending = K->vertices;
    } else if (std::all_of(K->vertices.begin(), K->vertices.end(), [](const Point& v) { return is_integral(v); })) {
      // An integral vertex is a cube corner: inside conv(S ∩ B_z) iff in S.
      for (const auto& v : K->vertices)
        if (!local.contains(to_intvec(v))) offending.push_back(v);
    } else {
      HPolyhedron local_hull = hull_hrep(local, lim);
      for (const auto& v : K->vertices)
        if (!contains_point(local_hull, v)) offending.push_back(v);
    }
    if (offending.empty()) return true;
    verdict.holds = false;
    verdict.witness = CellWitness{z, detail::pick_witness(offending)};
    verdict.candidates = std::move(offending);
    return false;
  });
  return verdict;
}

/// P ∩ B_z is an integer polyhedron for every unit cell B_z of w. Along a
/// coordinate where w is flat the cell is flat too.
inline BoxIntegerVerdict is_box_integer_within(const HPolyhedron& P, const Window& w, const Limits& lim = {}) {
  const std::size_t n = P.dim();
  check_dim_cap(n, lim);
  if (w.dim() != n) throw Error(ErrorCode::DimensionMismatch, "window dimension differs from polyhedron");
  BoxIntegerVerdict verdict;
  IntVec hi = w.upper;
  for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(w.lower[i], w.upper[i] - 1);
  for_each_integer_point(w.lower, hi, [&](const IntVec& z) {
    IntVec top(n);
    for (std::size_t i = 0; i < n; ++i) top[i] = std::min(z[i] + 1, w.upper[i]);
    auto K = detail::vertex_enumeration(intersect(P, IntegralBox(z, top).to_hrep()), lim);
    if (!K) return true;
    for (const auto& v : K->vertices)
      if (!is_integral(v)) {
        verdict.holds = false;
        verdict.witness = CellWitness{z, v};
        return false;
      }
    return true;
  });
  return verdict;
}

/// { d | A d <= 0 }: same normals, zero offsets, equalities kept.
inline HPolyhedron char_cone(const HPolyhedron& P) {
  if (is_empty(P)) throw Error(ErrorCode::EmptyPolyhedron, "characteristic cone of an empty polyhedron");
  HPolyhedron C(P.dim());
  for (const auto& h : P.rows()) C.add_row({h.a, Rational(0), h.rel});
  return C;
}

/// All nonzero v in {-1,0,+1}^n lying in C, thinned to a minimal generating
/// subset. Throws NotUnitGenerated when these vectors do not generate C,
/// which cannot happen for the characteristic cone of a box-integer
/// polyhedron.
inline std::vector<IntVec> cone_unit_generators(const HPolyhedron& C, const Limits& lim = {}) {
  const std::size_t n = C.dim();
  check_dim_cap(n, lim);
  for (const auto& h : C.rows())
    if (h.b != 0) throw Error(ErrorCode::InvalidInput, "cone rows must have zero right-hand side");
  std::vector<IntVec> cand;
  for_each_integer_point(IntVec(n, -1), IntVec(n, 1), [&](const IntVec& v) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; }) && contains_point(C, to_point(v))) cand.push_back(v);
    return true;
  });
  // Drop a candidate if the remaining ones already generate it.
  for (std::size_t i = 0; i < cand.size();) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(to_point(cand[j]));
    if (!others.empty() && in_generated_hull(to_point(cand[i]), {}, others))
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (!polyhedra_equal(generated_cone(n, cand, lim), C))
    throw Error(ErrorCode::NotUnitGenerated, "cone is not generated by its {-1,0,+1}-vectors");
  return cand;
}

struct PolyhedronDecomposition {
  HPolyhedron Q;        // P ∩ box, bounded
  HPolyhedron C;        // characteristic cone of P
  IntegralBox box;      // vertex bounding box of P
};

inline void check_recomposition(const HPolyhedron& P, const HPolyhedron& Q, const HPolyhedron& C, const Limits& lim) {
  VPolyhedron sum = minkowski_sum_polyhedra(to_vrep(Q, lim), to_vrep(C, lim));
  if (!polyhedra_equal(to_hrep(sum, lim), P))
    throw Error(ErrorCode::RecompositionFailure, "Q + C differs from P");
}

/// P = Q + C with C = char.cone P and Q = P ∩ B, B the integral bounding box
/// of P's vertices. The identity is re-checked on V-representations.
inline PolyhedronDecomposition decompose_polyhedron(const HPolyhedron& P, const Limits& lim = {}) {
  auto V = detail::vertex_enumeration(P, lim);
  if (!V) throw Error(ErrorCode::EmptyPolyhedron, "decomposition of an empty polyhedron");
  IntegralBox box = bounding_box(*V);
  PolyhedronDecomposition d{intersect(P, box.to_hrep()), char_cone(P), box};
  check_recomposition(P, d.Q, d.C, lim);
  return d;
}

struct SetDecomposition {
  GeneratedSet tg;      // T and the {-1,0,+1} generators of G = C ∩ Z^n
  HPolyhedron C;        // characteristic cone of P
  IntegralBox box;      // [l - L, u + L]
  Window window;        // window the identity was checked on
  bool verified = false;
};

/// Vertex bounding box inflated by L + 2, L the number of unit generators.
inline Window default_verification_window(const HPolyhedron& P, std::size_t generators, const Limits& lim = {}) {
  return bounding_box(to_vrep(P, lim)).inflated(static_cast<std::int64_t>(generators) + 2);
}

/// S = T + G for S = P ∩ Z^n: generators D of char.cone P, L = |D|,
/// T = S ∩ [l - L, u + L] with [l, u] the vertex bounding box. The identity
/// truncate(T + G, w) = S ∩ w is checked on `window` (default: bounding box
/// inflated by L + 2).
inline SetDecomposition decompose_set(const HPolyhedron& P, const std::optional<Window>& window = std::nullopt, const Limits& lim = {}) {
  auto V = detail::vertex_enumeration(P, lim);
  if (!V) throw Error(ErrorCode::EmptyPolyhedron, "decomposition of an empty polyhedron");
  SetDecomposition d;
  d.C = char_cone(P);
  auto gens = cone_unit_generators(d.C, lim);
  const auto L = static_cast<std::int64_t>(gens.size());
  d.box = bounding_box(*V).inflated(L);
  d.tg.base = integer_points(P, d.box, lim);
  d.tg.generators = std::move(gens);
  d.window = window ? *window : bounding_box(*V).inflated(L + 2);
  d.verified = truncate(d.tg, d.window, lim) == integer_points(P, d.window, lim);
  return d;
}

/// Finite set: conic iff it is {0}.
inline bool is_conic(const LatticeSet& S) {
  return S.size() == 1 && std::all_of(S.begin()->begin(), S.begin()->end(), [](std::int64_t c) { return c == 0; });
}

/// conv(base) + cone(generators) is a cone (with apex at the origin).
inline bool is_conic(const GeneratedSet& G, const Limits& lim = {}) {
  if (G.base.empty()) return false;
  std::vector<Point> rays;
  for (const auto& g : G.generators) rays.push_back(to_point(g));
  HPolyhedron hull = to_hrep(hull_of(G.dim(), G.base.as_points(), rays), lim);
  if (!contains_point(hull, Point(G.dim(), Rational(0)))) return false;
  return polyhedra_equal(hull, char_cone(hull));
}

struct DecompositionCheck {
  bool truncation_matches = false;
  bool base_integrally_convex = false;
  bool generators_conic = false;
  bool cone_box_integer = false;

  bool all() const { return truncation_matches && base_integrally_convex && generators_conic && cone_box_integer; }
};

/// Re-verifies S = T + G inside w together with the side conditions: T
/// integrally convex, G conic, cone(G) box-integer within w.
inline DecompositionCheck verify_decomposition(const HPolyhedron& P, const GeneratedSet& TG, const Window& w, const Limits& lim = {}) {
  DecompositionCheck c;
  c.truncation_matches = truncate(TG, w, lim) == integer_points(P, w, lim);
  c.base_integrally_convex = !TG.base.empty() && is_integrally_convex(TG.base, lim).holds;
  GeneratedSet G{LatticeSet(TG.dim(), {IntVec(TG.dim(), 0)}), TG.generators};
  c.generators_conic = is_conic(G, lim);
  c.cone_box_integer = is_box_integer_within(generated_cone(TG.dim(), TG.generators, lim), w, lim).holds;
  return c;
}

}  // namespace dcdecomp
