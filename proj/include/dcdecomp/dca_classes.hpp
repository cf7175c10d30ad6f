#pragma once

// L♮/M♮-type representations (difference-bound systems and paramodular
// pairs), set-level membership tests, and class-preserving decompositions.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dcdecomp/iconvex.hpp"

namespace dcdecomp {

enum class ClassTag { Lnat, L, Lnat2, Mnat, M, Mnat2 };

inline const char* to_string(ClassTag t) {
  switch (t) {
    case ClassTag::Lnat: return "lnat";
    case ClassTag::L: return "l";
    case ClassTag::Lnat2: return "lnat2";
    case ClassTag::Mnat: return "mnat";
    case ClassTag::M: return "m";
    case ClassTag::Mnat2: return "mnat2";
  }
  return "?";
}

inline ClassTag parse_class_tag(const std::string& s) {
  for (ClassTag t : {ClassTag::Lnat, ClassTag::L, ClassTag::Lnat2, ClassTag::Mnat, ClassTag::M, ClassTag::Mnat2})
    if (s == to_string(t)) return t;
  throw Error(ErrorCode::UnsupportedTag, "unknown class tag '" + s + "'");
}

/// l_i <= x_i (i in I), x_j <= u_j (j in J), x_j - x_i <= d_ij ((i,j) in E).
/// Indices are 0-based; a missing entry is an infinite bound.
struct LNatSystem {
  std::size_t dim = 0;
  std::map<std::size_t, std::int64_t> lower;
  std::map<std::size_t, std::int64_t> upper;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> edges;

  void validate() const {
    if (dim == 0) throw Error(ErrorCode::InvalidInput, "system dimension must be positive");
    for (const auto& m : {lower, upper})
      for (const auto& [i, v] : m)
        if (i >= dim) throw Error(ErrorCode::InvalidInput, "bound index out of range");
    for (const auto& [e, d] : edges) {
      if (e.first >= dim || e.second >= dim) throw Error(ErrorCode::InvalidInput, "edge index out of range");
      if (e.first == e.second) throw Error(ErrorCode::InvalidInput, "edge is a self-loop");
    }
  }
  bool operator==(const LNatSystem&) const = default;
};

/// mu(X) <= x(X) <= rho(X), subsets X given as bitmasks. A missing rho entry
/// is +inf, a missing mu entry -inf, except that the empty set reads as 0.
struct ParamodularPair {
  std::size_t dim = 0;
  std::map<std::uint32_t, std::int64_t> rho;
  std::map<std::uint32_t, std::int64_t> mu;

  std::optional<std::int64_t> rho_at(std::uint32_t X) const {
    if (auto it = rho.find(X); it != rho.end()) return it->second;
    if (X == 0) return 0;
    return std::nullopt;
  }
  std::optional<std::int64_t> mu_at(std::uint32_t X) const {
    if (auto it = mu.find(X); it != mu.end()) return it->second;
    if (X == 0) return 0;
    return std::nullopt;
  }
  std::uint32_t full() const { return dim >= 32 ? ~0u : (1u << dim) - 1u; }
  bool operator==(const ParamodularPair&) const = default;
};

using LNatPair = std::array<LNatSystem, 2>;    // Minkowski summands
using MNatPair = std::array<ParamodularPair, 2>;  // intersected pieces

using ClassRep = std::variant<LNatSystem, ParamodularPair, LNatPair, MNatPair>;

inline HPolyhedron lnat_to_hrep(const LNatSystem& sys) {
  sys.validate();
  HPolyhedron P(sys.dim);
  auto unit = [&](std::size_t i, long s) {
    Point a(sys.dim, Rational(0));
    a[i] = s;
    return a;
  };
  for (const auto& [i, l] : sys.lower) P.add_le(unit(i, -1), Rational(-l));
  for (const auto& [j, u] : sys.upper) P.add_le(unit(j, 1), Rational(u));
  for (const auto& [e, d] : sys.edges) {
    Point a(sys.dim, Rational(0));
    a[e.second] = 1;
    a[e.first] = -1;
    P.add_le(a, Rational(d));
  }
  return P;
}

inline void check_mnat_cap(std::size_t n, const Limits& lim) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "pair dimension must be positive");
  if (n > lim.mnat_cap)
    throw Error(ErrorCode::DimensionCapExceeded,
                "set-function dimension " + std::to_string(n) + " exceeds cap " + std::to_string(lim.mnat_cap));
}

inline HPolyhedron mnat_to_hrep(const ParamodularPair& pair, const Limits& lim = {}) {
  check_mnat_cap(pair.dim, lim);
  auto indicator = [&](std::uint32_t X) {
    Point a(pair.dim, Rational(0));
    for (std::size_t i = 0; i < pair.dim; ++i)
      if (X >> i & 1u) a[i] = 1;
    return a;
  };
  for (const auto& m : {pair.rho, pair.mu})
    for (const auto& [X, v] : m)
      if (X > pair.full()) throw Error(ErrorCode::InvalidInput, "subset mask out of range");
  HPolyhedron P(pair.dim);
  for (const auto& [X, r] : pair.rho) P.add_le(indicator(X), Rational(r));
  for (const auto& [X, m] : pair.mu) P.add_ge(indicator(X), Rational(m));
  return P;
}

/// Normalization, submodularity of rho, supermodularity of mu and the cross
/// inequality rho(X) - mu(Y) >= rho(X \ Y) - mu(Y \ X), over all pairs of
/// subsets where the left-hand side is finite.
inline bool is_paramodular(const ParamodularPair& pair, const Limits& lim = {}) {
  check_mnat_cap(pair.dim, lim);
  if (pair.rho_at(0) != 0 || pair.mu_at(0) != 0) return false;
  const std::uint32_t N = pair.full();
  for (std::uint32_t X = 0; X <= N; ++X)
    for (std::uint32_t Y = 0; Y <= N; ++Y) {
      auto rx = pair.rho_at(X), ry = pair.rho_at(Y);
      if (rx && ry) {
        auto ru = pair.rho_at(X | Y), ri = pair.rho_at(X & Y);
        if (!ru || !ri || *rx + *ry < *ru + *ri) return false;
      }
      auto mx = pair.mu_at(X), my = pair.mu_at(Y);
      if (mx && my) {
        auto mu_u = pair.mu_at(X | Y), mu_i = pair.mu_at(X & Y);
        if (!mu_u || !mu_i || *mx + *my > *mu_u + *mu_i) return false;
      }
      if (rx && my) {
        auto r = pair.rho_at(X & ~Y), m = pair.mu_at(Y & ~X);
        if (!r || !m || *rx - *my < *r - *m) return false;
      }
    }
  return true;
}

namespace detail {

inline std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
inline std::int64_t ceil_half(std::int64_t v) { return -floor_half(-v); }

}  // namespace detail

/// Discrete midpoint convexity: p, q in S imply ceil((p+q)/2) and
/// floor((p+q)/2) in S.
inline bool is_lnat_set(const LatticeSet& S) {
  const std::size_t n = S.dim();
  IntVec up(n), down(n);
  for (auto p = S.begin(); p != S.end(); ++p)
    for (auto q = std::next(p); q != S.end(); ++q) {
      for (std::size_t i = 0; i < n; ++i) {
        up[i] = detail::ceil_half((*p)[i] + (*q)[i]);
        down[i] = detail::floor_half((*p)[i] + (*q)[i]);
      }
      if (!S.contains(up) || !S.contains(down)) return false;
    }
  return true;
}

/// Exchange axiom: for p, q in S and p_i > q_i, either p - e_i and q + e_i
/// are in S, or some j with p_j < q_j has p - e_i + e_j and q + e_i - e_j in S.
inline bool is_mnat_set(const LatticeSet& S) {
  const std::size_t n = S.dim();
  for (const auto& p : S)
    for (const auto& q : S)
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] <= q[i]) continue;
        IntVec a = p, b = q;
        --a[i];
        ++b[i];
        if (S.contains(a) && S.contains(b)) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (p[j] >= q[j]) continue;
          ++a[j];
          --b[j];
          found = S.contains(a) && S.contains(b);
          --a[j];
          ++b[j];
        }
        if (!found) return false;
      }
  return true;
}

/// M♮ with constant coordinate sum.
inline bool is_m_set(const LatticeSet& S) {
  if (!is_mnat_set(S)) return false;
  if (S.empty()) return true;
  auto total = [](const IntVec& v) {
    std::int64_t s = 0;
    for (auto c : v) s += c;
    return s;
  };
  const std::int64_t s0 = total(*S.begin());
  for (const auto& p : S)
    if (total(p) != s0) return false;
  return true;
}

inline constexpr std::size_t kLnat2SearchCap = 20;

/// Is S = S1 + S2 for L♮ sets S1, S2? Exhaustive search, for small S.
/// Translating so that the lexicographic minimum of S2 is 0 forces S1 to be
/// a subset of S through min(S) and S2 a subset of S - min(S) through 0.
inline bool is_lnat2_set(const LatticeSet& S) {
  if (S.empty()) return true;
  if (S.size() > kLnat2SearchCap)
    throw Error(ErrorCode::InvalidInput, "L♮2 recognition is limited to " + std::to_string(kLnat2SearchCap) + " points");
  if (is_lnat_set(S)) return true;
  const std::size_t n = S.dim();
  const std::vector<IntVec> pts(S.begin(), S.end());
  const IntVec m = pts.front();
  const std::size_t k = pts.size();
  auto shifted = [&](const IntVec& a, const IntVec& b, long sign) {
    IntVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + sign * b[i];
    return r;
  };
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    LatticeSet S1(n, {m});
    for (std::size_t i = 1; i < k; ++i)
      if (mask >> (i - 1) & 1u) S1.insert(pts[i]);
    if (!is_lnat_set(S1)) continue;
    // Translates y with S1 + y inside S; S2 must be drawn from them.
    std::vector<IntVec> room;
    for (const auto& p : pts) {
      IntVec y = shifted(p, m, -1);
      bool fits = true;
      for (const auto& s : S1)
        if (!S.contains(shifted(s, y, 1))) {
          fits = false;
          break;
        }
      if (fits) room.push_back(y);
    }
    if (minkowski_sum_sets(S1, LatticeSet(n, room)) != S) continue;
    // room.front() is the origin (p = m).
    const std::size_t r = room.size();
    for (std::uint32_t sub = 0; sub < (1u << (r - 1)); ++sub) {
      LatticeSet S2(n, {room.front()});
      for (std::size_t i = 1; i < r; ++i)
        if (sub >> (i - 1) & 1u) S2.insert(room[i]);
      if (is_lnat_set(S2) && minkowski_sum_sets(S1, S2) == S) return true;
    }
  }
  return false;
}

namespace detail {

inline void check_tag(const ClassRep& rep, ClassTag tag) {
  bool ok = false;
  switch (tag) {
    case ClassTag::Lnat:
    case ClassTag::L: ok = std::holds_alternative<LNatSystem>(rep); break;
    case ClassTag::Lnat2: ok = std::holds_alternative<LNatPair>(rep); break;
    case ClassTag::Mnat:
    case ClassTag::M: ok = std::holds_alternative<ParamodularPair>(rep); break;
    case ClassTag::Mnat2: ok = std::holds_alternative<MNatPair>(rep); break;
  }
  if (!ok) throw Error(ErrorCode::InvalidInput, std::string("representation does not match tag ") + to_string(tag));
  if (tag == ClassTag::M) {
    const auto& p = std::get<ParamodularPair>(rep);
    auto r = p.rho_at(p.full()), m = p.mu_at(p.full());
    if (!r || !m || *r != *m) throw Error(ErrorCode::InvalidInput, "M-convex pair needs rho(V) = mu(V) finite");
  }
  if (tag == ClassTag::L) {
    const auto& s = std::get<LNatSystem>(rep);
    if (!s.lower.empty() || !s.upper.empty()) throw Error(ErrorCode::InvalidInput, "L-convex system has no coordinate bounds");
  }
}

inline std::size_t rep_dim(const ClassRep& rep) {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, LNatPair> || std::is_same_v<T, MNatPair>)
          return r[0].dim;
        else
          return r.dim;
      },
      rep);
}

inline HPolyhedron summed(const HPolyhedron& a, const HPolyhedron& b, const Limits& lim) {
  return to_hrep(minkowski_sum_polyhedra(to_vrep(a, lim), to_vrep(b, lim)), lim);
}

}  // namespace detail

/// H-representation of the polyhedron a class representation describes.
inline HPolyhedron class_to_hrep(const ClassRep& rep, const Limits& lim = {}) {
  if (const auto* s = std::get_if<LNatSystem>(&rep)) return lnat_to_hrep(*s);
  if (const auto* p = std::get_if<ParamodularPair>(&rep)) return mnat_to_hrep(*p, lim);
  if (const auto* s = std::get_if<LNatPair>(&rep)) {
    if ((*s)[0].dim != (*s)[1].dim) throw Error(ErrorCode::DimensionMismatch, "summands differ in dimension");
    return detail::summed(lnat_to_hrep((*s)[0]), lnat_to_hrep((*s)[1]), lim);
  }
  const auto& p = std::get<MNatPair>(rep);
  if (p[0].dim != p[1].dim) throw Error(ErrorCode::DimensionMismatch, "pieces differ in dimension");
  return intersect(mnat_to_hrep(p[0], lim), mnat_to_hrep(p[1], lim));
}

inline LNatSystem char_cone_class(const LNatSystem& sys) {
  sys.validate();
  LNatSystem c = sys;
  for (auto& [i, v] : c.lower) v = 0;
  for (auto& [i, v] : c.upper) v = 0;
  for (auto& [e, v] : c.edges) v = 0;
  return c;
}

inline ParamodularPair char_cone_class(const ParamodularPair& pair) {
  ParamodularPair c = pair;
  for (auto& [X, v] : c.rho) v = 0;
  for (auto& [X, v] : c.mu) v = 0;
  return c;
}

inline ClassRep char_cone_class(const ClassRep& rep) {
  return std::visit(
      [](const auto& r) -> ClassRep {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, LNatPair>)
          return LNatPair{char_cone_class(r[0]), char_cone_class(r[1])};
        else if constexpr (std::is_same_v<T, MNatPair>)
          return MNatPair{char_cone_class(r[0]), char_cone_class(r[1])};
        else
          return char_cone_class(r);
      },
      rep);
}

/// The system of P ∩ box: coordinate bounds tightened to the box.
inline LNatSystem intersect_box(LNatSystem sys, const IntegralBox& box) {
  if (box.dim() != sys.dim) throw Error(ErrorCode::DimensionMismatch, "box dimension differs from system");
  for (std::size_t i = 0; i < sys.dim; ++i) {
    auto lo = sys.lower.find(i);
    sys.lower[i] = lo == sys.lower.end() ? box.lower[i] : std::max(lo->second, box.lower[i]);
    auto hi = sys.upper.find(i);
    sys.upper[i] = hi == sys.upper.end() ? box.upper[i] : std::min(hi->second, box.upper[i]);
  }
  return sys;
}

/// Is the finite set in the class named by `tag`? L♮2 uses the exhaustive
/// summand search. M♮2 needs the two M♮ pieces and is not decided here.
inline bool in_class(const LatticeSet& S, ClassTag tag) {
  switch (tag) {
    case ClassTag::Lnat: return is_lnat_set(S);
    case ClassTag::Lnat2: return is_lnat2_set(S);
    case ClassTag::Mnat: return is_mnat_set(S);
    case ClassTag::M: return is_m_set(S);
    case ClassTag::Mnat2: throw Error(ErrorCode::UnsupportedTag, "M♮2 membership is checked on its two M♮ pieces");
    case ClassTag::L: break;
  }
  throw Error(ErrorCode::UnsupportedTag, "no finite nonempty set is L-convex");
}

struct ClassPolyDecomposition {
  ClassTag tag;
  HPolyhedron Q;
  HPolyhedron C;
  std::optional<ClassRep> q_rep;  // Q in the input representation, when one is produced
  ClassRep c_rep;                 // char_cone_class of the input
};

/// P = Q + C within the class. L♮, M♮, M, M♮2: Q = P ∩ B with B the vertex
/// bounding box. L♮2: per summand, Q = Q1 + Q2 and C = C1 + C2. Q's integer
/// points are re-checked for class membership.
inline ClassPolyDecomposition decompose_class_polyhedron(const ClassRep& rep, ClassTag tag, const Limits& lim = {}) {
  if (tag == ClassTag::L) throw Error(ErrorCode::UnsupportedTag, "L-convex polyhedra contain lines and have no bounded part");
  detail::check_tag(rep, tag);
  check_dim_cap(detail::rep_dim(rep), lim);
  ClassPolyDecomposition out{tag, HPolyhedron(), HPolyhedron(), std::nullopt, char_cone_class(rep)};
  const HPolyhedron P = class_to_hrep(rep, lim);

  if (tag == ClassTag::Lnat2) {
    const auto& pair = std::get<LNatPair>(rep);
    LNatPair q;
    HPolyhedron Qh[2], Ch[2];
    for (int k = 0; k < 2; ++k) {
      HPolyhedron Pk = lnat_to_hrep(pair[k]);
      auto d = decompose_polyhedron(Pk, lim);
      q[k] = intersect_box(pair[k], d.box);
      Qh[k] = lnat_to_hrep(q[k]);
      Ch[k] = d.C;
      LatticeSet Tk = integer_points(Qh[k], std::nullopt, lim);
      if (!is_lnat_set(Tk)) throw Error(ErrorCode::ClassVerificationFailure, "summand part is not L♮-convex");
    }
    out.Q = detail::summed(Qh[0], Qh[1], lim);
    out.C = detail::summed(Ch[0], Ch[1], lim);
    out.q_rep = q;
    check_recomposition(P, out.Q, out.C, lim);
    return out;
  }

  auto d = decompose_polyhedron(P, lim);
  out.Q = d.Q;
  out.C = d.C;
  if (tag == ClassTag::Lnat) out.q_rep = intersect_box(std::get<LNatSystem>(rep), d.box);
  LatticeSet T = integer_points(out.Q, std::nullopt, lim);
  bool member = T.empty();
  if (!member) {
    if (tag == ClassTag::Mnat2) {
      const auto& pieces = std::get<MNatPair>(rep);
      member = true;
      for (const auto& piece : pieces)
        member = member && is_mnat_set(integer_points(intersect(mnat_to_hrep(piece, lim), d.box.to_hrep()), std::nullopt, lim));
    } else {
      member = in_class(T, tag);
    }
  }
  if (!member) throw Error(ErrorCode::ClassVerificationFailure, std::string("bounded part is not ") + to_string(tag) + "-convex");
  return out;
}

struct ClassSetDecomposition {
  ClassTag tag;
  GeneratedSet tg;
  Window window;
  bool verified = false;  // truncation identity on `window`
};

/// S = T + G within the class, S the integer points of the represented
/// polyhedron. L♮2 is handled per summand: T = T1 + T2 with generators of
/// G1 and G2 together. Throws ClassVerificationFailure when T fails its
/// membership test and RecompositionFailure when the identity fails on the
/// window.
inline ClassSetDecomposition decompose_class_set(const ClassRep& rep, ClassTag tag,
                                                 const std::optional<Window>& window = std::nullopt, const Limits& lim = {}) {
  if (tag == ClassTag::L) throw Error(ErrorCode::UnsupportedTag, "L-convex sets are unbounded along (1,...,1) and have no bounded part");
  detail::check_tag(rep, tag);
  check_dim_cap(detail::rep_dim(rep), lim);
  const HPolyhedron P = class_to_hrep(rep, lim);
  ClassSetDecomposition out{tag, {}, {}, false};

  if (tag == ClassTag::Lnat2) {
    const auto& pair = std::get<LNatPair>(rep);
    SetDecomposition parts[2];
    for (int k = 0; k < 2; ++k) {
      parts[k] = decompose_set(lnat_to_hrep(pair[k]), std::nullopt, lim);
      if (!is_lnat_set(parts[k].tg.base)) throw Error(ErrorCode::ClassVerificationFailure, "summand part is not L♮-convex");
    }
    out.tg.base = minkowski_sum_sets(parts[0].tg.base, parts[1].tg.base);
    out.tg.generators = parts[0].tg.generators;
    for (const auto& g : parts[1].tg.generators)
      if (std::find(out.tg.generators.begin(), out.tg.generators.end(), g) == out.tg.generators.end())
        out.tg.generators.push_back(g);
    std::sort(out.tg.generators.begin(), out.tg.generators.end());
    const auto L = static_cast<std::int64_t>(out.tg.generators.size());
    out.window = window ? *window : bounding_box(to_vrep(P, lim)).inflated(L + 2);
  } else {
    auto d = decompose_set(P, window, lim);
    out.tg = std::move(d.tg);
    out.window = d.window;
    bool member;
    if (tag == ClassTag::Mnat2) {
      const auto& pieces = std::get<MNatPair>(rep);
      member = true;
      for (const auto& piece : pieces)
        member = member && is_mnat_set(integer_points(intersect(mnat_to_hrep(piece, lim), d.box.to_hrep()), std::nullopt, lim));
    } else {
      member = in_class(out.tg.base, tag);
    }
    if (!member) throw Error(ErrorCode::ClassVerificationFailure, std::string("bounded part is not ") + to_string(tag) + "-convex");
  }
  out.verified = truncate(out.tg, out.window, lim) == integer_points(P, out.window, lim);
  if (!out.verified) throw Error(ErrorCode::RecompositionFailure, "T + G differs from S on the verification window");
  return out;
}

struct BoxIntersection {
  HPolyhedron P;                 // represented polyhedron ∩ box
  LatticeSet points;             // its integer points
  std::optional<bool> in_class;  // no verdict for the L tag
};

/// Intersects the represented polyhedron with `box` and tests whether the
/// integer points stay in the class.
inline BoxIntersection box_intersect_class(const ClassRep& rep, const IntegralBox& box, ClassTag tag, const Limits& lim = {}) {
  detail::check_tag(rep, tag);
  BoxIntersection out;
  out.P = intersect(class_to_hrep(rep, lim), box.to_hrep());
  out.points = integer_points(out.P, box, lim);
  if (tag == ClassTag::L) return out;
  if (tag == ClassTag::Mnat2) {
    const auto& pieces = std::get<MNatPair>(rep);
    bool member = true;
    for (const auto& piece : pieces)
      member = member && is_mnat_set(integer_points(intersect(mnat_to_hrep(piece, lim), box.to_hrep()), box, lim));
    out.in_class = member;
  } else {
    out.in_class = in_class(out.points, tag);
  }
  return out;
}

}  // namespace dcdecomp
