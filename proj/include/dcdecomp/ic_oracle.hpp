#pragma once

// Sampling check of integral convexity straight from the pointwise
// definition: every sampled x in conv(S) must lie in conv(S ∩ N(x)).
// Samples are the points of the bounding box whose coordinates have
// denominators at most `max_den`.

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "dcdecomp/lattice.hpp"

namespace dcdecomp {

struct SamplingVerdict {
  bool holds = true;
  std::optional<Point> counterexample;  // lexicographically first failing sample
  std::size_t samples = 0;              // samples that fell inside conv(S)
};

namespace detail {

// Integer row a.x <= b (or =) in coordinates scaled by a common factor.
struct IntRow {
  std::vector<__int128> a;
  __int128 b;
  bool equality;
};

inline std::vector<IntRow> integer_rows(const HPolyhedron& P) {
  std::vector<IntRow> out;
  for (const auto& h : P.rows()) {
    Integer l = h.b.get_den();
    for (const auto& c : h.a) l = lcm(l, Integer(c.get_den()));
    IntRow r;
    for (const auto& c : h.a) r.a.push_back(static_cast<__int128>(to_int64(Integer(c * l))));
    r.b = static_cast<__int128>(to_int64(Integer(h.b * l)));
    r.equality = h.rel == Relation::Equal;
    out.push_back(std::move(r));
  }
  return out;
}

// x = t / scale.
inline bool satisfies(const std::vector<IntRow>& rows, const std::vector<std::int64_t>& t, std::int64_t scale) {
  for (const auto& r : rows) {
    __int128 v = 0;
    for (std::size_t i = 0; i < t.size(); ++i) v += r.a[i] * t[i];
    __int128 rhs = r.b * scale;
    if (r.equality ? v != rhs : v > rhs) return false;
  }
  return true;
}

}  // namespace detail

inline SamplingVerdict sample_integral_convexity(const LatticeSet& S, std::int64_t max_den = 4, const Limits& lim = {}) {
  if (S.empty()) throw Error(ErrorCode::EmptySet, "integral convexity of an empty set");
  if (max_den < 1) throw Error(ErrorCode::InvalidInput, "denominator bound must be positive");
  const std::size_t n = S.dim();
  check_dim_cap(n, lim);
  std::int64_t scale = 1;
  for (std::int64_t q = 2; q <= max_den; ++q) scale = std::lcm(scale, q);

  const auto hull = detail::integer_rows(hull_hrep(S, lim));
  const IntegralBox bb = bounding_box(S);

  // Scaled coordinate values t / scale with reduced denominator <= max_den.
  std::vector<std::vector<std::int64_t>> axis(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t t = bb.lower[i] * scale; t <= bb.upper[i] * scale; ++t)
      if (scale / std::gcd(t < 0 ? -t : t, scale) <= max_den) axis[i].push_back(t);

  std::map<std::vector<IntVec>, std::vector<detail::IntRow>> local_hulls;
  SamplingVerdict verdict;
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::int64_t> t(n);
  IntVec lo(n), hi(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) t[i] = axis[i][idx[i]];
    if (detail::satisfies(hull, t, scale)) {
      ++verdict.samples;
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = t[i] >= 0 ? t[i] / scale : -((-t[i] + scale - 1) / scale);
        hi[i] = lo[i] * scale == t[i] ? lo[i] : lo[i] + 1;
      }
      std::vector<IntVec> local;
      for (const auto& z : restrict_to(S, IntegralBox(lo, hi))) local.push_back(z);
      bool inside = false;
      if (!local.empty()) {
        auto it = local_hulls.find(local);
        if (it == local_hulls.end())
          it = local_hulls.emplace(local, detail::integer_rows(hull_hrep(LatticeSet(n, local), lim))).first;
        inside = detail::satisfies(it->second, t, scale);
      }
      if (!inside) {
        verdict.holds = false;
        Point x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = make_rational(t[i], scale);
        verdict.counterexample = x;
        return verdict;
      }
    }
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (++idx[k] < axis[k].size()) {
        advanced = true;
        break;
      }
      idx[k] = 0;
    }
    if (!advanced) return verdict;
  }
}

}  // namespace dcdecomp
