#pragma once

// Double description method for polyhedral cones { y | H y <= 0, E y = 0 }.
// Constraints are inserted in the given order; lineality is tracked as a
// separate basis so non-pointed cones need no special casing by callers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcdecomp/rational.hpp"

namespace dcdecomp::dd {

using ZVec = std::vector<Integer>;

struct ConeGenerators {
  std::vector<ZVec> lineality;
  std::vector<ZVec> rays;
};

inline Integer zdot(const ZVec& a, const ZVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline void make_primitive(ZVec& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) c /= g;
}

/// Integer row proportional to a rational row.
inline ZVec integer_row(const Point& row) { return primitive_integer(row); }

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { grow(i), w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(std::min(w_.size(), o.w_.size()));
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
      if (w_[i] & ~ow) return false;
    }
    return true;
  }

 private:
  void grow(std::size_t i) {
    if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
  }
  std::vector<std::uint64_t> w_;
};

struct Ray {
  ZVec v;
  Bits tight;
};

}  // namespace detail

/// Generators of { y in R^d | h.y <= 0 for h in ineqs, e.y = 0 for e in eqs }.
/// Equalities are processed first, then inequalities in order. Rays are
/// extreme modulo the lineality space and primitive.
inline ConeGenerators cone_generators(std::size_t d, const std::vector<ZVec>& ineqs, const std::vector<ZVec>& eqs) {
  std::vector<ZVec> lin;
  for (std::size_t i = 0; i < d; ++i) {
    ZVec e(d, Integer(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<detail::Ray> rays;

  // Makes every lineality vector and ray orthogonal to h, pivoting on the
  // first lineality vector not already orthogonal. Returns that pivot
  // (oriented so h.pivot < 0) or nothing.
  auto reduce_lineality = [&](const ZVec& h) -> std::optional<ZVec> {
    std::size_t k = 0;
    Integer hk;
    for (; k < lin.size(); ++k) {
      hk = zdot(h, lin[k]);
      if (hk != 0) break;
    }
    if (k == lin.size()) return std::nullopt;
    ZVec piv = lin[k];
    if (hk > 0) {
      for (auto& c : piv) c = -c;
      hk = -hk;
    }
    lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(k));
    auto orth = [&](ZVec& v) {
      Integer hv = zdot(h, v);
      if (hv == 0) return;
      // v' = (-hk) v + hv piv  has h.v' = -hk hv + hv hk = 0
      Integer a = -hk;
      for (std::size_t i = 0; i < d; ++i) v[i] = a * v[i] + hv * piv[i];
      make_primitive(v);
    };
    for (auto& l : lin) orth(l);
    for (auto& r : rays) orth(r.v);
    return piv;
  };

  std::size_t processed = 0;  // index into the tight-set bit space

  auto add_constraint = [&](const ZVec& h, bool equality) {
    const std::size_t bit = processed++;
    if (auto piv = reduce_lineality(h)) {
      // Existing rays are now orthogonal to h, hence tight.
      for (auto& r : rays) r.tight.set(bit);
      if (!equality) {
        // The pivot was orthogonal to every earlier constraint.
        detail::Ray nr{*piv, detail::Bits()};
        for (std::size_t b = 0; b < bit; ++b) nr.tight.set(b);
        make_primitive(nr.v);
        rays.push_back(std::move(nr));
      }
      return;
    }
    std::vector<std::size_t> pos, neg, zero;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = zdot(h, rays[i].v);
      int s = sgn(val[i]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    if (pos.empty() && (equality ? neg.empty() : true)) {
      for (auto i : zero) rays[i].tight.set(bit);
      return;
    }
    std::vector<detail::Ray> next;
    if (!equality)
      for (auto i : neg) next.push_back(rays[i]);
    for (auto i : zero) {
      next.push_back(rays[i]);
      next.back().tight.set(bit);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        detail::Bits common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        detail::Ray nr;
        nr.v.resize(d);
        const Integer& hp = val[p];
        Integer hq = -val[q];
        for (std::size_t i = 0; i < d; ++i) nr.v[i] = hp * rays[q].v[i] + hq * rays[p].v[i];
        make_primitive(nr.v);
        nr.tight = common;
        nr.tight.set(bit);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  };

  for (const auto& e : eqs)
    if (std::any_of(e.begin(), e.end(), [](const Integer& c) { return c != 0; })) add_constraint(e, true);
  for (const auto& h : ineqs)
    if (std::any_of(h.begin(), h.end(), [](const Integer& c) { return c != 0; })) add_constraint(h, false);

  ConeGenerators out;
  for (auto& l : lin) {
    make_primitive(l);
    out.lineality.push_back(std::move(l));
  }
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace dcdecomp::dd
