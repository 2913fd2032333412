#pragma once

// Brute-force references written straight from the definitions. They use
// only the raw tables of a structure, never the library's derived
// operations, so agreement with the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "etale/category.hpp"
#include "etale/crm.hpp"
#include "etale/order.hpp"
#include "etale/quantale.hpp"

namespace oracle {

using etale::Elem;
using etale::Subset;

inline Subset from_mask(std::size_t n, std::uint64_t mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) s.set(i);
  return s;
}

/// Closes a family under pairwise intersection, so its union closure is a
/// topology.
inline std::vector<Subset> intersection_closed(std::vector<Subset> base) {
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subset m = base[i] & base[j];
      if (std::find(base.begin(), base.end(), m) == base.end()) base.push_back(m);
    }
  return base;
}

/// Proper, non-empty, upward closed, meet closed and prime for binary
/// joins (enough for completely prime in a finite lattice).
inline bool is_cp_filter(const etale::FiniteLattice& f, const std::vector<int>& in) {
  const auto n = f.size();
  bool any = false;
  for (Elem a = 0; a < n; ++a) any = any || in[a] == 1;
  if (!any) return false;
  for (Elem a = 0; a < n; ++a) {
    if (in[a] != 1) continue;
    bool above_all = true;  // a is the least element
    for (Elem b = 0; b < n; ++b) above_all = above_all && f.leq(a, b);
    if (above_all) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (in[a] == 1 && f.leq(a, b) && in[b] != 1) return false;
      if (in[a] == 1 && in[b] == 1 && in[f.meet(a, b)] != 1) return false;
      if (in[f.join(a, b)] == 1 && in[a] != 1 && in[b] != 1) return false;
    }
  return true;
}

/// Every completely prime filter as a member set, sorted. Decides the
/// elements in index order and abandons a branch once a pair of decided
/// elements already breaks a defining property.
inline std::vector<Subset> cp_filters(const etale::FiniteLattice& f) {
  const auto n = f.size();
  std::vector<int> in(n, -1);
  std::vector<Subset> out;
  auto violated = [&](Elem x) {
    for (Elem y = 0; y < n; ++y) {
      if (in[y] < 0) continue;
      for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        if (in[a] == 1 && f.leq(a, b) && in[b] == 0) return true;
        const Elem m = f.meet(a, b), j = f.join(a, b);
        if (in[a] == 1 && in[b] == 1 && in[m] == 0) return true;
        if (in[j] == 1 && in[a] == 0 && in[b] == 0) return true;
      }
    }
    return false;
  };
  auto search = [&](auto&& self, Elem x) -> void {
    if (x == n) {
      if (is_cp_filter(f, in)) {
        Subset s(n);
        for (Elem a = 0; a < n; ++a)
          if (in[a] == 1) s.set(a);
        out.push_back(s);
      }
      return;
    }
    for (int v : {0, 1}) {
      in[x] = v;
      if (!violated(x)) self(self, x + 1);
    }
    in[x] = -1;
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// d and r are injective on `a`.
inline bool is_local_bisection(const etale::FiniteCategory& c, const Subset& a) {
  for (Elem x = 0; x < c.size(); ++x)
    for (Elem y = x + 1; y < c.size(); ++y)
      if (a.test(x) && a.test(y) && (c.d(x) == c.d(y) || c.r(x) == c.r(y))) return false;
  return true;
}

/// a such that every b ≤ a has b = b⁺a = ab*.
inline Subset partial_isometries(const etale::EhresmannQuantalFrame& q) {
  const auto n = q.size();
  Subset out(n);
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b)
      if (q.leq(b, a)) ok = q.mul(q.plus(b), a) == b && q.mul(a, q.star(b)) == b;
    if (ok) out.set(a);
  }
  return out;
}

/// Partial injections of an n-set: Σ_k C(n,k)² k!.
inline std::size_t partial_injections(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t choose = 1, fact = 1;
    for (std::size_t i = 0; i < k; ++i) {
      choose = choose * (n - i) / (i + 1);
      fact *= i + 1;
    }
    total += choose * choose * fact;
  }
  return total;
}

inline bool compatible(const etale::EhresmannQuantalFrame& q, Elem a, Elem b) {
  return q.mul(a, q.star(b)) == q.mul(b, q.star(a)) && q.mul(q.plus(b), a) == q.mul(q.plus(a), b);
}

inline bool compatible(const etale::CompleteRestrictionMonoid& s, Elem a, Elem b) {
  return s.mul(a, s.star(b)) == s.mul(b, s.star(a)) && s.mul(s.plus(b), a) == s.mul(s.plus(a), b);
}

/// Least upper bound in the stored order, or kNone.
inline Elem lub(const etale::CompleteRestrictionMonoid& s, const Subset& x) {
  const auto n = s.size();
  Elem best = etale::kNone;
  for (Elem u = 0; u < n; ++u) {
    bool upper = true;
    for (Elem a = 0; a < n; ++a) upper = upper && (!x.test(a) || s.leq(a, u));
    if (!upper) continue;
    if (best == etale::kNone || s.leq(u, best)) best = u;
  }
  if (best == etale::kNone) return best;
  for (Elem u = 0; u < n; ++u) {
    bool upper = true;
    for (Elem a = 0; a < n; ++a) upper = upper && (!x.test(a) || s.leq(a, u));
    if (upper && !s.leq(best, u)) return etale::kNone;
  }
  return best;
}

/// Every pairwise compatible subset, as masks. Requires size ≤ 20.
inline std::vector<Subset> compatible_subsets(const etale::CompleteRestrictionMonoid& s) {
  const auto n = s.size();
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1)) ok = oracle::compatible(s, a, b);
    if (ok) out.push_back(from_mask(n, mask));
  }
  return out;
}

/// Down-closed sets containing the join of each compatible subset of
/// theirs. Requires size ≤ 16.
inline std::vector<Subset> join_closed_ideals(const etale::CompleteRestrictionMonoid& s) {
  const auto n = s.size();
  const auto compat = oracle::compatible_subsets(s);
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset i = from_mask(n, mask);
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        if (i.test(a) && s.leq(b, a) && !i.test(b)) ok = false;
    for (const auto& x : compat) {
      if (!ok) break;
      if (!x.is_subset_of(i)) continue;
      const Elem j = lub(s, x);
      if (j == etale::kNone || !i.test(j)) ok = false;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

/// Non-empty, without zero, upward and meet closed, and meeting every
/// compatible subset whose join it contains. Requires size ≤ 16.
inline std::vector<Subset> s_filters(const etale::CompleteRestrictionMonoid& s) {
  const auto n = s.size();
  const auto compat = oracle::compatible_subsets(s);
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset f = from_mask(n, mask);
    if (f.test(s.zero())) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        if (f.test(a) && s.leq(a, b) && !f.test(b)) ok = false;
        if (f.test(a) && f.test(b) && !f.test(s.meet(a, b))) ok = false;
      }
    for (const auto& x : compat) {
      if (!ok) break;
      const Elem j = lub(s, x);
      if (j != etale::kNone && f.test(j) && !x.intersects(f)) ok = false;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

/// Functor laws and bijectivity of (F, d) and (F, r) on stars, by
/// exhausting every arrow map. Requires |dst|^|src| small.
inline bool is_covering_functor(const std::vector<Elem>& f, const etale::FiniteCategory& src,
                                const etale::FiniteCategory& dst) {
  const auto n = src.size();
  for (Elem x = 0; x < n; ++x) {
    if (src.is_identity(x) && !dst.is_identity(f[x])) return false;
    if (f[src.d(x)] != dst.d(f[x]) || f[src.r(x)] != dst.r(f[x])) return false;
    for (Elem y = 0; y < n; ++y)
      if (src.compose(x, y) != etale::kNone && f[src.compose(x, y)] != dst.compose(f[x], f[y]))
        return false;
  }
  for (Elem e = 0; e < n; ++e) {
    if (!src.is_identity(e)) continue;
    for (int side = 0; side < 2; ++side) {
      for (Elem y = 0; y < dst.size(); ++y) {
        const Elem end = side == 0 ? dst.d(y) : dst.r(y);
        if (end != f[e]) continue;
        std::size_t hits = 0;
        for (Elem x = 0; x < n; ++x)
          if (f[x] == y && (side == 0 ? src.d(x) : src.r(x)) == e) ++hits;
        if (hits != 1) return false;
      }
    }
  }
  return true;
}

inline bool is_continuous(const std::vector<Elem>& f, const etale::FiniteTopology& src,
                          const etale::FiniteTopology& dst) {
  for (const auto& u : dst.opens()) {
    Subset pre(src.points());
    for (Elem x = 0; x < src.points(); ++x)
      if (u.test(f[x])) pre.set(x);
    if (!src.is_open(pre)) return false;
  }
  return true;
}

inline std::size_t count_covering_functors(const etale::FiniteTopCategory& src,
                                           const etale::FiniteTopCategory& dst) {
  const auto n = src.size(), m = dst.size();
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<Elem> f(n, 0);
  std::size_t count = 0;
  while (true) {
    if (is_covering_functor(f, src.cat(), dst.cat()) && oracle::is_continuous(f, src.topology(), dst.topology()))
      ++count;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace oracle
