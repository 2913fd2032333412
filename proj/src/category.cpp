#include "etale/category.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace etale {

FiniteCategory::FiniteCategory(Subset identities, std::vector<Elem> d, std::vector<Elem> r,
                               Table comp)
    : identities_(std::move(identities)), d_(std::move(d)), r_(std::move(r)),
      comp_(std::move(comp)) {}

Subset FiniteCategory::product(const Subset& a, const Subset& b) const {
  Subset out(size());
  for_each_member(a, [&](Elem x) {
    for_each_member(b, [&](Elem y) {
      const Elem xy = comp_(x, y);
      if (xy != kNone) out.set(xy);
    });
  });
  return out;
}

FiniteTopCategory FiniteTopCategory::discrete(FiniteCategory cat) {
  auto topology = FiniteTopology::discrete(cat.size());
  return {std::move(cat), std::move(topology)};
}

Report validate_category(const FiniteCategory& c) {
  Report report;
  const auto n = static_cast<Elem>(c.size());
  if (c.identities().size() != n || c.r_map().size() != n || c.composition().size() != n) {
    report.fail("arity", {c.size()});
    return report;
  }
  for (Elem a = 0; a < n; ++a) {
    if (c.d(a) >= n || !c.is_identity(c.d(a))) report.fail("d-range", {a});
    if (c.r(a) >= n || !c.is_identity(c.r(a))) report.fail("r-range", {a});
    for (Elem b = 0; b < n; ++b)
      if (c.compose(a, b) != kNone && c.compose(a, b) >= n) report.fail("composition-range", {a, b});
  }
  if (!report.ok()) return report;

  for (Elem e = 0; e < n; ++e)
    if (c.is_identity(e) && (c.d(e) != e || c.r(e) != e)) report.fail("identity-fixed", {e});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const bool defined = c.composable(a, b);
      if (defined != (c.d(a) == c.r(b))) {
        report.fail("composition-domain", {a, b});
        continue;
      }
      if (!defined) continue;
      const Elem ab = c.compose(a, b);
      if (c.d(ab) != c.d(b)) report.fail("d-composite", {a, b});
      if (c.r(ab) != c.r(a)) report.fail("r-composite", {a, b});
    }
    if (c.compose(a, c.d(a)) != a) report.fail("right-identity", {a});
    if (c.compose(c.r(a), a) != a) report.fail("left-identity", {a});
  }
  if (!report.ok()) return report;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!c.composable(a, b)) continue;
      const Elem ab = c.compose(a, b);
      for (Elem x = 0; x < n; ++x) {
        if (!c.composable(b, x)) continue;
        if (c.compose(ab, x) != c.compose(a, c.compose(b, x))) {
          report.fail("associativity", {a, b, x});
          return report;
        }
      }
    }
  return report;
}

Report validate_topcategory(const FiniteTopCategory& tc) {
  Report report = validate_category(tc.cat());
  if (!report.ok()) return report;
  const auto& t = tc.topology();
  if (t.points() != tc.size()) {
    report.fail("topology-arity", {t.points()});
    return report;
  }
  report.absorb(validate_topology(t));
  if (!report.ok()) return report;

  const auto& c = tc.cat();
  if (auto v = is_continuous(c.d_map(), t, t); !v) report.fail("d-continuous", v.witness, v.detail);
  if (auto v = is_continuous(c.r_map(), t, t); !v) report.fail("r-continuous", v.witness, v.detail);

  // m is continuous at (a, b) iff every composable pair in the box
  // N(a) × N(b) lands in N(ab).
  const auto n = static_cast<Elem>(c.size());
  for (Elem a = 0; a < n && !report.violates("m-continuous"); ++a)
    for (Elem b = 0; b < n && !report.violates("m-continuous"); ++b) {
      if (!c.composable(a, b)) continue;
      const Subset& target = t.neighbourhood(c.compose(a, b));
      for_each_member(t.neighbourhood(a), [&](Elem x) {
        for_each_member(t.neighbourhood(b), [&](Elem y) {
          if (c.composable(x, y) && !target.test(c.compose(x, y)))
            report.fail("m-continuous", {a, b, x, y});
        });
      });
    }
  return report;
}

bool is_local_bisection(const FiniteCategory& c, const Subset& a) {
  Subset ds(c.size()), rs(c.size());
  bool ok = true;
  for_each_member(a, [&](Elem x) {
    if (ds.test(c.d(x)) || rs.test(c.r(x))) ok = false;
    ds.set(c.d(x));
    rs.set(c.r(x));
  });
  return ok;
}

std::vector<Subset> local_bisections(const FiniteCategory& c) {
  const auto n = c.size();
  std::vector<Subset> out;
  Subset current(n), ds(n), rs(n);
  auto search = [&](auto&& self, Elem next) -> void {
    if (next == n) {
      out.push_back(current);
      return;
    }
    self(self, next + 1);
    if (!ds.test(c.d(next)) && !rs.test(c.r(next))) {
      current.set(next);
      ds.set(c.d(next));
      rs.set(c.r(next));
      self(self, next + 1);
      current.reset(next);
      ds.reset(c.d(next));
      rs.reset(c.r(next));
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict is_etale(const FiniteTopCategory& tc) {
  const auto& c = tc.cat();
  const auto& t = tc.topology();
  if (auto v = is_open_map(c.d_map(), t, t); !v) return Verdict::fail(v.witness, "d is not open: " + v.detail);
  if (auto v = is_open_map(c.r_map(), t, t); !v) return Verdict::fail(v.witness, "r is not open: " + v.detail);
  std::vector<Subset> open_bisections;
  for (const auto& u : t.opens())
    if (is_local_bisection(c, u)) open_bisections.push_back(u);
  for (std::size_t i = 0; i < t.open_count(); ++i) {
    const Subset& u = t.open(i);
    Subset covered(c.size());
    for (const auto& b : open_bisections)
      if (b.is_subset_of(u)) covered |= b;
    if (covered != u)
      return Verdict::fail({i}, "open set " + format_subset(u) +
                                    " is not a union of open local bisections");
  }
  return Verdict::pass();
}

bool c_o_is_open(const FiniteTopCategory& tc) { return tc.topology().is_open(tc.cat().identities()); }

Report validate_functor(const ArrowMap& f, const FiniteCategory& src, const FiniteCategory& dst) {
  Report report;
  const auto n = static_cast<Elem>(src.size());
  if (f.size() != n) {
    report.fail("arity", {f.size()});
    return report;
  }
  for (Elem x = 0; x < n; ++x)
    if (f[x] >= dst.size()) report.fail("range", {x});
  if (!report.ok()) return report;
  for (Elem x = 0; x < n; ++x) {
    if (src.is_identity(x) && !dst.is_identity(f[x])) report.fail("functor-identity", {x});
    if (f[src.d(x)] != dst.d(f[x])) report.fail("functor-d", {x});
    if (f[src.r(x)] != dst.r(f[x])) report.fail("functor-r", {x});
    for (Elem y = 0; y < n; ++y)
      if (src.composable(x, y) && f[src.compose(x, y)] != dst.compose(f[x], f[y]))
        report.fail("functor-composition", {x, y});
  }
  return report;
}

namespace {

// One side of the covering condition; `side` is d or r of the respective
// category.
void check_bijective_side(const ArrowMap& f, const FiniteCategory& src, const FiniteCategory& dst,
                          const std::vector<Elem>& src_side, const std::vector<Elem>& dst_side,
                          const std::string& name, Report& report) {
  const auto n = static_cast<Elem>(src.size());
  std::map<std::pair<Elem, Elem>, Elem> seen;
  for (Elem x = 0; x < n; ++x) {
    auto [it, fresh] = seen.emplace(std::pair{f[x], src_side[x]}, x);
    if (!fresh) {
      report.fail(name + "-injective", {it->second, x});
      break;
    }
  }
  for (Elem e = 0; e < n; ++e) {
    if (!src.is_identity(e)) continue;
    for (Elem y = 0; y < dst.size(); ++y) {
      if (dst_side[y] != f[e]) continue;
      if (!seen.count({y, e})) {
        report.fail(name + "-surjective", {e, y});
        return;
      }
    }
  }
}

}  // namespace

Report validate_covering_functor(const ArrowMap& f, const FiniteCategory& src,
                                 const FiniteCategory& dst) {
  Report report = validate_functor(f, src, dst);
  if (report.violates("arity") || report.violates("range")) return report;
  check_bijective_side(f, src, dst, src.d_map(), dst.d_map(), "d", report);
  check_bijective_side(f, src, dst, src.r_map(), dst.r_map(), "r", report);
  return report;
}

Verdict continuity_check(const ArrowMap& f, const FiniteTopCategory& src,
                         const FiniteTopCategory& dst) {
  return is_continuous(f, src.topology(), dst.topology());
}

Verdict is_category_isomorphism(const ArrowMap& f, const FiniteCategory& src,
                                const FiniteCategory& dst) {
  if (src.size() != dst.size() || f.size() != src.size()) return Verdict::fail({src.size(), dst.size()}, "sizes differ");
  ArrowMap inverse(dst.size(), kNone);
  for (Elem x = 0; x < f.size(); ++x) {
    if (f[x] >= dst.size() || inverse[f[x]] != kNone) return Verdict::fail({x}, "not a bijection");
    inverse[f[x]] = x;
  }
  if (auto r = validate_functor(f, src, dst); !r.ok())
    return Verdict::fail(r.violations().front().witness, "not a functor: " + r.summary());
  if (auto r = validate_functor(inverse, dst, src); !r.ok())
    return Verdict::fail(r.violations().front().witness, "inverse not a functor: " + r.summary());
  return Verdict::pass();
}

namespace {

using Signature = std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t, bool>;

std::vector<Signature> signatures(const FiniteCategory& c) {
  const auto n = c.size();
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (Elem x = 0; x < n; ++x) {
    ++out_deg[c.d(x)];
    ++in_deg[c.r(x)];
  }
  std::vector<Signature> sig(n);
  for (Elem x = 0; x < n; ++x)
    sig[x] = {c.is_identity(x), out_deg[c.d(x)], in_deg[c.d(x)], out_deg[c.r(x)], in_deg[c.r(x)],
              c.d(x) == c.r(x)};
  return sig;
}

}  // namespace

std::optional<ArrowMap> find_category_isomorphism(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.size() != b.size() || a.identities().count() != b.identities().count()) return std::nullopt;
  const auto n = a.size();
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  // Identities first so d/r images are fixed before other arrows.
  std::vector<Elem> order;
  for (Elem x = 0; x < n; ++x)
    if (a.is_identity(x)) order.push_back(x);
  for (Elem x = 0; x < n; ++x)
    if (!a.is_identity(x)) order.push_back(x);

  ArrowMap f(n, kNone);
  Subset used(n);
  std::optional<ArrowMap> found;
  auto consistent = [&](Elem x, Elem y) {
    if (sa[x] != sb[y]) return false;
    if (!a.is_identity(x)) {
      if (f[a.d(x)] != b.d(y) || f[a.r(x)] != b.r(y)) return false;
    }
    for (Elem z = 0; z < n; ++z) {
      if (f[z] == kNone) continue;
      if (a.composable(x, z) != b.composable(y, f[z])) return false;
      if (a.composable(z, x) != b.composable(f[z], y)) return false;
      if (a.composable(x, z)) {
        const Elem xz = a.compose(x, z);
        if (f[xz] != kNone && f[xz] != b.compose(y, f[z])) return false;
      }
      if (a.composable(z, x)) {
        const Elem zx = a.compose(z, x);
        if (f[zx] != kNone && f[zx] != b.compose(f[z], y)) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == n) {
      if (is_category_isomorphism(f, a, b)) found = f;
      return;
    }
    const Elem x = order[depth];
    for (Elem y = 0; y < n && !found; ++y) {
      if (used.test(y)) continue;
      f[x] = y;
      if (consistent(x, y)) {
        used.set(y);
        self(self, depth + 1);
        used.reset(y);
      }
      f[x] = kNone;
    }
  };
  search(search, 0);
  return found;
}

ArrowMap identity_map(std::size_t n) {
  ArrowMap f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<Elem>(i);
  return f;
}

std::vector<Elem> compose_maps(const std::vector<Elem>& f, const std::vector<Elem>& g) {
  std::vector<Elem> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace etale
