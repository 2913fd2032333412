#include "etale/crm.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace etale {

bool compatible(const CompleteRestrictionMonoid& s, Elem a, Elem b) {
  return s.mul(a, s.star(b)) == s.mul(b, s.star(a)) && s.mul(s.plus(b), a) == s.mul(s.plus(a), b);
}

namespace {

std::vector<Subset> compatibility_rows(const CompleteRestrictionMonoid& s) {
  const auto n = s.size();
  std::vector<Subset> rows(n, Subset(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (compatible(s, a, b)) rows[a].set(b);
  return rows;
}

struct CapReached {};

void extend_cliques(const std::vector<Subset>& rows, Subset& current, const Subset& candidates,
                    std::vector<Subset>& out, std::size_t cap) {
  out.push_back(current);
  if (out.size() > cap) throw CapReached{};
  for (auto v = candidates.find_first(); v != Subset::npos; v = candidates.find_next(v)) {
    Subset next = candidates & rows[v];
    for (auto u = next.find_first(); u != Subset::npos && u <= v; u = next.find_next(u)) next.reset(u);
    current.set(v);
    extend_cliques(rows, current, next, out, cap);
    current.reset(v);
  }
}

bool by_size_then_value(const Subset& a, const Subset& b) {
  const auto ca = a.count(), cb = b.count();
  return ca != cb ? ca < cb : a < b;
}

std::vector<std::size_t> witness_of(const Subset& s) {
  std::vector<std::size_t> out;
  for_each_member(s, [&](Elem x) { out.push_back(x); });
  return out;
}

}  // namespace

CompatibleSubsets compatible_subsets(const CompleteRestrictionMonoid& s, std::size_t cap,
                                     std::uint64_t seed) {
  const auto n = s.size();
  const auto rows = compatibility_rows(s);
  CompatibleSubsets out;
  Subset current(n);
  try {
    extend_cliques(rows, current, full_subset(n), out.subsets, cap);
  } catch (const CapReached&) {
    out.exhaustive = false;
    out.subsets.clear();
    std::set<Subset> chosen;
    chosen.insert(Subset(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b)
        if (rows[a].test(b)) chosen.insert(make_subset(n, {a, b}));
    std::mt19937_64 rng(seed);
    std::vector<Elem> order(n);
    for (Elem i = 0; i < n; ++i) order[i] = i;
    while (chosen.size() < cap) {
      std::shuffle(order.begin(), order.end(), rng);
      Subset pick(n), allowed = full_subset(n);
      for (Elem v : order)
        if (allowed.test(v) && (rng() & 1)) {
          pick.set(v);
          allowed &= rows[v];
        }
      chosen.insert(pick);
    }
    out.subsets.assign(chosen.begin(), chosen.end());
  }
  std::sort(out.subsets.begin(), out.subsets.end(), by_size_then_value);
  return out;
}

Report validate_crm(const CompleteRestrictionMonoid& s, std::uint64_t seed) {
  Report report;
  const auto n = static_cast<Elem>(s.size());
  if (n == 0 || s.mul_table().size() != n || s.meet_table().size() != n ||
      s.star_map().size() != n || s.plus_map().size() != n || s.unit() >= n || s.zero() >= n) {
    report.fail("arity", {s.size()});
    return report;
  }
  for (Elem a = 0; a < n; ++a) {
    if (s.star(a) >= n || s.plus(a) >= n) report.fail("range", {a});
    for (Elem b = 0; b < n; ++b)
      if (s.mul(a, b) >= n || s.meet(a, b) >= n) report.fail("range", {a, b});
  }
  if (!report.ok()) return report;
  report.absorb(validate_poset(s.order()));
  if (!report.ok()) return report;

  for (Elem a = 0; a < n; ++a) {
    if (s.mul(s.unit(), a) != a || s.mul(a, s.unit()) != a) report.fail("unit-law", {a});
    if (!s.leq(s.zero(), a)) report.fail("zero-least", {a});
    if (s.mul(s.zero(), a) != s.zero() || s.mul(a, s.zero()) != s.zero()) report.fail("zero-law", {a});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c))) report.fail("associativity", {a, b, c});
  }

  for (Elem a = 0; a < n; ++a) {
    if (!s.is_projection(s.star(a))) report.fail("star-range", {a});
    if (!s.is_projection(s.plus(a))) report.fail("plus-range", {a});
    if (s.mul(a, s.star(a)) != a) report.fail("star-identity", {a});
    if (s.mul(s.plus(a), a) != a) report.fail("plus-identity", {a});
    if (s.is_projection(a)) {
      if (s.plus(a) != a) report.fail("plus-fixes-projections", {a});
      if (s.mul(a, a) != a) report.fail("projection-idempotent", {a});
    }
    for (Elem b = 0; b < n; ++b) {
      if (s.star(s.mul(a, b)) != s.star(s.mul(s.star(a), b))) report.fail("star-congruence", {a, b});
      if (s.plus(s.mul(a, b)) != s.plus(s.mul(a, s.plus(b)))) report.fail("plus-congruence", {a, b});
      if (s.is_projection(a) && s.is_projection(b)) {
        if (s.mul(a, b) != s.mul(b, a)) report.fail("projection-commute", {a, b});
        if (!s.is_projection(s.mul(a, b))) report.fail("projection-closed", {a, b});
      }
    }
  }
  if (!report.ok()) return report;

  for (Elem f = 0; f < n; ++f) {
    if (!s.is_projection(f)) continue;
    for (Elem a = 0; a < n; ++a) {
      const Elem fa = s.mul(f, a);
      if (fa != s.mul(a, s.star(fa))) report.fail("restriction-left", {f, a});
      const Elem af = s.mul(a, f);
      if (af != s.mul(s.plus(af), a)) report.fail("restriction-right", {a, f});
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (s.leq(a, b) != (a == s.mul(s.plus(a), b))) report.fail("natural-order", {a, b});
      auto m = s.order().glb(make_subset(n, {a, b}));
      if (!m || *m != s.meet(a, b)) report.fail("meet-table", {a, b});
    }
  if (!report.ok()) return report;

  const auto subsets = compatible_subsets(s, kCompatibleSubsetCap, seed);
  for (const Subset& x : subsets.subsets) {
    auto j = s.join(x);
    if (!j) {
      report.fail("compatible-join", witness_of(x));
      continue;
    }
    for (Elem t = 0; t < n; ++t) {
      Subset left(n), right(n);
      for_each_member(x, [&](Elem a) {
        left.set(s.mul(t, a));
        right.set(s.mul(a, t));
      });
      auto lj = s.join(left);
      auto rj = s.join(right);
      if (!lj || *lj != s.mul(t, *j) || !rj || *rj != s.mul(*j, t)) {
        auto w = witness_of(x);
        w.insert(w.begin(), t);
        report.fail("join-distributivity", w);
      }
    }
  }
  return report;
}

PiMonoid pi_restriction_monoid(const EhresmannQuantalFrame& q) {
  PiMonoid out;
  out.embed = members(partial_isometries(q));
  out.index.assign(q.size(), kNone);
  const auto k = out.embed.size();
  for (Elem i = 0; i < k; ++i) out.index[out.embed[i]] = i;
  auto at = [&](Elem x) {
    if (out.index[x] == kNone)
      throw InvalidInput("partial isometries are not closed: element " + std::to_string(x));
    return out.index[x];
  };
  std::vector<Subset> up(k, Subset(k));
  Table mul(k), meet(k);
  std::vector<Elem> star(k), plus(k);
  for (Elem i = 0; i < k; ++i) {
    const Elem a = out.embed[i];
    star[i] = at(q.star(a));
    plus[i] = at(q.plus(a));
    for (Elem j = 0; j < k; ++j) {
      const Elem b = out.embed[j];
      if (q.leq(a, b)) up[i].set(j);
      mul(i, j) = at(q.mul(a, b));
      meet(i, j) = at(q.meet(a, b));
    }
  }
  out.crm = CompleteRestrictionMonoid(FinitePoset(std::move(up)), std::move(mul), at(q.unit()),
                                      at(q.bottom()), std::move(star), std::move(plus),
                                      std::move(meet));
  return out;
}

std::optional<Elem> LVee::find(const Subset& ideal) const {
  auto it = index.find(ideal);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Subset join_closure(const CompleteRestrictionMonoid& s, const Subset& x) {
  const auto& order = s.order();
  Subset cl = order.down_closure(x);
  if (cl.none()) cl = order.down(s.zero());
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem e = 0; e < s.size(); ++e) {
      if (cl.test(e)) continue;
      const Subset below = order.down(e) & cl;
      if (below.none()) continue;
      if (auto l = order.lub(below); l && *l == e) {
        cl |= order.down(e);
        changed = true;
      }
    }
  }
  return cl;
}

namespace {

class IdealSearch {
 public:
  IdealSearch(const CompleteRestrictionMonoid& s, std::size_t max_ideals)
      : s_(s), max_(max_ideals), lin_(s.order().linear_extension()), current_(s.size()) {}

  std::vector<Subset> run() {
    step(0);
    return std::move(found_);
  }

 private:
  void step(std::size_t i) {
    if (i == lin_.size()) {
      found_.push_back(current_);
      if (found_.size() > max_)
        throw BoundExceeded("L^∨ has more than " + std::to_string(max_) + " elements");
      return;
    }
    const Elem x = lin_[i];
    Subset strict = s_.order().down(x);
    strict.reset(x);
    const auto l = s_.order().lub(strict & current_);
    const bool forced = l && *l == x;
    if (strict.is_subset_of(current_)) {
      if (!forced) step(i + 1);
      current_.set(x);
      step(i + 1);
      current_.reset(x);
    } else if (!forced) {
      step(i + 1);
    }
  }

  const CompleteRestrictionMonoid& s_;
  std::size_t max_;
  std::vector<Elem> lin_;
  Subset current_;
  std::vector<Subset> found_;
};

}  // namespace

LVee l_vee(const CompleteRestrictionMonoid& s, std::size_t max_ideals) {
  LVee out;
  out.ideals = IdealSearch(s, max_ideals).run();
  std::sort(out.ideals.begin(), out.ideals.end(), by_size_then_value);
  const auto k = static_cast<Elem>(out.ideals.size());
  for (Elem i = 0; i < k; ++i) out.index.emplace(out.ideals[i], i);
  auto closed = [&](const Subset& x) {
    if (auto i = out.find(x)) return *i;
    return out.index.at(join_closure(s, x));
  };

  std::vector<Subset> up(k, Subset(k));
  Table meet(k), join(k), mul(k);
  std::vector<Elem> star(k), plus(k);
  std::vector<Subset> maxima(k);
  for (Elem i = 0; i < k; ++i) maxima[i] = s.order().maximal(out.ideals[i]);
  for (Elem i = 0; i < k; ++i) {
    star[i] = closed(image(s.star_map(), out.ideals[i], s.size()));
    plus[i] = closed(image(s.plus_map(), out.ideals[i], s.size()));
    for (Elem j = 0; j < k; ++j) {
      if (out.ideals[i].is_subset_of(out.ideals[j])) up[i].set(j);
      meet(i, j) = out.index.at(out.ideals[i] & out.ideals[j]);
      join(i, j) = closed(out.ideals[i] | out.ideals[j]);
      Subset products(s.size());
      for_each_member(maxima[i], [&](Elem a) {
        for_each_member(maxima[j], [&](Elem b) { products.set(s.mul(a, b)); });
      });
      mul(i, j) = closed(s.order().down_closure(products));
    }
  }
  out.principal.resize(s.size());
  for (Elem a = 0; a < s.size(); ++a) out.principal[a] = out.index.at(s.order().down(a));
  const Elem bottom = out.index.at(s.order().down(s.zero()));
  const Elem top = out.index.at(full_subset(s.size()));
  FiniteFrame frame(FiniteLattice(FinitePoset(std::move(up)), std::move(meet), std::move(join),
                                  bottom, top));
  out.rqf = RestrictionQuantalFrame(EhresmannQuantalFrame(
      FiniteQuantale(std::move(frame), std::move(mul), out.principal[s.unit()]), std::move(star),
      std::move(plus)));
  return out;
}

Report validate_crm_morphism(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                             const CompleteRestrictionMonoid& dst) {
  Report report;
  const auto n = static_cast<Elem>(src.size());
  if (theta.size() != n) {
    report.fail("arity", {theta.size(), n});
    return report;
  }
  for (Elem a = 0; a < n; ++a)
    if (theta[a] >= dst.size()) {
      report.fail("range", {a});
      return report;
    }
  if (theta[src.unit()] != dst.unit()) report.fail("unit-preserving", {src.unit()});
  for (Elem a = 0; a < n; ++a) {
    if (theta[src.star(a)] != dst.star(theta[a])) report.fail("star-preserving", {a});
    if (theta[src.plus(a)] != dst.plus(theta[a])) report.fail("plus-preserving", {a});
    for (Elem b = 0; b < n; ++b)
      if (theta[src.mul(a, b)] != dst.mul(theta[a], theta[b])) report.fail("mul-preserving", {a, b});
  }
  for (const Subset& x : compatible_subsets(src).subsets) {
    auto j = src.join(x);
    if (!j) continue;
    auto k = dst.join(image(theta, x, dst.size()));
    if (!k || *k != theta[*j]) report.fail("join-preserving", witness_of(x));
  }
  return report;
}

Verdict is_proper(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                  const CompleteRestrictionMonoid& dst) {
  const Subset below_image = dst.order().down_closure(image(theta, full_subset(src.size()), dst.size()));
  for (Elem t = 0; t < dst.size(); ++t) {
    auto l = dst.join(below_image & dst.order().down(t));
    if (!l || *l != t) return Verdict::fail({t}, "not a join of elements below the image");
  }
  return Verdict::pass();
}

Verdict is_callitic(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                    const CompleteRestrictionMonoid& dst) {
  if (auto v = is_proper(theta, src, dst); !v) return v;
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (theta[src.meet(a, b)] != dst.meet(theta[a], theta[b]))
        return Verdict::fail({a, b}, "meet not preserved");
  return Verdict::pass();
}

Verdict is_crm_isomorphism(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                           const CompleteRestrictionMonoid& dst) {
  if (theta.size() != src.size() || src.size() != dst.size())
    return Verdict::fail({src.size(), dst.size()}, "sizes differ");
  ElementMap inv(dst.size(), kNone);
  for (Elem a = 0; a < theta.size(); ++a) {
    if (theta[a] >= dst.size() || inv[theta[a]] != kNone) return Verdict::fail({a}, "not a bijection");
    inv[theta[a]] = a;
  }
  for (Elem a = 0; a < src.size(); ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (src.leq(a, b) != dst.leq(theta[a], theta[b]))
        return Verdict::fail({a, b}, "order not preserved and reflected");
  if (auto r = validate_crm_morphism(theta, src, dst); !r.ok())
    return Verdict::fail(r.violations().front().witness, "forward map: " + r.violations().front().law);
  if (auto r = validate_crm_morphism(inv, dst, src); !r.ok())
    return Verdict::fail(r.violations().front().witness, "inverse map: " + r.violations().front().law);
  return Verdict::pass();
}

std::optional<ElementMap> find_crm_isomorphism(const CompleteRestrictionMonoid& a,
                                               const CompleteRestrictionMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  const LVee la = l_vee(a);
  const LVee lb = l_vee(b);
  auto iso = find_rqf_isomorphism(la.rqf, lb.rqf);
  if (!iso) return std::nullopt;
  std::vector<Elem> from_principal(lb.ideals.size(), kNone);
  for (Elem t = 0; t < b.size(); ++t) from_principal[lb.principal[t]] = t;
  ElementMap out(a.size());
  for (Elem s = 0; s < a.size(); ++s) {
    out[s] = from_principal[(*iso)[la.principal[s]]];
    if (out[s] == kNone) return std::nullopt;
  }
  if (!is_crm_isomorphism(out, a, b)) return std::nullopt;
  return out;
}

namespace {

// Ideals above this size are checked for well-definedness on two
// decompositions only (all elements, maximal elements).
constexpr std::size_t kExhaustiveDecomposition = 8;

}  // namespace

ThetaExtension theta_extension(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                               const CompleteRestrictionMonoid& dst, const LVee& l_src,
                               const LVee& l_dst) {
  ThetaExtension out;
  auto extend = [&](const Subset& generators) {
    return l_dst.index.at(join_closure(dst, image(theta, generators, dst.size())));
  };
  out.map.resize(l_src.ideals.size());
  for (Elem i = 0; i < l_src.ideals.size(); ++i) {
    const Subset& ideal = l_src.ideals[i];
    out.map[i] = extend(ideal);
    if (extend(src.order().maximal(ideal)) != out.map[i]) out.laws.fail("well-defined", {i});
    if (ideal.count() > kExhaustiveDecomposition) continue;
    const auto elems = members(ideal);
    for (std::uint32_t mask = 0; mask < (1u << elems.size()); ++mask) {
      Subset gens(src.size());
      for (std::size_t b = 0; b < elems.size(); ++b)
        if (mask >> b & 1u) gens.set(elems[b]);
      if (join_closure(src, gens) != ideal) continue;
      if (extend(gens) != out.map[i]) {
        out.laws.fail("well-defined", {i, mask});
        break;
      }
    }
  }
  for (Elem a = 0; a < src.size(); ++a)
    if (out.map[l_src.principal[a]] != l_dst.principal[theta[a]])
      out.laws.fail("restricts-to-theta", {a});
  out.laws.absorb(validate_rqf_morphism(out.map, l_src.rqf, l_dst.rqf));
  return out;
}

bool is_s_filter(const CompleteRestrictionMonoid& s, const Subset& a) {
  const auto& order = s.order();
  if (a.none() || a.test(s.zero())) return false;
  if (order.up_closure(a) != a) return false;
  bool ok = true;
  for_each_member(a, [&](Elem x) {
    for_each_member(a, [&](Elem y) {
      if (ok && !a.test(s.meet(x, y))) ok = false;
    });
    if (!ok) return;
    if (auto l = order.lub(order.down(x) - a); l && *l == x) ok = false;
  });
  return ok;
}

std::optional<Elem> SFilterResult::find(const Subset& members) const {
  auto it = index.find(members);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

SFilterResult s_filters(const CompleteRestrictionMonoid& s) {
  const auto& order = s.order();
  const auto n = s.size();
  SFilterResult out;
  for (Elem a = 0; a < n; ++a)
    if (is_s_filter(s, order.up(a))) out.filters.push_back(order.up(a));
  const auto k = static_cast<Elem>(out.filters.size());
  for (Elem i = 0; i < k; ++i) out.index.emplace(out.filters[i], i);

  Subset identities(k);
  std::vector<Elem> d(k, kNone), r(k, kNone);
  std::vector<Subset> ds(k), rs(k);
  for (Elem i = 0; i < k; ++i) {
    const Subset& m = out.filters[i];
    for_each_member(m, [&](Elem x) {
      if (s.is_projection(x)) identities.set(i);
    });
    ds[i] = order.up_closure(image(s.star_map(), m, n));
    rs[i] = order.up_closure(image(s.plus_map(), m, n));
    if (auto j = out.find(ds[i])) d[i] = *j;
    else out.laws.fail("d-filter", {i});
    if (auto j = out.find(rs[i])) r[i] = *j;
    else out.laws.fail("r-filter", {i});
  }
  Table comp(k, kNone);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      if (ds[a] != rs[b]) continue;
      Subset products(n);
      for_each_member(out.filters[a], [&](Elem x) {
        for_each_member(out.filters[b], [&](Elem y) { products.set(s.mul(x, y)); });
      });
      if (auto j = out.find(order.up_closure(products))) comp(a, b) = *j;
      else out.laws.fail("product-filter", {a, b});
    }
  out.x_sets.assign(n, Subset(k));
  for (Elem i = 0; i < k; ++i)
    for_each_member(out.filters[i], [&](Elem a) { out.x_sets[a].set(i); });
  out.topcat = FiniteTopCategory(FiniteCategory(identities, d, r, std::move(comp)),
                                 FiniteTopology::from_base(k, out.x_sets));
  return out;
}

Verdict proper_filters_meet_image(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                                  const CompleteRestrictionMonoid& dst) {
  const Subset img = image(theta, full_subset(src.size()), dst.size());
  const auto sf = s_filters(dst);
  for (std::size_t i = 0; i < sf.filters.size(); ++i)
    if (!sf.filters[i].intersects(img)) return Verdict::fail({i}, "S-filter misses the image");
  return Verdict::pass();
}

SFilterCorrespondence s_filter_correspondence(const CompleteRestrictionMonoid& s,
                                              const SFilterResult& sf, const LVee& l,
                                              const FilterCategoryResult& cl) {
  SFilterCorrespondence out;
  const auto k = sf.filters.size();
  out.map.assign(k, kNone);
  Subset hit(cl.filters.size());
  for (Elem i = 0; i < k; ++i) {
    Subset lifted(l.ideals.size());
    for (Elem id = 0; id < l.ideals.size(); ++id)
      if ((l.ideals[id] & sf.filters[i]).any()) lifted.set(id);
    auto j = cl.find(lifted);
    if (!j) {
      out.laws.fail("bijection", {i}, "(A')↑ is not a completely prime filter");
      continue;
    }
    if (hit.test(*j)) out.laws.fail("bijection", {i}, "two S-filters share (A')↑");
    hit.set(*j);
    out.map[i] = *j;
    Subset down(s.size());
    for (Elem a = 0; a < s.size(); ++a)
      if (cl.filters[*j].contains(l.principal[a])) down.set(a);
    if (down != sf.filters[i]) out.laws.fail("down-transfer", {i});
  }
  if (!out.laws.ok()) return out;
  if (hit.count() != cl.filters.size()) {
    out.laws.fail("bijection", {hit.count(), cl.filters.size()}, "not onto C(L^∨(S))");
    return out;
  }
  const auto& c1 = sf.topcat.cat();
  const auto& c2 = cl.topcat.cat();
  for (Elem i = 0; i < k; ++i) {
    if (out.map[c1.d(i)] != c2.d(out.map[i])) out.laws.fail("d-transfer", {i});
    if (out.map[c1.r(i)] != c2.r(out.map[i])) out.laws.fail("r-transfer", {i});
  }
  if (auto v = is_category_isomorphism(out.map, c1, c2); !v)
    out.laws.fail("category-isomorphism", v.witness, v.detail);
  for (Elem a = 0; a < s.size(); ++a)
    if (image(out.map, sf.x_sets[a], cl.filters.size()) != cl.x_sets[l.principal[a]])
      out.laws.fail("x-correspondence", {a});
  if (auto v = is_continuous(out.map, sf.topcat.topology(), cl.topcat.topology()); !v)
    out.laws.fail("homeomorphism", v.witness, "not continuous");
  if (auto v = is_open_map(out.map, sf.topcat.topology(), cl.topcat.topology()); !v)
    out.laws.fail("homeomorphism", v.witness, "not open");
  return out;
}

namespace {

class CalliticSearch {
 public:
  CalliticSearch(const CompleteRestrictionMonoid& src, const CompleteRestrictionMonoid& dst)
      : src_(src), dst_(dst), lin_(src.order().linear_extension()), theta_(src.size(), kNone) {}

  std::vector<ElementMap> run() {
    step(0);
    return std::move(found_);
  }

 private:
  bool fixed(Elem x) const { return theta_[x] != kNone; }

  bool consistent(Elem x) const {
    const Elem t = theta_[x];
    if (x == src_.unit() && t != dst_.unit()) return false;
    for (Elem y = 0; y < src_.size(); ++y) {
      if (!fixed(y)) continue;
      if (src_.star(y) == x && dst_.star(theta_[y]) != t) return false;
      if (src_.plus(y) == x && dst_.plus(theta_[y]) != t) return false;
      if (y == x) {
        if (fixed(src_.star(x)) && theta_[src_.star(x)] != dst_.star(t)) return false;
        if (fixed(src_.plus(x)) && theta_[src_.plus(x)] != dst_.plus(t)) return false;
      }
      for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        const Elem p = src_.mul(a, b), m = src_.meet(a, b);
        if (fixed(p) && theta_[p] != dst_.mul(theta_[a], theta_[b])) return false;
        if (fixed(m) && theta_[m] != dst_.meet(theta_[a], theta_[b])) return false;
      }
      for (Elem z = 0; z < src_.size(); ++z) {
        if (!fixed(z)) continue;
        if (src_.mul(y, z) == x && dst_.mul(theta_[y], theta_[z]) != t) return false;
        if (src_.meet(y, z) == x && dst_.meet(theta_[y], theta_[z]) != t) return false;
      }
    }
    return true;
  }

  void step(std::size_t i) {
    if (i == lin_.size()) {
      if (validate_crm_morphism(theta_, src_, dst_).ok() && is_callitic(theta_, src_, dst_))
        found_.push_back(theta_);
      return;
    }
    const Elem x = lin_[i];
    Subset strict = src_.order().down(x);
    strict.reset(x);
    std::vector<Elem> candidates;
    if (auto l = src_.join(strict); l && *l == x) {
      auto forced = dst_.join(image(theta_, strict, dst_.size()));
      if (!forced) return;
      candidates.push_back(*forced);
    } else {
      for (Elem v = 0; v < dst_.size(); ++v) candidates.push_back(v);
    }
    for (Elem v : candidates) {
      theta_[x] = v;
      if (consistent(x)) step(i + 1);
    }
    theta_[x] = kNone;
  }

  const CompleteRestrictionMonoid& src_;
  const CompleteRestrictionMonoid& dst_;
  std::vector<Elem> lin_;
  ElementMap theta_;
  std::vector<ElementMap> found_;
};

}  // namespace

std::vector<ElementMap> enumerate_callitic_morphisms(const CompleteRestrictionMonoid& src,
                                                     const CompleteRestrictionMonoid& dst) {
  return CalliticSearch(src, dst).run();
}

AdjunctionIIReport verify_adjunction_II(const FiniteTopCategory& c,
                                        const CompleteRestrictionMonoid& s,
                                        const HomBounds& bounds) {
  if (c.size() > bounds.max_arrows)
    throw BoundExceeded("category has " + std::to_string(c.size()) + " arrows, bound is " +
                        std::to_string(bounds.max_arrows));
  if (s.size() > bounds.max_elements)
    throw BoundExceeded("monoid has " + std::to_string(s.size()) + " elements, bound is " +
                        std::to_string(bounds.max_elements));
  if (auto r = validate_crm(s); !r.ok())
    throw InvalidInput("not a complete restriction monoid: " + r.summary());
  const OmegaResult omega_c = omega_object(c);
  if (omega_c.rqf.size() > bounds.max_elements)
    throw BoundExceeded("Ω(C) has " + std::to_string(omega_c.rqf.size()) +
                        " elements, bound is " + std::to_string(bounds.max_elements));
  const PiMonoid target = pi_restriction_monoid(omega_c.rqf);
  const SFilterResult sf = s_filters(s);
  const auto& t = c.topology();

  AdjunctionIIReport out;
  out.laws.absorb(sf.laws);
  const auto functors = enumerate_covering_functors(c, sf.topcat);
  const auto morphisms = enumerate_callitic_morphisms(s, target.crm);
  out.functors = functors.size();
  out.morphisms = morphisms.size();
  const std::set<ArrowMap> functor_set(functors.begin(), functors.end());
  const std::set<ElementMap> morphism_set(morphisms.begin(), morphisms.end());

  auto forward = [&](const ArrowMap& alpha) {
    ElementMap theta(s.size(), kNone);
    for (Elem a = 0; a < s.size(); ++a)
      if (auto u = t.index_of(preimage(alpha, sf.x_sets[a], c.size())))
        theta[a] = target.index[*u];
    return theta;
  };
  auto backward = [&](const ElementMap& theta) {
    ArrowMap alpha(c.size(), kNone);
    for (Elem x = 0; x < c.size(); ++x) {
      Subset members(s.size());
      for (Elem a = 0; a < s.size(); ++a)
        if (t.open(target.embed[theta[a]]).test(x)) members.set(a);
      if (auto f = sf.find(members)) alpha[x] = *f;
    }
    return alpha;
  };
  for (std::size_t i = 0; i < functors.size(); ++i) {
    const ElementMap theta = forward(functors[i]);
    if (!morphism_set.count(theta)) out.laws.fail("forward-lands-in-hom", {i});
    else if (backward(theta) != functors[i]) out.laws.fail("backward-after-forward", {i});
  }
  for (std::size_t j = 0; j < morphisms.size(); ++j) {
    const ArrowMap alpha = backward(morphisms[j]);
    if (!functor_set.count(alpha)) out.laws.fail("backward-lands-in-hom", {j});
    else if (forward(alpha) != morphisms[j]) out.laws.fail("forward-after-backward", {j});
  }
  if (out.functors != out.morphisms) out.laws.fail("cardinality", {out.functors, out.morphisms});

  const LVee l = l_vee(s);
  const AdjunctionReport translated = verify_adjunction_I(c, l.rqf, bounds);
  out.translated_functors = translated.functors;
  out.translated_morphisms = translated.morphisms;
  if (!translated.ok()) out.laws.fail("translated-adjunction", translated.laws.violations().front().witness,
                                   translated.laws.summary());
  if (out.functors != translated.functors || out.morphisms != translated.morphisms)
    out.laws.fail("translated-cardinality", {out.functors, translated.functors});
  return out;
}

CompleteRestrictionMonoid frame_as_crm(const FiniteFrame& f) {
  std::vector<Elem> id(f.size());
  for (Elem a = 0; a < f.size(); ++a) id[a] = a;
  return CompleteRestrictionMonoid(f.order(), f.meet_table(), f.top(), f.bottom(), id, id,
                                   f.meet_table());
}

}  // namespace etale
