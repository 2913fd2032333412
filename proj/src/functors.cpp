#include "etale/functors.hpp"

#include <algorithm>

namespace etale {

OmegaResult omega_object(const FiniteTopCategory& tc) {
  if (auto report = validate_topcategory(tc); !report.ok())
    throw InvalidInput("not a topological category: " + report.summary());
  if (auto v = is_etale(tc); !v) throw InvalidInput("not étale: " + v.detail);

  const auto& c = tc.cat();
  const auto& t = tc.topology();
  const auto n = t.open_count();
  auto lookup = [&](const Subset& s, const char* what) {
    auto i = t.index_of(s);
    if (!i) throw InvalidInput(std::string(what) + " " + format_subset(s) + " is not open");
    return *i;
  };
  Table mul(n);
  std::vector<Elem> star(n), plus(n);
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) mul(u, v) = lookup(c.product(t.open(u), t.open(v)), "product");
    star[u] = lookup(c.d_image(t.open(u)), "d-image");
    plus[u] = lookup(c.r_image(t.open(u)), "r-image");
  }
  const Elem unit = lookup(c.identities(), "identity set");
  OmegaResult out{RestrictionQuantalFrame(EhresmannQuantalFrame(
                      FiniteQuantale(opens_frame(t), std::move(mul), unit), std::move(star),
                      std::move(plus))),
                  t.opens()};
  return out;
}

ElementMap omega_morphism(const ArrowMap& f, const FiniteTopCategory& src,
                          const FiniteTopCategory& dst) {
  const auto& td = dst.topology();
  ElementMap out(td.open_count());
  for (Elem u = 0; u < td.open_count(); ++u) {
    auto i = src.topology().index_of(preimage(f, td.open(u), src.size()));
    if (!i) throw InvalidInput("preimage of open " + format_subset(td.open(u)) + " is not open");
    out[u] = *i;
  }
  return out;
}

Subset star_set(const EhresmannQuantalFrame& q, const Subset& a) {
  return image(q.star_map(), a, q.size());
}

Subset plus_set(const EhresmannQuantalFrame& q, const Subset& a) {
  return image(q.plus_map(), a, q.size());
}

Subset filter_star(const EhresmannQuantalFrame& q, const Subset& a) {
  return q.frame().order().up_closure(star_set(q, a));
}

Subset filter_plus(const EhresmannQuantalFrame& q, const Subset& a) {
  return q.frame().order().up_closure(plus_set(q, a));
}

namespace {

Subset product_set(const EhresmannQuantalFrame& q, const Subset& a, const Subset& b) {
  Subset out(q.size());
  for_each_member(a, [&](Elem x) { for_each_member(b, [&](Elem y) { out.set(q.mul(x, y)); }); });
  return out;
}

}  // namespace

std::optional<Subset> filter_product(const EhresmannQuantalFrame& q, const Subset& a,
                                     const Subset& b) {
  if (filter_star(q, a) != filter_plus(q, b)) return std::nullopt;
  return q.frame().order().up_closure(product_set(q, a, b));
}

std::optional<Elem> FilterCategoryResult::find(const Subset& members) const {
  auto it = index.find(members);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FilterCategoryResult c_object(const EhresmannQuantalFrame& q) {
  if (auto report = validate_rqf(q); !report.ok())
    throw InvalidInput("not a restriction quantal frame: " + report.summary());

  FilterCategoryResult out;
  for (const auto& f : enumerate_cp_filters(q.frame()))
    out.filters.emplace_back(f.members(q.frame()), f.cogenerator());
  const auto k = out.filters.size();
  for (Elem i = 0; i < k; ++i) out.index.emplace(out.filters[i].members(), i);

  Subset identities(k);
  std::vector<Elem> d(k, kNone), r(k, kNone);
  std::vector<Subset> ds(k), rs(k);
  for (Elem i = 0; i < k; ++i) {
    const Subset& m = out.filters[i].members();
    if ((m & q.projections()).any()) identities.set(i);
    ds[i] = filter_star(q, m);
    rs[i] = filter_plus(q, m);
    if (auto j = out.find(ds[i])) d[i] = *j;
    else out.laws.fail("d-filter", {i});
    if (auto j = out.find(rs[i])) r[i] = *j;
    else out.laws.fail("r-filter", {i});
  }
  Table comp(k, kNone);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      if (ds[a] != rs[b]) continue;
      Subset ab = q.frame().order().up_closure(
          product_set(q, out.filters[a].members(), out.filters[b].members()));
      if (auto j = out.find(ab)) comp(a, b) = *j;
      else out.laws.fail("product-filter", {a, b});
    }

  out.x_sets.assign(q.size(), Subset(k));
  for (Elem i = 0; i < k; ++i)
    for_each_member(out.filters[i].members(), [&](Elem a) { out.x_sets[a].set(i); });

  const Subset pi = partial_isometries(q);
  std::vector<Subset> base;
  for_each_member(pi, [&](Elem a) {
    out.base.push_back(a);
    base.push_back(out.x_sets[a]);
  });
  out.topcat = FiniteTopCategory(FiniteCategory(identities, d, r, std::move(comp)),
                                 FiniteTopology::from_base(k, base));
  return out;
}

Report check_x_laws(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq) {
  Report report;
  const auto k = cq.filters.size();
  const auto& c = cq.topcat.cat();
  const auto& x = cq.x_sets;
  if (x[q.top()].count() != k) report.fail("x-top", {q.top()});
  if (x[q.bottom()].any()) report.fail("x-bottom", {q.bottom()});
  if (x[q.unit()] != c.identities()) report.fail("x-unit", {q.unit()});
  const Subset pi = partial_isometries(q);
  for (Elem a = 0; a < q.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b) {
      if ((x[a] & x[b]) != x[q.meet(a, b)]) report.fail("x-meet", {a, b});
      if ((x[a] | x[b]) != x[q.join(a, b)]) report.fail("x-join", {a, b});
    }
    Subset from_pi(k);
    for_each_member(q.frame().order().down(a) & pi, [&](Elem p) { from_pi |= x[p]; });
    if (from_pi != x[a]) report.fail("x-union", {a});
    if (!cq.topcat.topology().is_open(x[a])) report.fail("x-open", {a});
    if (c.d_image(x[a]) != x[q.star(a)]) report.fail("d-image", {a});
    if (c.r_image(x[a]) != x[q.plus(a)]) report.fail("r-image", {a});
  }
  return report;
}

Report check_filter_calculus(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq) {
  Report report;
  const auto& order = q.frame().order();
  const Subset pi = partial_isometries(q);
  const auto k = static_cast<Elem>(cq.filters.size());
  for (Elem i = 0; i < k; ++i) {
    const Subset& a_set = cq.filters[i].members();
    const Subset stars = star_set(q, a_set);
    const Subset pluses = plus_set(q, a_set);
    const Subset d_set = filter_star(q, a_set);
    const Subset r_set = filter_plus(q, a_set);
    for_each_member(a_set, [&](Elem a) {
      for_each_member(stars, [&](Elem f) {
        if (!a_set.test(q.mul(a, f))) report.fail("filter-absorbs-star", {i, a, f});
      });
      for_each_member(pluses, [&](Elem f) {
        if (!a_set.test(q.mul(f, a))) report.fail("filter-absorbs-plus", {i, a, f});
      });
      if (!pi.test(a)) return;
      Subset right(q.size()), right_d(q.size()), left(q.size()), left_r(q.size());
      for_each_member(stars, [&](Elem f) { right.set(q.mul(a, f)); });
      for_each_member(d_set, [&](Elem f) { right_d.set(q.mul(a, f)); });
      for_each_member(pluses, [&](Elem f) { left.set(q.mul(f, a)); });
      for_each_member(r_set, [&](Elem f) { left_r.set(q.mul(f, a)); });
      if (order.up_closure(right) != a_set || order.up_closure(right_d) != a_set)
        report.fail("filter-generated-by-pi", {i, a});
      if (order.up_closure(left) != a_set || order.up_closure(left_r) != a_set)
        report.fail("filter-generated-by-pi", {i, a});
    });

    if (cq.topcat.cat().is_identity(i)) {
      for_each_member(pi, [&](Elem a) {
        if (!a_set.test(q.star(a))) return;
        Subset translated(q.size());
        for_each_member(a_set, [&](Elem x) { translated.set(q.mul(a, x)); });
        translated = order.up_closure(translated);
        auto j = cq.find(translated);
        if (!j) report.fail("filter-translate", {i, a}, "(aA)↑ is not a filter");
        else if (cq.topcat.cat().d(*j) != i) report.fail("filter-translate", {i, a}, "d((aA)↑) ≠ A");
      });
    }

    for (Elem j = 0; j < k; ++j) {
      const Subset& b_set = cq.filters[j].members();
      if (i != j && cq.topcat.cat().d(i) == cq.topcat.cat().d(j) && (a_set & b_set & pi).any())
        report.fail("filter-pi-determines", {i, j});
      const bool stars_match = stars == plus_set(q, b_set);
      const bool dr_match = d_set == filter_plus(q, b_set);
      if (stars_match != dr_match) report.fail("star-plus-match", {i, j});
    }
  }
  return report;
}

Verdict identity_space_vs_pt(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq) {
  const DownFrame down = down_frame(q.frame(), q.unit());
  const PointSpace pt = pt_topology(down.frame);
  const auto& cat = cq.topcat.cat();
  const std::vector<Elem> ids = members(cat.identities());
  if (ids.size() != pt.points.size())
    return Verdict::fail({ids.size(), pt.points.size()}, "point counts differ");

  std::vector<Subset> pt_members;
  for (const auto& p : pt.points) pt_members.push_back(p.members(down.frame));

  // h: identity filter (numbered within the identity subspace) -> point of e↓.
  std::vector<Elem> h(ids.size(), kNone);
  Subset hit(pt.points.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Subset& a = cq.filters[ids[i]].members();
    Subset restricted(down.frame.size());
    for (std::size_t x = 0; x < down.embed.size(); ++x)
      if (a.test(down.embed[x])) restricted.set(x);
    auto it = std::find(pt_members.begin(), pt_members.end(), restricted);
    if (it == pt_members.end()) return Verdict::fail({ids[i]}, "A ∩ e↓ is not a point of e↓");
    h[i] = static_cast<Elem>(it - pt_members.begin());
    if (hit.test(h[i])) return Verdict::fail({ids[i]}, "A ↦ A ∩ e↓ is not injective");
    hit.set(h[i]);

    Subset lifted(q.size());
    for_each_member(restricted, [&](Elem x) { lifted.set(down.embed[x]); });
    if (q.frame().order().up_closure(lifted) != a) return Verdict::fail({ids[i]}, "(A ∩ e↓)↑ ≠ A");
  }
  const FiniteTopology sub = cq.topcat.topology().subspace(cat.identities());
  if (auto v = is_continuous(h, sub, pt.topology); !v) return Verdict::fail(v.witness, "not continuous");
  if (auto v = is_open_map(h, sub, pt.topology); !v) return Verdict::fail(v.witness, "not open");
  return Verdict::pass();
}

ArrowMap c_morphism(const ElementMap& phi, const EhresmannQuantalFrame& r,
                    const FilterCategoryResult& c_r, const FilterCategoryResult& c_s) {
  ArrowMap out(c_s.filters.size());
  for (Elem b = 0; b < c_s.filters.size(); ++b) {
    auto i = c_r.find(preimage(phi, c_s.filters[b].members(), r.size()));
    if (!i) throw InvalidInput("preimage of filter " + std::to_string(b) + " is not a completely prime filter");
    out[b] = *i;
  }
  return out;
}

}  // namespace etale
