#include "etale/quantale.hpp"

namespace etale {

Report validate_quantale(const FiniteQuantale& q) {
  Report report;
  const auto n = static_cast<Elem>(q.size());
  if (q.mul_table().size() != n || q.unit() >= n) {
    report.fail("arity", {q.size()});
    return report;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (q.mul(a, b) >= n) {
        report.fail("mul-range", {a, b});
        return report;
      }

  for (Elem a = 0; a < n; ++a) {
    if (q.mul(q.unit(), a) != a || q.mul(a, q.unit()) != a) report.fail("unit-law", {a});
    if (q.mul(a, q.bottom()) != q.bottom() || q.mul(q.bottom(), a) != q.bottom())
      report.fail("zero-law", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = q.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (q.mul(ab, c) != q.mul(a, q.mul(b, c))) report.fail("associativity", {a, b, c});
        if (c <= b) continue;
        const Elem bc = q.join(b, c);
        if (q.mul(a, bc) != q.join(ab, q.mul(a, c))) report.fail("left-join-distributivity", {a, b, c});
        if (q.mul(bc, a) != q.join(q.mul(b, a), q.mul(c, a)))
          report.fail("right-join-distributivity", {a, b, c});
      }
    }
  return report;
}

Report validate_ehresmann(const EhresmannQuantalFrame& q) {
  Report report;
  const auto n = static_cast<Elem>(q.size());
  if (q.star_map().size() != n || q.plus_map().size() != n) {
    report.fail("arity", {q.size()});
    return report;
  }
  for (Elem a = 0; a < n; ++a) {
    if (q.star(a) >= n) report.fail("star-range", {a});
    if (q.plus(a) >= n) report.fail("plus-range", {a});
  }
  if (!report.ok()) return report;

  const Subset& p = q.projections();
  for_each_member(p, [&](Elem f) {
    if (q.mul(f, f) != f) report.fail("projection-idempotent", {f});
    if (q.star(f) != f) report.fail("star-fixes-projections", {f});
    if (q.plus(f) != f) report.fail("plus-fixes-projections", {f});
    for_each_member(p, [&](Elem g) {
      if (q.mul(f, g) != q.mul(g, f)) report.fail("projection-commute", {f, g});
      if (!p.test(q.mul(f, g))) report.fail("projection-closed", {f, g});
    });
  });
  for (Elem a = 0; a < n; ++a) {
    if (!p.test(q.star(a))) report.fail("star-range", {a});
    if (!p.test(q.plus(a))) report.fail("plus-range", {a});
    if (q.mul(a, q.star(a)) != a) report.fail("star-identity", {a});
    if (q.mul(q.plus(a), a) != a) report.fail("plus-identity", {a});
    for (Elem b = 0; b < n; ++b) {
      if (q.star(q.mul(a, b)) != q.star(q.mul(q.star(a), b))) report.fail("star-congruence", {a, b});
      if (q.plus(q.mul(a, b)) != q.plus(q.mul(a, q.plus(b)))) report.fail("plus-congruence", {a, b});
      const Elem ab = q.join(a, b);
      if (q.star(ab) != q.join(q.star(a), q.star(b))) report.fail("star-join", {a, b});
      if (q.plus(ab) != q.join(q.plus(a), q.plus(b))) report.fail("plus-join", {a, b});
    }
  }
  if (q.star(q.bottom()) != q.bottom()) report.fail("star-join", {q.bottom()});
  if (q.plus(q.bottom()) != q.bottom()) report.fail("plus-join", {q.bottom()});
  return report;
}

Subset partial_isometries(const EhresmannQuantalFrame& q) {
  const auto n = q.size();
  Subset pi(n);
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for_each_member(q.frame().order().down(a), [&](Elem b) {
      if (ok && (q.mul(q.plus(b), a) != b || q.mul(a, q.star(b)) != b)) ok = false;
    });
    if (ok) pi.set(a);
  }
  return pi;
}

Report validate_rqf(const EhresmannQuantalFrame& q) {
  Report report = validate_poset(q.frame().order());
  if (!report.ok()) return report;
  report = validate_lattice(q.frame());
  if (!report.ok()) return report;
  if (auto v = is_frame(q.frame()); !v) {
    report.fail("distributivity", v.witness, v.detail);
    return report;
  }
  report = validate_quantale(q);
  if (!report.ok()) return report;
  report = validate_ehresmann(q);
  if (!report.ok()) return report;

  const Subset pi = partial_isometries(q);
  for_each_member(q.projections(), [&](Elem f) {
    for_each_member(pi, [&](Elem a) {
      const Elem fa = q.mul(f, a);
      if (fa != q.mul(a, q.star(fa))) report.fail("restriction-left", {f, a});
      const Elem af = q.mul(a, f);
      if (af != q.mul(q.plus(af), a)) report.fail("restriction-right", {a, f});
    });
  });
  if (!report.ok()) return report;

  if (q.frame().join_all(pi) != q.top()) {
    report.fail("etale", {q.top()}, "top is not a join of partial isometries");
    return report;
  }
  for_each_member(pi, [&](Elem a) {
    for_each_member(pi, [&](Elem b) {
      if (!pi.test(q.mul(a, b))) report.fail("pi-closed", {a, b});
    });
  });
  return report;
}

Verdict pi_is_order_ideal(const EhresmannQuantalFrame& q) {
  const Subset pi = partial_isometries(q);
  for (auto a = pi.find_first(); a != Subset::npos; a = pi.find_next(a)) {
    Subset below = q.frame().order().down(static_cast<Elem>(a)) - pi;
    if (below.any()) return Verdict::fail({a, below.find_first()});
  }
  return Verdict::pass();
}

bool compatible(const EhresmannQuantalFrame& q, Elem a, Elem b) {
  return q.mul(a, q.star(b)) == q.mul(b, q.star(a)) && q.mul(q.plus(b), a) == q.mul(q.plus(a), b);
}

Verdict compatibility_lemma_check(const EhresmannQuantalFrame& q) {
  const Subset pi = partial_isometries(q);
  const auto list = members(pi);
  for (Elem a : list)
    for (Elem b : list)
      if (pi.test(q.join(a, b)) != compatible(q, a, b))
        return Verdict::fail({a, b}, pi.test(q.join(a, b)) ? "join is PI but a ≁ b"
                                                            : "a ∼ b but join is not PI");
  return Verdict::pass();
}

Verdict every_element_is_join_of_pi(const EhresmannQuantalFrame& q) {
  const Subset pi = partial_isometries(q);
  for (Elem x = 0; x < q.size(); ++x)
    if (q.frame().join_all(q.frame().order().down(x) & pi) != x) return Verdict::fail({x});
  return Verdict::pass();
}

FiniteCategory cat_of_ehresmann(const EhresmannQuantalFrame& q) {
  const auto n = q.size();
  Table comp(n, kNone);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (q.star(a) == q.plus(b)) comp(a, b) = q.mul(a, b);
  return FiniteCategory(q.projections(), q.star_map(), q.plus_map(), std::move(comp));
}

RestrictionQuantalFrame frame_as_quantale(const FiniteFrame& f) {
  std::vector<Elem> id(f.size());
  for (Elem a = 0; a < f.size(); ++a) id[a] = a;
  Table mul = f.meet_table();
  return RestrictionQuantalFrame(
      EhresmannQuantalFrame(FiniteQuantale(f, std::move(mul), f.top()), id, id));
}

}  // namespace etale
