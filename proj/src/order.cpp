#include "etale/order.hpp"

#include <algorithm>
#include <numeric>

namespace etale {

FinitePoset::FinitePoset(std::vector<Subset> up) : up_(std::move(up)) {
  const auto n = up_.size();
  down_.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for_each_member(up_[i], [&](Elem j) { down_[j].set(i); });
}

FinitePoset FinitePoset::from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& leq) {
  std::vector<Subset> up(n, Subset(n));
  for (auto [a, b] : leq) up[a].set(b);
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::from_covers(std::size_t n,
                                     const std::vector<std::pair<Elem, Elem>>& covers) {
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : covers) up[a].set(b);
  // Warshall on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  return FinitePoset(std::move(up));
}

Subset FinitePoset::up_closure(const Subset& s) const {
  Subset out(size());
  for_each_member(s, [&](Elem x) { out |= up_[x]; });
  return out;
}

Subset FinitePoset::down_closure(const Subset& s) const {
  Subset out(size());
  for_each_member(s, [&](Elem x) { out |= down_[x]; });
  return out;
}

Subset FinitePoset::maximal(const Subset& s) const {
  Subset out(size());
  for_each_member(s, [&](Elem x) {
    Subset above = up_[x] & s;
    above.reset(x);
    if (above.none()) out.set(x);
  });
  return out;
}

std::vector<Elem> FinitePoset::linear_extension() const {
  std::vector<Elem> order(size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_[a].count() < down_[b].count(); });
  return order;
}

Report validate_poset(const FinitePoset& p) {
  Report report;
  const auto n = p.size();
  for (Elem i = 0; i < n; ++i) {
    if (p.up(i).size() != n) {
      report.fail("arity", {i});
      return report;
    }
  }
  for (Elem i = 0; i < n; ++i)
    if (!p.leq(i, i)) report.fail("reflexivity", {i});
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) report.fail("antisymmetry", {i, j});
  for (Elem i = 0; i < n && !report.violates("transitivity"); ++i) {
    for_each_member(p.up(i), [&](Elem j) {
      if (report.violates("transitivity")) return;
      Subset missing = p.up(j) - p.up(i);
      if (missing.any()) report.fail("transitivity", {i, j, missing.find_first()});
    });
  }
  return report;
}

FiniteLattice::FiniteLattice(FinitePoset order, Table meet, Table join, Elem bottom, Elem top)
    : order_(std::move(order)), meet_(std::move(meet)), join_(std::move(join)),
      bottom_(bottom), top_(top) {}

namespace {

// The element of `candidates` whose down-set (or up-set) is exactly
// `candidates`, i.e. its greatest (least) member.
std::optional<Elem> greatest_of(const FinitePoset& p, const Subset& candidates) {
  const auto count = candidates.count();
  for (auto i = candidates.find_first(); i != Subset::npos; i = candidates.find_next(i))
    if (p.down(i).count() == count && p.down(i) == candidates) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<Elem> least_of(const FinitePoset& p, const Subset& candidates) {
  const auto count = candidates.count();
  for (auto i = candidates.find_first(); i != Subset::npos; i = candidates.find_next(i))
    if (p.up(i).count() == count && p.up(i) == candidates) return static_cast<Elem>(i);
  return std::nullopt;
}

}  // namespace

std::optional<Elem> FinitePoset::lub(const Subset& s) const {
  Subset bounds = full_subset(size());
  for_each_member(s, [&](Elem x) { bounds &= up_[x]; });
  return least_of(*this, bounds);
}

std::optional<Elem> FinitePoset::glb(const Subset& s) const {
  Subset bounds = full_subset(size());
  for_each_member(s, [&](Elem x) { bounds &= down_[x]; });
  return greatest_of(*this, bounds);
}

std::optional<FiniteLattice> FiniteLattice::from_order(FinitePoset order, Report* why) {
  const auto n = order.size();
  if (n == 0) {
    if (why) why->fail("bounds", {0}, "a lattice needs at least one element");
    return std::nullopt;
  }
  Table meet(n), join(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = greatest_of(order, order.down(a) & order.down(b));
      if (!m) {
        if (why) why->fail("meet-exists", {a, b});
        return std::nullopt;
      }
      auto j = least_of(order, order.up(a) & order.up(b));
      if (!j) {
        if (why) why->fail("join-exists", {a, b});
        return std::nullopt;
      }
      meet(a, b) = meet(b, a) = *m;
      join(a, b) = join(b, a) = *j;
    }
  }
  auto bottom = least_of(order, full_subset(n));
  auto top = greatest_of(order, full_subset(n));
  if (!bottom || !top) {
    if (why) why->fail("bounds", {n}, bottom ? "no top element" : "no bottom element");
    return std::nullopt;
  }
  return FiniteLattice(std::move(order), std::move(meet), std::move(join), *bottom, *top);
}

Elem FiniteLattice::join_all(const Subset& s) const {
  Elem acc = bottom_;
  for_each_member(s, [&](Elem x) { acc = join_(acc, x); });
  return acc;
}

Elem FiniteLattice::meet_all(const Subset& s) const {
  Elem acc = top_;
  for_each_member(s, [&](Elem x) { acc = meet_(acc, x); });
  return acc;
}

Report validate_lattice(const FiniteLattice& l) {
  Report report;
  const auto& p = l.order();
  const auto n = l.size();
  if (n == 0) {
    report.fail("bounds", {0}, "empty carrier");
    return report;
  }
  if (l.meet_table().size() != n || l.join_table().size() != n) {
    report.fail("table-arity", {n});
    return report;
  }
  if (l.bottom() >= n || p.up(l.bottom()).count() != n) report.fail("bounds", {l.bottom()});
  if (l.top() >= n || p.down(l.top()).count() != n) report.fail("bounds", {l.top()});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem m = l.meet(a, b);
      if (m >= n || p.down(m) != (p.down(a) & p.down(b))) report.fail("meet-table", {a, b});
      const Elem j = l.join(a, b);
      if (j >= n || p.up(j) != (p.up(a) & p.up(b))) report.fail("join-table", {a, b});
    }
  }
  return report;
}

Verdict is_frame(const FiniteLattice& l) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = l.meet(x, y);
      for (Elem z = y + 1; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(xy, l.meet(x, z)))
          return Verdict::fail({x, y, z}, "x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)");
    }
  return Verdict::pass();
}

FiniteFrame chain_frame(std::size_t n) {
  return FiniteFrame(*FiniteLattice::from_order(FinitePoset::chain(n)));
}

FiniteFrame boolean_frame(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<Subset> up(n, Subset(n));
  Table meet(n), join(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == a) up[a].set(b);
      meet(a, b) = static_cast<Elem>(a & b);
      join(a, b) = static_cast<Elem>(a | b);
    }
  return FiniteFrame(FiniteLattice(FinitePoset(std::move(up)), std::move(meet), std::move(join), 0,
                                   static_cast<Elem>(n - 1)));
}

FiniteFrame product_frame(const FiniteFrame& lhs, const FiniteFrame& rhs) {
  const auto m = lhs.size();
  const auto k = rhs.size();
  const auto n = m * k;
  auto pack = [k](std::size_t a, std::size_t b) { return static_cast<Elem>(a * k + b); };
  std::vector<Subset> up(n, Subset(n));
  Table meet(n), join(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Elem a1 = i / k, b1 = i % k, a2 = j / k, b2 = j % k;
      if (lhs.leq(a1, a2) && rhs.leq(b1, b2)) up[i].set(j);
      meet(i, j) = pack(lhs.meet(a1, a2), rhs.meet(b1, b2));
      join(i, j) = pack(lhs.join(a1, a2), rhs.join(b1, b2));
    }
  return FiniteFrame(FiniteLattice(FinitePoset(std::move(up)), std::move(meet), std::move(join),
                                   pack(lhs.bottom(), rhs.bottom()), pack(lhs.top(), rhs.top())));
}

FiniteFrame opens_frame(const FiniteTopology& t) {
  const auto n = t.open_count();
  std::vector<Subset> up(n, Subset(n));
  Table meet(n), join(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& u = t.open(a);
      const auto& v = t.open(b);
      if (u.is_subset_of(v)) up[a].set(b);
      meet(a, b) = t.index_of(u & v).value();
      join(a, b) = t.index_of(u | v).value();
    }
  return FiniteFrame(FiniteLattice(FinitePoset(std::move(up)), std::move(meet), std::move(join),
                                   t.index_of(Subset(t.points())).value(),
                                   t.index_of(full_subset(t.points())).value()));
}

Subset CPFilter::members(const FiniteLattice& l) const {
  Subset out = l.order().down(cogenerator_);
  out.flip();
  return out;
}

std::vector<Elem> meet_prime_elements(const FiniteLattice& f) {
  // m is meet-prime iff N = {x : x ≰ m} is closed under binary meets. N is
  // finite and contains top, so that holds iff ∧N itself lies outside m↓.
  std::vector<Elem> primes;
  for (Elem m = 0; m < f.size(); ++m) {
    if (m == f.top()) continue;
    Subset outside = f.order().down(m);
    outside.flip();
    if (!f.leq(f.meet_all(outside), m)) primes.push_back(m);
  }
  return primes;
}

std::vector<CPFilter> enumerate_cp_filters(const FiniteLattice& f) {
  std::vector<CPFilter> out;
  for (Elem m : meet_prime_elements(f)) out.emplace_back(m);
  return out;
}

PointSpace pt_topology(const FiniteFrame& f) {
  PointSpace space;
  space.points = enumerate_cp_filters(f);
  const auto np = space.points.size();
  space.x_sets.assign(f.size(), Subset(np));
  for (std::size_t p = 0; p < np; ++p)
    for (Elem a = 0; a < f.size(); ++a)
      if (space.points[p].contains(f, a)) space.x_sets[a].set(p);

  auto& laws = space.laws;
  if (space.x_sets[f.bottom()].any()) laws.fail("x-bottom-empty", {f.bottom()});
  if (space.x_sets[f.top()].count() != np) laws.fail("x-top-full", {f.top()});
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b) {
      if ((space.x_sets[a] & space.x_sets[b]) != space.x_sets[f.meet(a, b)])
        laws.fail("x-meet", {a, b});
      if ((space.x_sets[a] | space.x_sets[b]) != space.x_sets[f.join(a, b)])
        laws.fail("x-join", {a, b});
    }
  space.topology = FiniteTopology::from_opens(np, space.x_sets);
  return space;
}

Verdict frame_spatial_check(const FiniteFrame& f) {
  const auto filters = enumerate_cp_filters(f);
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b) {
      if (f.leq(a, b)) continue;
      bool separated = std::any_of(filters.begin(), filters.end(), [&](const CPFilter& p) {
        return p.contains(f, a) && !p.contains(f, b);
      });
      if (!separated) return Verdict::fail({a, b}, "no point contains a but omits b");
    }
  return Verdict::pass();
}

DownFrame down_frame(const FiniteFrame& f, Elem e) {
  DownFrame out;
  out.embed = members(f.order().down(e));
  const auto n = out.embed.size();
  out.index.assign(f.size(), kNone);
  for (std::size_t i = 0; i < n; ++i) out.index[out.embed[i]] = static_cast<Elem>(i);
  std::vector<Subset> up(n, Subset(n));
  Table meet(n), join(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (f.leq(out.embed[i], out.embed[j])) up[i].set(j);
      meet(i, j) = out.index[f.meet(out.embed[i], out.embed[j])];
      join(i, j) = out.index[f.join(out.embed[i], out.embed[j])];
    }
  out.frame = FiniteFrame(FiniteLattice(FinitePoset(std::move(up)), std::move(meet),
                                        std::move(join), out.index[f.bottom()], out.index[e]));
  return out;
}

}  // namespace etale
