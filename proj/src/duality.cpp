#include "etale/duality.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace etale {

Report validate_rqf_morphism(const ElementMap& theta, const EhresmannQuantalFrame& src,
                             const EhresmannQuantalFrame& dst) {
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

  if (theta[src.bottom()] != dst.bottom()) report.fail("join-preserving", {src.bottom()});
  if (theta[src.top()] != dst.top()) report.fail("top-preserving", {src.top()});
  if (theta[src.unit()] != dst.unit()) report.fail("unit-preserving", {src.unit()});
  const Subset src_pi = partial_isometries(src);
  const Subset dst_pi = partial_isometries(dst);
  for (Elem a = 0; a < n; ++a) {
    if (theta[src.star(a)] != dst.star(theta[a])) report.fail("star-preserving", {a});
    if (theta[src.plus(a)] != dst.plus(theta[a])) report.fail("plus-preserving", {a});
    if (src_pi.test(a) && !dst_pi.test(theta[a])) report.fail("pi-preserving", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (theta[src.join(a, b)] != dst.join(theta[a], theta[b])) report.fail("join-preserving", {a, b});
      if (theta[src.meet(a, b)] != dst.meet(theta[a], theta[b])) report.fail("meet-preserving", {a, b});
      if (theta[src.mul(a, b)] != dst.mul(theta[a], theta[b])) report.fail("mul-preserving", {a, b});
    }
  return report;
}

namespace {

std::optional<ElementMap> inverse_of(const ElementMap& f, std::size_t codomain) {
  if (f.size() != codomain) return std::nullopt;
  ElementMap inv(codomain, kNone);
  for (Elem x = 0; x < f.size(); ++x) {
    if (f[x] >= codomain || inv[f[x]] != kNone) return std::nullopt;
    inv[f[x]] = x;
  }
  return inv;
}

}  // namespace

Verdict is_rqf_isomorphism(const ElementMap& theta, const EhresmannQuantalFrame& src,
                           const EhresmannQuantalFrame& dst) {
  auto inv = inverse_of(theta, dst.size());
  if (!inv) return Verdict::fail({src.size(), dst.size()}, "not a bijection");
  if (auto r = validate_rqf_morphism(theta, src, dst); !r.ok())
    return Verdict::fail(r.violations().front().witness, "forward map: " + r.violations().front().law);
  if (auto r = validate_rqf_morphism(*inv, dst, src); !r.ok())
    return Verdict::fail(r.violations().front().witness, "inverse map: " + r.violations().front().law);
  return Verdict::pass();
}

ComparisonChi build_chi(const EhresmannQuantalFrame& q) {
  ComparisonChi out;
  out.cq = c_object(q);
  out.laws.absorb(out.cq.laws);
  try {
    out.omega = omega_object(out.cq.topcat);
  } catch (const InvalidInput& e) {
    out.laws.fail("c-etale", {out.cq.filters.size()}, e.what());
    return out;
  }
  const auto& t = out.cq.topcat.topology();
  out.map.assign(q.size(), kNone);
  for (Elem a = 0; a < q.size(); ++a) {
    auto i = t.index_of(out.cq.x_sets[a]);
    if (!i) {
      out.laws.fail("x-open", {a});
      return out;
    }
    out.map[a] = *i;
  }
  const auto& w = out.omega.rqf;
  const Subset pi = partial_isometries(q);
  const Subset w_pi = partial_isometries(w);
  for (Elem a = 0; a < q.size(); ++a) {
    for (Elem b = 0; b < q.size(); ++b)
      if (out.map[q.mul(a, b)] != w.mul(out.map[a], out.map[b])) out.laws.fail("chi-mul", {a, b});
    if (out.map[q.star(a)] != w.star(out.map[a])) out.laws.fail("chi-star", {a});
    if (out.map[q.plus(a)] != w.plus(out.map[a])) out.laws.fail("chi-plus", {a});
    if (pi.test(a) && !w_pi.test(out.map[a])) out.laws.fail("chi-pi", {a});
  }
  out.laws.absorb(validate_rqf_morphism(out.map, q, w));
  return out;
}

Verdict is_spatial(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq) {
  std::unordered_map<Subset, Elem> seen;
  for (Elem a = 0; a < q.size(); ++a) {
    auto [it, fresh] = seen.emplace(cq.x_sets[a], a);
    if (!fresh) return Verdict::fail({it->second, a}, "X_a = X_b");
  }
  const auto& t = cq.topcat.topology();
  for (Elem u = 0; u < t.open_count(); ++u)
    if (!seen.count(t.open(u))) return Verdict::fail({u}, "open set is not of the form X_a");
  return Verdict::pass();
}

Verdict is_spatial(const EhresmannQuantalFrame& q) { return is_spatial(q, c_object(q)); }

Verdict spatial_iff_projections_spatial(const EhresmannQuantalFrame& q) {
  const bool whole = static_cast<bool>(is_spatial(q));
  const bool part = static_cast<bool>(frame_spatial_check(down_frame(q.frame(), q.unit()).frame));
  if (whole != part)
    return Verdict::fail({q.size()}, whole ? "Q spatial but e↓ is not" : "e↓ spatial but Q is not");
  return {true, {}, whole ? "both spatial" : "neither spatial"};
}

ComparisonOmega build_omega_map(const FiniteTopCategory& c) {
  ComparisonOmega out;
  out.omega = omega_object(c);
  out.c_omega = c_object(out.omega.rqf);
  out.laws.absorb(out.c_omega.laws);
  const auto& t = c.topology();
  const auto m = t.open_count();
  out.map.assign(c.size(), kNone);
  for (Elem x = 0; x < c.size(); ++x) {
    Subset o(m);
    for (Elem u = 0; u < m; ++u)
      if (t.open(u).test(x)) o.set(u);
    if (auto f = out.c_omega.find(o)) out.map[x] = *f;
    else out.laws.fail("omega-filter", {x});
  }
  if (!out.laws.ok()) return out;
  out.laws.absorb(validate_covering_functor(out.map, c.cat(), out.c_omega.topcat.cat()));
  if (auto v = continuity_check(out.map, c, out.c_omega.topcat); !v)
    out.laws.fail("omega-continuous", v.witness, v.detail);
  for (Elem u = 0; u < m; ++u)
    if (preimage(out.map, out.c_omega.x_sets[u], c.size()) != t.open(u))
      out.laws.fail("omega-preimage", {u});
  return out;
}

Verdict is_sober(const FiniteTopCategory& c, const ComparisonOmega& omega) {
  if (!omega.laws.ok())
    return Verdict::fail(omega.laws.violations().front().witness,
                         "ω is not a covering functor: " + omega.laws.violations().front().law);
  const auto k = omega.c_omega.filters.size();
  std::vector<Elem> hit(k, kNone);
  for (Elem x = 0; x < c.size(); ++x) {
    if (hit[omega.map[x]] != kNone) return Verdict::fail({hit[omega.map[x]], x}, "O_x = O_y");
    hit[omega.map[x]] = x;
  }
  for (Elem f = 0; f < k; ++f)
    if (hit[f] == kNone) return Verdict::fail({f}, "filter is not of the form O_x");
  const auto& t = c.topology();
  for (Elem u = 0; u < t.open_count(); ++u)
    if (image(omega.map, t.open(u), k) != omega.c_omega.x_sets[u])
      return Verdict::fail({u}, "ω(U) ≠ X_U");
  return Verdict::pass();
}

Verdict is_sober(const FiniteTopCategory& c) { return is_sober(c, build_omega_map(c)); }

Verdict sober_iff_identity_space_sober(const FiniteTopCategory& c) {
  const bool whole = static_cast<bool>(is_sober(c));
  const bool part =
      static_cast<bool>(sober_space_check(c.topology().subspace(c.cat().identities())));
  if (whole != part)
    return Verdict::fail({c.size()}, whole ? "C sober but C_o is not" : "C_o sober but C is not");
  return {true, {}, whole ? "both sober" : "neither sober"};
}

ElementMap transpose_forward(const ArrowMap& alpha, const FiniteTopCategory& c,
                             const FilterCategoryResult& cq) {
  ElementMap out(cq.x_sets.size(), kNone);
  for (Elem q = 0; q < out.size(); ++q)
    if (auto u = c.topology().index_of(preimage(alpha, cq.x_sets[q], c.size()))) out[q] = *u;
  return out;
}

ArrowMap transpose_backward(const ElementMap& beta, const FiniteTopCategory& c,
                            const FilterCategoryResult& cq, std::size_t q_size) {
  const auto& t = c.topology();
  ArrowMap out(c.size(), kNone);
  for (Elem x = 0; x < c.size(); ++x) {
    Subset members(q_size);
    for (Elem q = 0; q < q_size; ++q)
      if (beta[q] < t.open_count() && t.open(beta[q]).test(x)) members.set(q);
    if (auto f = cq.find(members)) out[x] = *f;
  }
  return out;
}

namespace {

class FunctorSearch {
 public:
  FunctorSearch(const FiniteTopCategory& src, const FiniteTopCategory& dst)
      : src_(src.cat()), dst_(dst.cat()), src_tc_(src), dst_tc_(dst), map_(src.size(), kNone) {
    for (Elem x = 0; x < src_.size(); ++x)
      if (src_.is_identity(x)) order_.push_back(x);
    for (Elem x = 0; x < src_.size(); ++x)
      if (!src_.is_identity(x)) order_.push_back(x);
  }

  std::vector<ArrowMap> run() {
    step(0);
    return std::move(found_);
  }

 private:
  bool consistent(Elem x) const {
    const Elem y = map_[x];
    for (Elem z = 0; z < src_.size(); ++z) {
      if (map_[z] == kNone) continue;
      if (z != x && src_.d(z) == src_.d(x) && map_[z] == y) return false;
      if (z != x && src_.r(z) == src_.r(x) && map_[z] == y) return false;
      for (auto [a, b] : {std::pair{x, z}, std::pair{z, x}}) {
        const Elem ab = src_.compose(a, b);
        if (ab != kNone && map_[ab] != kNone && map_[ab] != dst_.compose(map_[a], map_[b]))
          return false;
      }
    }
    for (Elem a = 0; a < src_.size(); ++a) {
      if (map_[a] == kNone) continue;
      for (Elem b = 0; b < src_.size(); ++b)
        if (map_[b] != kNone && src_.compose(a, b) == x && dst_.compose(map_[a], map_[b]) != y)
          return false;
    }
    return true;
  }

  void step(std::size_t depth) {
    if (depth == order_.size()) {
      if (validate_covering_functor(map_, src_, dst_).ok() && continuity_check(map_, src_tc_, dst_tc_))
        found_.push_back(map_);
      return;
    }
    const Elem x = order_[depth];
    for (Elem y = 0; y < dst_.size(); ++y) {
      if (src_.is_identity(x) != dst_.is_identity(y)) continue;
      if (!src_.is_identity(x) &&
          (dst_.d(y) != map_[src_.d(x)] || dst_.r(y) != map_[src_.r(x)]))
        continue;
      map_[x] = y;
      if (consistent(x)) step(depth + 1);
      map_[x] = kNone;
    }
  }

  const FiniteCategory& src_;
  const FiniteCategory& dst_;
  const FiniteTopCategory& src_tc_;
  const FiniteTopCategory& dst_tc_;
  std::vector<Elem> order_;
  ArrowMap map_;
  std::vector<ArrowMap> found_;
};

class MorphismSearch {
 public:
  MorphismSearch(const EhresmannQuantalFrame& src, const EhresmannQuantalFrame& dst, bool iso,
                 std::size_t limit)
      : src_(src), dst_(dst), iso_(iso), limit_(limit) {
    const auto& order = src.frame().order();
    jis_ = join_irreducibles(src.frame());
    std::stable_sort(jis_.begin(), jis_.end(), [&](Elem a, Elem b) {
      return order.down(a).count() < order.down(b).count();
    });
    const auto k = jis_.size();
    below_.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (src.leq(jis_[j], jis_[i])) below_[i].push_back(j);

    decomposition_.resize(src.size());
    batches_.resize(k + 1);
    for (Elem x = 0; x < src.size(); ++x) {
      std::size_t last = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (src.leq(jis_[j], x)) {
          decomposition_[x].push_back(j);
          last = j + 1;
        }
      batches_[last].push_back(x);
    }
    src_pi_ = partial_isometries(src);
    dst_pi_ = partial_isometries(dst);
    dst_ji_ = Subset(dst.size());
    for (Elem y : join_irreducibles(dst.frame())) dst_ji_.set(y);
    val_.assign(k, kNone);
    theta_.assign(src.size(), kNone);
    fresh_ = Subset(src.size());
    used_ = Subset(dst.size());
  }

  std::vector<ElementMap> run() {
    if (iso_ && src_.size() != dst_.size()) return {};
    for (Elem x : batches_[0]) theta_[x] = dst_.bottom();
    if (settle(0)) step(0);
    return std::move(found_);
  }

 private:
  // Assigns theta to the batch fixed once the first `level` JIs are set and
  // checks every law whose terms are all fixed and that involves the batch.
  bool settle(std::size_t level) {
    for (Elem x : batches_[level]) {
      Elem v = dst_.bottom();
      for (std::size_t j : decomposition_[x]) v = dst_.join(v, val_[j]);
      theta_[x] = v;
      fresh_.set(x);
      determined_.push_back(x);
    }
    bool ok = true;
    for (Elem x : batches_[level]) {
      const Elem t = theta_[x];
      if (x == src_.unit() && t != dst_.unit()) ok = false;
      if (x == src_.top() && t != dst_.top()) ok = false;
      if (src_pi_.test(x) && !dst_pi_.test(t)) ok = false;
    }
    for (std::size_t i = 0; ok && i < determined_.size(); ++i) {
      const Elem x = determined_[i];
      const Elem sx = src_.star(x), px = src_.plus(x);
      if ((fresh_.test(x) || fresh_.test(sx)) && theta_[sx] != kNone &&
          theta_[sx] != dst_.star(theta_[x]))
        ok = false;
      if ((fresh_.test(x) || fresh_.test(px)) && theta_[px] != kNone &&
          theta_[px] != dst_.plus(theta_[x]))
        ok = false;
      for (std::size_t j = 0; ok && j < determined_.size(); ++j) {
        const Elem y = determined_[j];
        const Elem m = src_.meet(x, y), p = src_.mul(x, y);
        if (!(fresh_.test(x) || fresh_.test(y) || fresh_.test(m) || fresh_.test(p))) continue;
        if (theta_[m] != kNone && theta_[m] != dst_.meet(theta_[x], theta_[y])) ok = false;
        if (theta_[p] != kNone && theta_[p] != dst_.mul(theta_[x], theta_[y])) ok = false;
      }
    }
    for (Elem x : batches_[level]) fresh_.reset(x);
    if (!ok) unsettle(level);
    return ok;
  }

  void unsettle(std::size_t level) {
    for (Elem x : batches_[level]) theta_[x] = kNone;
    determined_.resize(determined_.size() - batches_[level].size());
  }

  void step(std::size_t k) {
    if (found_.size() >= limit_) return;
    if (k == jis_.size()) {
      if (iso_ && !inverse_of(theta_, dst_.size())) return;
      if (validate_rqf_morphism(theta_, src_, dst_).ok()) found_.push_back(theta_);
      return;
    }
    const bool need_pi = src_pi_.test(jis_[k]);
    for (Elem v = 0; v < dst_.size(); ++v) {
      if (need_pi && !dst_pi_.test(v)) continue;
      if (iso_ && (!dst_ji_.test(v) || used_.test(v))) continue;
      bool monotone = true;
      for (std::size_t j : below_[k])
        if (!dst_.leq(val_[j], v)) monotone = false;
      if (!monotone) continue;
      val_[k] = v;
      used_.set(v);
      if (settle(k + 1)) {
        step(k + 1);
        unsettle(k + 1);
      }
      used_.reset(v);
      val_[k] = kNone;
      if (found_.size() >= limit_) return;
    }
  }

  const EhresmannQuantalFrame& src_;
  const EhresmannQuantalFrame& dst_;
  bool iso_;
  std::size_t limit_;
  std::vector<Elem> jis_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> decomposition_;
  // batches_[k]: elements whose join-irreducible decomposition uses only
  // the first k JIs and needs the k-th.
  std::vector<std::vector<Elem>> batches_;
  Subset src_pi_, dst_pi_, dst_ji_, fresh_, used_;
  std::vector<Elem> val_;
  ElementMap theta_;
  std::vector<Elem> determined_;
  std::vector<ElementMap> found_;
};

}  // namespace

std::vector<ArrowMap> enumerate_covering_functors(const FiniteTopCategory& src,
                                                  const FiniteTopCategory& dst) {
  return FunctorSearch(src, dst).run();
}

std::vector<Elem> join_irreducibles(const FiniteLattice& l) {
  std::vector<Elem> out;
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    Subset below = l.order().down(x);
    below.reset(x);
    if (l.join_all(below) != x) out.push_back(x);
  }
  return out;
}

std::vector<ElementMap> enumerate_rqf_morphisms(const EhresmannQuantalFrame& src,
                                                const EhresmannQuantalFrame& dst,
                                                bool isomorphisms_only, std::size_t limit) {
  return MorphismSearch(src, dst, isomorphisms_only, limit).run();
}

std::optional<ElementMap> find_rqf_isomorphism(const EhresmannQuantalFrame& a,
                                               const EhresmannQuantalFrame& b) {
  auto found = enumerate_rqf_morphisms(a, b, true, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

AdjunctionReport verify_adjunction_I(const FiniteTopCategory& c, const EhresmannQuantalFrame& q,
                                     const HomBounds& bounds) {
  if (c.size() > bounds.max_arrows)
    throw BoundExceeded("category has " + std::to_string(c.size()) + " arrows, bound is " +
                        std::to_string(bounds.max_arrows));
  if (q.size() > bounds.max_elements)
    throw BoundExceeded("quantal frame has " + std::to_string(q.size()) + " elements, bound is " +
                        std::to_string(bounds.max_elements));
  const OmegaResult omega_c = omega_object(c);
  if (omega_c.rqf.size() > bounds.max_elements)
    throw BoundExceeded("Ω(C) has " + std::to_string(omega_c.rqf.size()) +
                        " elements, bound is " + std::to_string(bounds.max_elements));
  const FilterCategoryResult cq = c_object(q);

  AdjunctionReport out;
  out.laws.absorb(cq.laws);
  const auto functors = enumerate_covering_functors(c, cq.topcat);
  const auto morphisms = enumerate_rqf_morphisms(q, omega_c.rqf);
  out.functors = functors.size();
  out.morphisms = morphisms.size();
  const std::set<ArrowMap> functor_set(functors.begin(), functors.end());
  const std::set<ElementMap> morphism_set(morphisms.begin(), morphisms.end());

  std::vector<ElementMap> forward(functors.size());
  for (std::size_t i = 0; i < functors.size(); ++i) {
    forward[i] = transpose_forward(functors[i], c, cq);
    if (!morphism_set.count(forward[i])) out.laws.fail("forward-lands-in-hom", {i});
    else if (transpose_backward(forward[i], c, cq, q.size()) != functors[i])
      out.laws.fail("backward-after-forward", {i});
  }
  for (std::size_t j = 0; j < morphisms.size(); ++j) {
    const ArrowMap back = transpose_backward(morphisms[j], c, cq, q.size());
    if (!functor_set.count(back)) out.laws.fail("backward-lands-in-hom", {j});
    else if (transpose_forward(back, c, cq) != morphisms[j])
      out.laws.fail("forward-after-backward", {j});
  }
  if (out.functors != out.morphisms) out.laws.fail("cardinality", {out.functors, out.morphisms});

  const auto endo_c = enumerate_covering_functors(c, c);
  for (std::size_t g = 0; g < endo_c.size(); ++g) {
    const ElementMap omega_g = omega_morphism(endo_c[g], c, c);
    for (std::size_t i = 0; i < functors.size(); ++i) {
      if (!morphism_set.count(forward[i])) continue;
      ++out.naturality_squares;
      if (transpose_forward(compose_maps(functors[i], endo_c[g]), c, cq) !=
          compose_maps(omega_g, forward[i]))
        out.laws.fail("naturality-category", {g, i});
    }
  }
  const auto endo_q = enumerate_rqf_morphisms(q, q);
  for (std::size_t p = 0; p < endo_q.size(); ++p) {
    const ArrowMap c_psi = c_morphism(endo_q[p], q, cq, cq);
    for (std::size_t i = 0; i < functors.size(); ++i) {
      if (!morphism_set.count(forward[i])) continue;
      ++out.naturality_squares;
      if (transpose_forward(compose_maps(c_psi, functors[i]), c, cq) !=
          compose_maps(forward[i], endo_q[p]))
        out.laws.fail("naturality-quantale", {p, i});
    }
  }
  return out;
}

}  // namespace etale
