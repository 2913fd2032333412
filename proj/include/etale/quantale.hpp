#pragma once

#include <vector>

#include "etale/category.hpp"
#include "etale/common.hpp"
#include "etale/order.hpp"
#include "etale/report.hpp"

namespace etale {

/// Unital quantale on a finite frame.
class FiniteQuantale {
 public:
  FiniteQuantale() = default;
  FiniteQuantale(FiniteFrame frame, Table mul, Elem unit)
      : frame_(std::move(frame)), mul_(std::move(mul)), unit_(unit) {}

  std::size_t size() const { return frame_.size(); }
  const FiniteFrame& frame() const { return frame_; }
  Elem mul(Elem a, Elem b) const { return mul_(a, b); }
  const Table& mul_table() const { return mul_; }
  Elem unit() const { return unit_; }

  bool leq(Elem a, Elem b) const { return frame_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return frame_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return frame_.join(a, b); }
  Elem bottom() const { return frame_.bottom(); }
  Elem top() const { return frame_.top(); }

 private:
  FiniteFrame frame_;
  Table mul_;
  Elem unit_ = 0;
};

/// Quantal frame with the Ehresmann operations a ↦ a* and a ↦ a⁺.
/// The projections are e↓ and are never stored.
class EhresmannQuantalFrame : public FiniteQuantale {
 public:
  EhresmannQuantalFrame() = default;
  EhresmannQuantalFrame(FiniteQuantale q, std::vector<Elem> star, std::vector<Elem> plus)
      : FiniteQuantale(std::move(q)), star_(std::move(star)), plus_(std::move(plus)) {}

  Elem star(Elem a) const { return star_[a]; }
  Elem plus(Elem a) const { return plus_[a]; }
  const std::vector<Elem>& star_map() const { return star_; }
  const std::vector<Elem>& plus_map() const { return plus_; }

  bool is_projection(Elem a) const { return leq(a, unit()); }
  const Subset& projections() const { return frame().order().down(unit()); }

 private:
  std::vector<Elem> star_;
  std::vector<Elem> plus_;
};

/// Marks an Ehresmann quantal frame that is expected to be étale with
/// partial isometries closed under multiplication. Run validate_rqf to
/// check it.
class RestrictionQuantalFrame : public EhresmannQuantalFrame {
 public:
  RestrictionQuantalFrame() = default;
  explicit RestrictionQuantalFrame(EhresmannQuantalFrame q)
      : EhresmannQuantalFrame(std::move(q)) {}
};

/// Associativity, unit laws, distributivity over binary joins on both
/// sides and the zero laws. Assumes the frame is valid.
Report validate_quantale(const FiniteQuantale& q);

/// Ehresmann axioms over all elements: projections are commuting
/// idempotents closed under mul, star/plus land in and fix projections,
/// aa* = a, a⁺a = a, (ab)* = (a*b)*, (ab)⁺ = (ab⁺)⁺, and star/plus
/// preserve binary joins and 0.
Report validate_ehresmann(const EhresmannQuantalFrame& q);

/// Layered check: poset, lattice, frame, quantale, Ehresmann, restriction
/// identities on partial isometries, étale (top = ∨PI), and PI·PI ⊆ PI.
/// Stops at the first failing layer.
Report validate_rqf(const EhresmannQuantalFrame& q);

/// {a : every b ≤ a has b = b⁺a = ab*}.
Subset partial_isometries(const EhresmannQuantalFrame& q);

Verdict pi_is_order_ideal(const EhresmannQuantalFrame& q);

/// ab* = ba* and b⁺a = a⁺b.
bool compatible(const EhresmannQuantalFrame& q, Elem a, Elem b);

/// For all partial isometries a, b: a ∨ b ∈ PI ⇔ a ∼ b.
Verdict compatibility_lemma_check(const EhresmannQuantalFrame& q);

/// Each x equals the join of the partial isometries below it.
Verdict every_element_is_join_of_pi(const EhresmannQuantalFrame& q);

/// Arrows are the elements, identities the projections, d = star,
/// r = plus, and a·b = ab when a* = b⁺. The topology is discrete and left
/// implicit.
FiniteCategory cat_of_ehresmann(const EhresmannQuantalFrame& q);

/// The frame itself with mul = meet, e = top and star = plus = identity.
RestrictionQuantalFrame frame_as_quantale(const FiniteFrame& f);

}  // namespace etale
