#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "etale/category.hpp"
#include "etale/common.hpp"
#include "etale/duality.hpp"
#include "etale/functors.hpp"
#include "etale/order.hpp"
#include "etale/quantale.hpp"
#include "etale/report.hpp"

namespace etale {

/// Finite complete restriction monoid with binary meets. The projections
/// are the elements fixed by star.
class CompleteRestrictionMonoid {
 public:
  CompleteRestrictionMonoid() = default;
  CompleteRestrictionMonoid(FinitePoset order, Table mul, Elem unit, Elem zero,
                            std::vector<Elem> star, std::vector<Elem> plus, Table meet)
      : order_(std::move(order)),
        mul_(std::move(mul)),
        unit_(unit),
        zero_(zero),
        star_(std::move(star)),
        plus_(std::move(plus)),
        meet_(std::move(meet)) {}

  std::size_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_(a, b); }
  Elem unit() const { return unit_; }
  Elem zero() const { return zero_; }
  Elem star(Elem a) const { return star_[a]; }
  Elem plus(Elem a) const { return plus_[a]; }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }
  const Table& mul_table() const { return mul_; }
  const Table& meet_table() const { return meet_; }
  const std::vector<Elem>& star_map() const { return star_; }
  const std::vector<Elem>& plus_map() const { return plus_; }

  bool is_projection(Elem a) const { return star_[a] == a; }
  std::optional<Elem> join(const Subset& s) const { return order_.lub(s); }

 private:
  FinitePoset order_;
  Table mul_;
  Elem unit_ = 0;
  Elem zero_ = 0;
  std::vector<Elem> star_;
  std::vector<Elem> plus_;
  Table meet_;
};

/// ab* = ba* and b⁺a = a⁺b.
bool compatible(const CompleteRestrictionMonoid& s, Elem a, Elem b);

/// Above this many pairwise-compatible subsets the join checks switch from
/// exhaustive enumeration to seeded sampling.
inline constexpr std::size_t kCompatibleSubsetCap = std::size_t{1} << 16;

struct CompatibleSubsets {
  std::vector<Subset> subsets;
  /// False when the cap was hit and `subsets` is a seeded sample.
  bool exhaustive = true;
};

/// Every pairwise-compatible subset (including ∅ and singletons), by
/// clique backtracking; seeded sampling of maximal-clique subsets past
/// `cap`.
CompatibleSubsets compatible_subsets(const CompleteRestrictionMonoid& s,
                                     std::size_t cap = kCompatibleSubsetCap,
                                     std::uint64_t seed = 0);

/// Monoid, Ehresmann and restriction laws; the order is a poset and equals
/// the natural order a ≤ b ⇔ a = a⁺b; zero is the least element and
/// absorbing; the meet table is the glb; every pairwise-compatible subset
/// has a join and multiplication distributes over it on both sides.
Report validate_crm(const CompleteRestrictionMonoid& s, std::uint64_t seed = 0);

/// The partial isometries of Q with the restricted operations. Element i
/// is Q-element embed[i]; index[q] is the inverse (kNone off PI).
struct PiMonoid {
  CompleteRestrictionMonoid crm;
  std::vector<Elem> embed;
  std::vector<Elem> index;
};

PiMonoid pi_restriction_monoid(const EhresmannQuantalFrame& q);

/// L^∨(S): join-closed order ideals of S ordered by inclusion, with
/// I·J, I* and I⁺ the join-closed ideals generated by the pointwise
/// results, unit ↓e.
struct LVee {
  RestrictionQuantalFrame rqf;
  std::vector<Subset> ideals;
  /// principal[s] = index of ↓s.
  std::vector<Elem> principal;
  std::unordered_map<Subset, Elem> index;

  std::optional<Elem> find(const Subset& ideal) const;
};

/// Smallest join-closed order ideal containing `x`.
Subset join_closure(const CompleteRestrictionMonoid& s, const Subset& x);

/// Throws BoundExceeded when more than `max_ideals` ideals appear.
LVee l_vee(const CompleteRestrictionMonoid& s, std::size_t max_ideals = 1024);

/// Unit, mul, star, plus preserved, and joins of every pairwise-compatible
/// subset preserved.
Report validate_crm_morphism(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                             const CompleteRestrictionMonoid& dst);

/// Every t is the join of the elements below t that lie below some image.
Verdict is_proper(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                  const CompleteRestrictionMonoid& dst);

/// Proper and preserves binary meets.
Verdict is_callitic(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                    const CompleteRestrictionMonoid& dst);

/// Bijective, order-reflecting, and a morphism in both directions.
Verdict is_crm_isomorphism(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                           const CompleteRestrictionMonoid& dst);

/// Searches via L^∨ and the RQF isomorphism search, restricting to
/// principal ideals.
std::optional<ElementMap> find_crm_isomorphism(const CompleteRestrictionMonoid& a,
                                               const CompleteRestrictionMonoid& b);

/// Θ(I) = ∨{↓θ(a) : a ∈ I}, as a map L^∨(src) → L^∨(dst).
struct ThetaExtension {
  ElementMap map;
  /// well-defined, restricts-to-theta, and the RQF morphism laws.
  Report laws;
};

ThetaExtension theta_extension(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                               const CompleteRestrictionMonoid& dst, const LVee& l_src,
                               const LVee& l_dst);

/// For proper θ, every completely prime S-filter of dst meets the image.
Verdict proper_filters_meet_image(const ElementMap& theta, const CompleteRestrictionMonoid& src,
                                  const CompleteRestrictionMonoid& dst);

/// The category C'(S) of completely prime S-filters with d(A') = (A'*)↑,
/// r(A') = (A'⁺)↑, A'•B' = (A'B')↑ when d(A') = r(B'), and the topology
/// with base X'_a.
struct SFilterResult {
  std::vector<Subset> filters;
  FiniteTopCategory topcat;
  std::vector<Subset> x_sets;
  Report laws;
  std::unordered_map<Subset, Elem> index;

  std::optional<Elem> find(const Subset& members) const;
};

/// Non-empty, proper, upward and meet closed, and whenever the join of a
/// subset lies in the set so does some member of the subset.
bool is_s_filter(const CompleteRestrictionMonoid& s, const Subset& a);

SFilterResult s_filters(const CompleteRestrictionMonoid& s);

/// A' ↦ (A')↑ is a bijection onto the filters of L^∨(S), an isomorphism
/// of categories and a homeomorphism carrying X'_a to X_{↓a}, and
/// (A')↑ ∩ S = A'.
struct SFilterCorrespondence {
  ArrowMap map;
  Report laws;
};

SFilterCorrespondence s_filter_correspondence(const CompleteRestrictionMonoid& s,
                                              const SFilterResult& sf, const LVee& l,
                                              const FilterCategoryResult& cl);

/// Callitic morphisms src → dst, by backtracking over a linear extension
/// of src with values at join-reducible elements forced.
std::vector<ElementMap> enumerate_callitic_morphisms(const CompleteRestrictionMonoid& src,
                                                     const CompleteRestrictionMonoid& dst);

struct AdjunctionIIReport {
  std::size_t functors = 0;
  std::size_t morphisms = 0;
  /// Hom-set sizes of verify_adjunction_I on (C, L^∨(S)).
  std::size_t translated_functors = 0;
  std::size_t translated_morphisms = 0;
  Report laws;

  bool ok() const { return laws.ok(); }
};

/// Enumerates continuous covering functors C → C'(S) and callitic
/// morphisms S → PI(Ω(C)), checks the transposes α ↦ (s ↦ α⁻¹(X'_s)) and
/// θ ↦ (x ↦ {s : x ∈ θ(s)}) are mutually inverse, and compares the
/// counts with Adjunction I on (C, L^∨(S)).
AdjunctionIIReport verify_adjunction_II(const FiniteTopCategory& c,
                                        const CompleteRestrictionMonoid& s,
                                        const HomBounds& bounds = {});

/// The frame as a CRM with mul = meet, unit = top and star = plus = id.
CompleteRestrictionMonoid frame_as_crm(const FiniteFrame& f);

}  // namespace etale
