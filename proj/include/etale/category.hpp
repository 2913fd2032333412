#pragma once

#include <optional>
#include <vector>

#include "etale/common.hpp"
#include "etale/report.hpp"
#include "etale/topology.hpp"

namespace etale {

/// Finite small category on arrows 0..n-1. Composition follows the
/// convention ab defined iff d(a) = r(b); d(ab) = d(b), r(ab) = r(a).
class FiniteCategory {
 public:
  FiniteCategory() = default;
  /// `comp(a, b)` is kNone where the composite is undefined. Not validated.
  FiniteCategory(Subset identities, std::vector<Elem> d, std::vector<Elem> r, Table comp);

  std::size_t size() const { return d_.size(); }
  const Subset& identities() const { return identities_; }
  bool is_identity(Elem a) const { return identities_.test(a); }
  Elem d(Elem a) const { return d_[a]; }
  Elem r(Elem a) const { return r_[a]; }
  const std::vector<Elem>& d_map() const { return d_; }
  const std::vector<Elem>& r_map() const { return r_; }
  bool composable(Elem a, Elem b) const { return comp_(a, b) != kNone; }
  /// ab, or kNone.
  Elem compose(Elem a, Elem b) const { return comp_(a, b); }
  const Table& composition() const { return comp_; }

  /// AB = {ab : a ∈ A, b ∈ B, d(a) = r(b)}.
  Subset product(const Subset& a, const Subset& b) const;
  Subset d_image(const Subset& a) const { return image(d_, a, size()); }
  Subset r_image(const Subset& a) const { return image(r_, a, size()); }

  bool operator==(const FiniteCategory&) const = default;

 private:
  Subset identities_;
  std::vector<Elem> d_;
  std::vector<Elem> r_;
  Table comp_;
};

/// A finite category with a topology on its arrow set.
class FiniteTopCategory {
 public:
  FiniteTopCategory() = default;
  FiniteTopCategory(FiniteCategory cat, FiniteTopology topology)
      : cat_(std::move(cat)), topology_(std::move(topology)) {}

  static FiniteTopCategory discrete(FiniteCategory cat);

  const FiniteCategory& cat() const { return cat_; }
  const FiniteTopology& topology() const { return topology_; }
  std::size_t size() const { return cat_.size(); }

 private:
  FiniteCategory cat_;
  FiniteTopology topology_;
};

Report validate_category(const FiniteCategory& c);

/// Category laws, topology laws, and continuity of d, r and m. Continuity
/// of m is taken in the subspace C∗C of the product C × C.
Report validate_topcategory(const FiniteTopCategory& tc);

bool is_local_bisection(const FiniteCategory& c, const Subset& a);

/// Every subset on which d and r are both injective, in increasing mask
/// order of the arrows chosen.
std::vector<Subset> local_bisections(const FiniteCategory& c);

/// d and r are open maps and every open set is a union of open local
/// bisections. The witness names the failing open set index.
Verdict is_etale(const FiniteTopCategory& tc);

bool c_o_is_open(const FiniteTopCategory& tc);

/// Preserves identities, d, r and composition.
Report validate_functor(const ArrowMap& f, const FiniteCategory& src, const FiniteCategory& dst);

/// Functor laws plus d-injective, d-surjective, r-injective, r-surjective.
Report validate_covering_functor(const ArrowMap& f, const FiniteCategory& src,
                                 const FiniteCategory& dst);

Verdict continuity_check(const ArrowMap& f, const FiniteTopCategory& src,
                         const FiniteTopCategory& dst);

/// A bijective functor whose inverse is a functor.
Verdict is_category_isomorphism(const ArrowMap& f, const FiniteCategory& src,
                                const FiniteCategory& dst);

/// Backtracking search for an isomorphism of categories, pruned by
/// identity flags and d/r degree invariants.
std::optional<ArrowMap> find_category_isomorphism(const FiniteCategory& a, const FiniteCategory& b);

ArrowMap identity_map(std::size_t n);
/// (f ∘ g)(x) = f(g(x)).
std::vector<Elem> compose_maps(const std::vector<Elem>& f, const std::vector<Elem>& g);

}  // namespace etale
