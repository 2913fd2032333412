#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "etale/category.hpp"
#include "etale/common.hpp"
#include "etale/quantale.hpp"
#include "etale/report.hpp"

namespace etale {

/// Ω(C): the open sets of an étale category under U·V, d(U), r(U) with
/// unit C_o. Element i of `rqf` is the open set `opens[i]`, which is also
/// open i of the source topology.
struct OmegaResult {
  RestrictionQuantalFrame rqf;
  std::vector<Subset> opens;
};

/// Throws InvalidInput when `tc` is not a valid étale topological
/// category.
OmegaResult omega_object(const FiniteTopCategory& tc);

/// U ↦ F⁻¹(U), an element map Ω(dst) → Ω(src). Throws InvalidInput when a
/// preimage is not open.
ElementMap omega_morphism(const ArrowMap& f, const FiniteTopCategory& src,
                          const FiniteTopCategory& dst);

/// A completely prime filter of a quantal frame, held as its member set.
class QFilter {
 public:
  QFilter(Subset members, Elem cogenerator)
      : members_(std::move(members)), cogenerator_(cogenerator) {}

  const Subset& members() const { return members_; }
  Elem cogenerator() const { return cogenerator_; }
  bool contains(Elem a) const { return members_.test(a); }

  bool operator==(const QFilter& other) const { return members_ == other.members_; }

 private:
  Subset members_;
  Elem cogenerator_;
};

/// A* = {a* : a ∈ A} and A⁺ = {a⁺ : a ∈ A}.
Subset star_set(const EhresmannQuantalFrame& q, const Subset& a);
Subset plus_set(const EhresmannQuantalFrame& q, const Subset& a);

/// d(A) = (A*)↑ and r(A) = (A⁺)↑.
Subset filter_star(const EhresmannQuantalFrame& q, const Subset& a);
Subset filter_plus(const EhresmannQuantalFrame& q, const Subset& a);

/// (AB)↑ when d(A) = r(B); nullopt when the composite is undefined.
std::optional<Subset> filter_product(const EhresmannQuantalFrame& q, const Subset& a,
                                     const Subset& b);

/// C(Q): the completely prime filters of Q as an étale category.
struct FilterCategoryResult {
  std::vector<QFilter> filters;
  FiniteTopCategory topcat;
  /// x_sets[a] = X_a, the filters containing a.
  std::vector<Subset> x_sets;
  /// Partial isometries a whose X_a form the base τ.
  std::vector<Elem> base;
  /// Construction steps whose result was not itself a filter.
  Report laws;

  std::optional<Elem> find(const Subset& members) const;

  std::unordered_map<Subset, Elem> index;
};

/// Throws InvalidInput when `q` fails validate_rqf.
FilterCategoryResult c_object(const EhresmannQuantalFrame& q);

/// X_1 = all, X_e = identities, X_0 = ∅, X_{a∧b} = X_a ∩ X_b,
/// X_{a∨b} = X_a ∪ X_b, X_a = ∪{X_p : p ∈ PI, p ≤ a}, X_a open,
/// d(X_a) = X_{a*} and r(X_a) = X_{a⁺}.
Report check_x_laws(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq);

/// Filter calculus over every filter: aA* ⊆ A and A⁺a ⊆ A;
/// A = (aA*)↑ = (a d(A))↑ for a ∈ A ∩ PI (and dually); (aA)↑ is a filter
/// with d = A for identity A and PI a with a* ∈ A; filters sharing a PI
/// and d coincide; A* = B⁺ ⇔ d(A) = r(B).
Report check_filter_calculus(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq);

/// The identity subspace of C(Q) is homeomorphic to pt(e↓) via
/// A ↦ A ∩ e↓, with inverse F ↦ F↑.
Verdict identity_space_vs_pt(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq);

/// B ↦ φ⁻¹(B), an arrow map C(S) → C(R) for φ : R → S. Throws
/// InvalidInput when some preimage is not a filter of R.
ArrowMap c_morphism(const ElementMap& phi, const EhresmannQuantalFrame& r,
                    const FilterCategoryResult& c_r, const FilterCategoryResult& c_s);

}  // namespace etale
