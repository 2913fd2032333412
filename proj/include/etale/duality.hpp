#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "etale/category.hpp"
#include "etale/common.hpp"
#include "etale/functors.hpp"
#include "etale/quantale.hpp"
#include "etale/report.hpp"

namespace etale {

/// Preserves binary joins and 0, binary meets and top, multiplication,
/// unit, star and plus, and maps partial isometries to partial
/// isometries.
Report validate_rqf_morphism(const ElementMap& theta, const EhresmannQuantalFrame& src,
                             const EhresmannQuantalFrame& dst);

/// A bijective morphism whose inverse is again a morphism.
Verdict is_rqf_isomorphism(const ElementMap& theta, const EhresmannQuantalFrame& src,
                           const EhresmannQuantalFrame& dst);

/// χ : Q → Ω(C(Q)), a ↦ X_a.
struct ComparisonChi {
  FilterCategoryResult cq;
  OmegaResult omega;
  ElementMap map;
  Report laws;
};

/// Checks X_{ab} = X_a·X_b, (X_a)* = X_{a*}, (X_a)⁺ = X_{a⁺}, that χ
/// sends partial isometries to partial isometries, and the full morphism
/// conditions. Throws InvalidInput when `q` is not a valid RQF.
ComparisonChi build_chi(const EhresmannQuantalFrame& q);

/// χ is injective (witness: a, b with X_a = X_b) and onto the opens of
/// C(Q) (witness: an unreached open).
Verdict is_spatial(const EhresmannQuantalFrame& q, const FilterCategoryResult& cq);
Verdict is_spatial(const EhresmannQuantalFrame& q);

/// Q is spatial exactly when e↓ is; fails with a witness if the two
/// answers disagree.
Verdict spatial_iff_projections_spatial(const EhresmannQuantalFrame& q);

/// ω : C → C(Ω(C)), x ↦ O_x.
struct ComparisonOmega {
  OmegaResult omega;
  FilterCategoryResult c_omega;
  ArrowMap map;
  Report laws;
};

/// Checks that ω is a continuous covering functor with ω⁻¹(X_U) = U.
/// Throws InvalidInput when `c` is not étale.
ComparisonOmega build_omega_map(const FiniteTopCategory& c);

/// ω is a bijection and ω(U) = X_U for each open U.
Verdict is_sober(const FiniteTopCategory& c, const ComparisonOmega& omega);
Verdict is_sober(const FiniteTopCategory& c);

/// C is sober exactly when its identity space is; fails if they disagree.
Verdict sober_iff_identity_space_sober(const FiniteTopCategory& c);

/// α ↦ α⁻¹χ: q ↦ α⁻¹(X_q) as an open of C, or kNone where the preimage is
/// not open.
ElementMap transpose_forward(const ArrowMap& alpha, const FiniteTopCategory& c,
                             const FilterCategoryResult& cq);

/// β ↦ β⁻¹ω: x ↦ {q : x ∈ β(q)} as a filter of Q, or kNone where that set
/// is not a completely prime filter.
ArrowMap transpose_backward(const ElementMap& beta, const FiniteTopCategory& c,
                            const FilterCategoryResult& cq, std::size_t q_size);

/// Continuous covering functors src → dst, in lexicographic order of
/// arrow maps.
std::vector<ArrowMap> enumerate_covering_functors(const FiniteTopCategory& src,
                                                  const FiniteTopCategory& dst);

/// RQF morphisms src → dst, in lexicographic order of their values on
/// the join-irreducibles of src. A morphism is fixed by those values.
/// With `isomorphisms_only`, join-irreducibles go to join-irreducibles
/// and only bijections are kept. Stops after `limit` results.
std::vector<ElementMap> enumerate_rqf_morphisms(const EhresmannQuantalFrame& src,
                                                const EhresmannQuantalFrame& dst,
                                                bool isomorphisms_only = false,
                                                std::size_t limit = static_cast<std::size_t>(-1));

std::optional<ElementMap> find_rqf_isomorphism(const EhresmannQuantalFrame& a,
                                               const EhresmannQuantalFrame& b);

/// Join-irreducible elements: x ≠ 0 that are not the join of the
/// elements strictly below them.
std::vector<Elem> join_irreducibles(const FiniteLattice& l);

struct HomBounds {
  std::size_t max_arrows = 12;
  std::size_t max_elements = 64;
};

struct AdjunctionReport {
  std::size_t functors = 0;
  std::size_t morphisms = 0;
  std::size_t naturality_squares = 0;
  Report laws;

  bool ok() const { return laws.ok(); }
};

/// Enumerates Hom(C, C(Q)) and Hom(Q, Ω(C)), checks that both transposes
/// land in the other hom-set and are mutually inverse, and checks the
/// naturality squares for every continuous covering endofunctor of C
/// (precomposition) and every RQF endomorphism of Q (postcomposition).
/// Throws BoundExceeded when C has more than max_arrows arrows or Q or
/// Ω(C) more than max_elements elements, and InvalidInput when C is not
/// étale or Q is not a valid RQF.
AdjunctionReport verify_adjunction_I(const FiniteTopCategory& c, const EhresmannQuantalFrame& q,
                                     const HomBounds& bounds = {});

}  // namespace etale
