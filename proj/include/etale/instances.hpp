#pragma once

#include <string>
#include <utility>
#include <vector>

#include "etale/category.hpp"
#include "etale/common.hpp"
#include "etale/quantale.hpp"

namespace etale {

/// Pair groupoid on n objects. Arrow (x, y) has index x*n + y, with
/// d(x, y) = (y, y), r(x, y) = (x, x) and (x, y)(y, z) = (x, z).
FiniteCategory pair_groupoid(std::size_t n);

/// n objects and no other arrows.
FiniteCategory discrete_category(std::size_t n);

FiniteCategory empty_category();

/// One-object category of a finite monoid; arrow i is monoid element i.
/// Throws InvalidInput unless `mul` is associative with two-sided unit.
FiniteCategory monoid_category(const Table& mul, Elem unit);

/// Cyclic group Z_n as a one-object category.
FiniteCategory cyclic_group(std::size_t n);

/// {e, z} with zz = z.
FiniteCategory idempotent_monoid();

/// Free category on an acyclic graph. Arrows 0..objects-1 are the
/// identities, then one arrow per edge in input order, then longer paths
/// by length. An edge (s, t) runs s → t, so its d is s and its r is t.
/// Throws InvalidInput on a cycle and BoundExceeded past `max_arrows`.
FiniteCategory free_category(std::size_t objects,
                             const std::vector<std::pair<Elem, Elem>>& edges,
                             std::size_t max_arrows = 64);

/// Pair groupoid on two objects with opens ∅, C_o, {(0,1),(1,0)}, C.
/// Étale, but its identity space is indiscrete and so not sober.
FiniteTopCategory pair2_coarse();

/// P(pair groupoid) as a restriction quantal frame via Ω of the discrete
/// topology.
RestrictionQuantalFrame pair_groupoid_quantale(std::size_t n);

}  // namespace etale
