#include "doctest.h"
#include "etale/duality.hpp"
#include "etale/functors.hpp"
#include "etale/instances.hpp"
#include "oracles.hpp"

using namespace etale;

TEST_CASE("filters of Ω(pair n) are the arrows") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto q = pair_groupoid_quantale(n);
    const auto cq = c_object(q);
    CHECK(cq.filters.size() == n * n);
    CHECK(cq.laws.ok());
    CHECK(check_x_laws(q, cq).ok());
    CHECK(cq.topcat.cat().identities().count() == n);
    CHECK(find_category_isomorphism(cq.topcat.cat(), pair_groupoid(n)).has_value());
  }
}

TEST_CASE("filters of a quantal frame are its frame's completely prime filters") {
  for (const auto& q : {pair_groupoid_quantale(2), frame_as_quantale(chain_frame(3)),
                        frame_as_quantale(boolean_frame(3)),
                        omega_object(FiniteTopCategory::discrete(cyclic_group(2))).rqf}) {
    const auto cq = c_object(q);
    std::vector<Subset> members;
    for (const auto& f : cq.filters) members.push_back(f.members());
    std::sort(members.begin(), members.end());
    CHECK(members == oracle::cp_filters(q.frame()));
  }
  // The 3-chain as a quantal frame has two points.
  CHECK(c_object(frame_as_quantale(chain_frame(3))).filters.size() == 2);
}

TEST_CASE("filter calculus and the identity space") {
  for (const auto& q : {pair_groupoid_quantale(2), omega_object(pair2_coarse()).rqf,
                        omega_object(FiniteTopCategory::discrete(idempotent_monoid())).rqf,
                        omega_object(FiniteTopCategory::discrete(free_category(3, {{0, 1}, {1, 2}}))).rqf}) {
    const auto cq = c_object(q);
    CHECK(check_filter_calculus(q, cq).ok());
    CHECK(identity_space_vs_pt(q, cq));
    CHECK(validate_topcategory(cq.topcat).ok());
    CHECK(is_etale(cq.topcat));
  }
}

TEST_CASE("filter product follows the composition convention") {
  const auto q = pair_groupoid_quantale(2);
  const auto cq = c_object(q);
  for (Elem a = 0; a < cq.filters.size(); ++a)
    for (Elem b = 0; b < cq.filters.size(); ++b) {
      const auto ab = filter_product(q, cq.filters[a].members(), cq.filters[b].members());
      const Elem composite = cq.topcat.cat().compose(a, b);
      CHECK(ab.has_value() == (composite != kNone));
      if (ab) CHECK(*ab == cq.filters[composite].members());
    }
}

TEST_CASE("Ω and C on morphisms") {
  const auto pair2 = FiniteTopCategory::discrete(pair_groupoid(2));
  const ArrowMap swap = {3, 2, 1, 0};
  const auto omega = omega_object(pair2);
  const ElementMap omega_swap = omega_morphism(swap, pair2, pair2);
  CHECK(validate_rqf_morphism(omega_swap, omega.rqf, omega.rqf).ok());
  CHECK(is_rqf_isomorphism(omega_swap, omega.rqf, omega.rqf));

  const auto cq = c_object(omega.rqf);
  const ArrowMap c_swap = c_morphism(omega_swap, omega.rqf, cq, cq);
  CHECK(validate_covering_functor(c_swap, cq.topcat.cat(), cq.topcat.cat()).ok());
  CHECK(c_swap != identity_map(4));
}
