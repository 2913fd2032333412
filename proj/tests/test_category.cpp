#include "doctest.h"
#include "etale/category.hpp"
#include "etale/instances.hpp"
#include "oracles.hpp"

using namespace etale;

TEST_CASE("pair groupoid conventions") {
  const auto c = pair_groupoid(3);
  CHECK(c.size() == 9);
  CHECK(validate_category(c).ok());
  // (x, y) has index 3x + y, d = (y, y), r = (x, x).
  const Elem xy = 0 * 3 + 1, yz = 1 * 3 + 2, xz = 0 * 3 + 2;
  CHECK(c.d(xy) == 4);
  CHECK(c.r(xy) == 0);
  CHECK(c.compose(xy, yz) == xz);
  CHECK(c.compose(yz, xy) == kNone);
  CHECK(c.identities().count() == 3);
}

TEST_CASE("free categories on small graphs") {
  const auto path = free_category(3, {{0, 1}, {1, 2}});
  CHECK(path.size() == 6);
  CHECK(validate_category(path).ok());
  const auto triangle = free_category(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.size() == 7);
  CHECK(validate_category(triangle).ok());
  CHECK_THROWS_AS(free_category(2, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(free_category(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}, 20),
                  BoundExceeded);
}

TEST_CASE("monoid categories") {
  CHECK(validate_category(cyclic_group(4)).ok());
  CHECK(validate_category(idempotent_monoid()).ok());
  Table bad(2);
  bad(0, 0) = 0;
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  bad(1, 1) = 1;
  CHECK_NOTHROW(monoid_category(bad, 0));
  bad(1, 0) = 0;  // 1·0 ≠ 1 with 0 the unit
  CHECK_THROWS_AS(monoid_category(bad, 0), InvalidInput);
}

TEST_CASE("local bisections match the definition") {
  for (const auto& c : {pair_groupoid(2), free_category(3, {{0, 1}, {0, 2}}), cyclic_group(3)}) {
    const auto lbs = local_bisections(c);
    std::size_t expected = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.size()); ++mask)
      if (oracle::is_local_bisection(c, oracle::from_mask(c.size(), mask))) ++expected;
    CHECK(lbs.size() == expected);
    for (const auto& s : lbs) CHECK(oracle::is_local_bisection(c, s));
  }
  // Partial injections of a 3-set.
  CHECK(local_bisections(pair_groupoid(3)).size() == 34);
}

TEST_CASE("étale and non-étale topologies on the pair groupoid") {
  const auto c = pair_groupoid(2);
  CHECK(is_etale(FiniteTopCategory::discrete(c)));
  CHECK(is_etale(pair2_coarse()));
  CHECK(validate_topcategory(pair2_coarse()).ok());
  const FiniteTopCategory indiscrete(c, FiniteTopology::indiscrete(4));
  CHECK(validate_topcategory(indiscrete).ok());
  CHECK_FALSE(is_etale(indiscrete));
  const FiniteTopCategory broken(
      c, FiniteTopology::from_opens(4, {Subset(4), make_subset(4, {0}), full_subset(4)}));
  CHECK(validate_topcategory(broken).violates("d-continuous"));
}

TEST_CASE("covering functors agree with exhaustive search") {
  const auto pair2 = FiniteTopCategory::discrete(pair_groupoid(2));
  const auto disc2 = FiniteTopCategory::discrete(discrete_category(2));
  const auto ez = FiniteTopCategory::discrete(idempotent_monoid());
  const auto z2 = FiniteTopCategory::discrete(cyclic_group(2));
  for (const auto& [a, b] : std::vector<std::pair<FiniteTopCategory, FiniteTopCategory>>{
           {pair2, pair2}, {disc2, pair2}, {pair2, disc2}, {disc2, disc2}, {ez, ez}, {z2, z2},
           {pair2_coarse(), pair2_coarse()}, {pair2, pair2_coarse()}}) {
    const auto found = enumerate_covering_functors(a, b);
    CHECK(found.size() == oracle::count_covering_functors(a, b));
    for (const auto& f : found) {
      CHECK(validate_covering_functor(f, a.cat(), b.cat()).ok());
      CHECK(oracle::is_covering_functor(f, a.cat(), b.cat()));
    }
  }
}

TEST_CASE("covering functor failures") {
  const auto pair2 = pair_groupoid(2);
  const auto disc2 = discrete_category(2);
  auto r = validate_covering_functor({0, 3}, disc2, pair2);
  CHECK(r.violates("d-surjective"));
  CHECK(validate_functor({0, 3}, disc2, pair2).ok());
  CHECK(validate_functor({0, 1, 2, 3}, pair2, pair2).ok());
  CHECK(validate_functor({0, 2, 1, 3}, pair2, pair2).violates("functor-d"));
}

TEST_CASE("category isomorphism search") {
  const auto a = pair_groupoid(3);
  auto iso = find_category_isomorphism(a, a);
  REQUIRE(iso);
  CHECK(is_category_isomorphism(*iso, a, a));
  CHECK_FALSE(find_category_isomorphism(pair_groupoid(2), free_category(2, {{0, 1}, {0, 1}})));
}
