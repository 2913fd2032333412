#include "doctest.h"
#include "etale/functors.hpp"
#include "etale/instances.hpp"
#include "etale/quantale.hpp"
#include "oracles.hpp"

using namespace etale;

namespace {

std::vector<FiniteTopCategory> etale_examples() {
  return {FiniteTopCategory::discrete(pair_groupoid(1)),
          FiniteTopCategory::discrete(pair_groupoid(2)),
          FiniteTopCategory::discrete(discrete_category(3)),
          FiniteTopCategory::discrete(empty_category()),
          FiniteTopCategory::discrete(idempotent_monoid()),
          FiniteTopCategory::discrete(cyclic_group(3)),
          FiniteTopCategory::discrete(free_category(3, {{0, 1}, {1, 2}})),
          FiniteTopCategory::discrete(free_category(2, {{0, 1}, {0, 1}})),
          pair2_coarse()};
}

}  // namespace

TEST_CASE("Ω of an étale category is a restriction quantal frame") {
  for (const auto& c : etale_examples()) {
    const auto omega = omega_object(c);
    CHECK(omega.rqf.size() == c.topology().open_count());
    const auto r = validate_rqf(omega.rqf);
    CHECK_MESSAGE(r.ok(), r.summary());
  }
}

TEST_CASE("Ω rejects a non-étale topology") {
  const FiniteTopCategory c(pair_groupoid(2), FiniteTopology::indiscrete(4));
  CHECK_THROWS_AS(omega_object(c), InvalidInput);
}

TEST_CASE("partial isometries of Ω are the open local bisections") {
  for (const auto& c : etale_examples()) {
    const auto omega = omega_object(c);
    const Subset pi = partial_isometries(omega.rqf);
    CHECK(pi == oracle::partial_isometries(omega.rqf));
    for (Elem u = 0; u < omega.opens.size(); ++u)
      CHECK(pi.test(u) == oracle::is_local_bisection(c.cat(), omega.opens[u]));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto q = pair_groupoid_quantale(n);
    CHECK(q.size() == (std::size_t{1} << (n * n)));
    CHECK(partial_isometries(q).count() == oracle::partial_injections(n));
  }
  CHECK(oracle::partial_injections(2) == 7);
  CHECK(oracle::partial_injections(3) == 34);
}

TEST_CASE("compatibility lemma against the definition") {
  for (const auto& c : etale_examples()) {
    const auto q = omega_object(c).rqf;
    CHECK(compatibility_lemma_check(q));
    const Subset pi = oracle::partial_isometries(q);
    for_each_member(pi, [&](Elem a) {
      for_each_member(pi, [&](Elem b) {
        CHECK(pi.test(q.join(a, b)) == oracle::compatible(q, a, b));
        CHECK(compatible(q, a, b) == oracle::compatible(q, a, b));
      });
    });
  }
}

TEST_CASE("restriction identities hold on partial isometries only") {
  const auto q = pair_groupoid_quantale(2);
  // A = {(0,0), (1,0)} and F = {(0,0)}: FA = {(0,0)} but A(FA)* = A.
  Elem a = kNone, f = kNone;
  const auto omega = omega_object(FiniteTopCategory::discrete(pair_groupoid(2)));
  for (Elem u = 0; u < omega.opens.size(); ++u) {
    if (omega.opens[u] == make_subset(4, {0, 2})) a = u;
    if (omega.opens[u] == make_subset(4, {0})) f = u;
  }
  REQUIRE(a != kNone);
  REQUIRE(f != kNone);
  CHECK(q.mul(f, a) != q.mul(a, q.star(q.mul(f, a))));
  CHECK_FALSE(partial_isometries(q).test(a));
  CHECK(validate_rqf(q).ok());
}

TEST_CASE("every element is a join of partial isometries") {
  for (const auto& c : etale_examples()) {
    const auto q = omega_object(c).rqf;
    CHECK(every_element_is_join_of_pi(q));
    CHECK(pi_is_order_ideal(q));
  }
}

TEST_CASE("a frame is a quantal frame under meet") {
  const auto f = product_frame(chain_frame(2), chain_frame(3));
  const auto q = frame_as_quantale(f);
  CHECK(validate_rqf(q).ok());
  CHECK(partial_isometries(q).count() == f.size());
}

TEST_CASE("quantale failures are witnessed") {
  const auto q = pair_groupoid_quantale(2);
  Table mul = q.mul_table();
  mul(q.unit(), 1) = 0;
  const FiniteQuantale broken(q.frame(), mul, q.unit());
  auto r = validate_quantale(broken);
  REQUIRE(r.violates("unit-law"));
  CHECK_FALSE(r.find("unit-law")->witness.empty());

  std::vector<Elem> star = q.star_map();
  star[q.top()] = q.bottom();
  const EhresmannQuantalFrame e(FiniteQuantale(q.frame(), q.mul_table(), q.unit()), star, q.plus_map());
  auto r2 = validate_rqf(e);
  CHECK_FALSE(r2.ok());
  for (const auto& v : r2.violations()) CHECK_FALSE(v.witness.empty());
}

TEST_CASE("the category of an Ehresmann quantal frame") {
  const auto q = pair_groupoid_quantale(2);
  const auto c = cat_of_ehresmann(q);
  CHECK(c.size() == q.size());
  CHECK(validate_category(c).ok());
  CHECK(c.identities() == q.projections());
}
