#include <random>

#include "doctest.h"
#include "etale/order.hpp"
#include "oracles.hpp"

using namespace etale;

namespace {

FiniteLattice m3() {
  return *FiniteLattice::from_order(
      FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

FiniteLattice n5() {
  return *FiniteLattice::from_order(FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
}

std::vector<Subset> library_filters(const FiniteLattice& f) {
  std::vector<Subset> out;
  for (const auto& p : enumerate_cp_filters(f)) out.push_back(p.members(f));
  std::sort(out.begin(), out.end());
  return out;
}

// Opens of a random topology on `points`: a distributive lattice that is
// not in general a chain, product or power set.
FiniteFrame random_opens_frame(std::mt19937& rng, std::size_t points) {
  std::vector<Subset> base;
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << points) - 1);
  for (int i = 0; i < 4; ++i) base.push_back(oracle::from_mask(points, pick(rng)));
  return opens_frame(FiniteTopology::from_base(points, oracle::intersection_closed(base)));
}

}  // namespace

TEST_CASE("poset validation names the broken law") {
  CHECK(validate_poset(FinitePoset::chain(4)).ok());

  std::vector<Subset> up = {make_subset(2, {1}), make_subset(2, {1})};
  auto r = validate_poset(FinitePoset(up));
  REQUIRE(r.violates("reflexivity"));
  CHECK(r.find("reflexivity")->witness == std::vector<std::size_t>{0});

  auto both = FinitePoset::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  CHECK(validate_poset(both).violates("antisymmetry"));

  auto gap = FinitePoset::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  auto t = validate_poset(gap);
  REQUIRE(t.violates("transitivity"));
  CHECK(t.find("transitivity")->witness.size() == 3);
}

TEST_CASE("lub and glb") {
  auto p = FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(p.lub(make_subset(4, {1, 2})) == Elem{3});
  CHECK(p.glb(make_subset(4, {1, 2})) == Elem{0});
  CHECK(p.lub(Subset(4)) == Elem{0});
  CHECK(p.glb(Subset(4)) == Elem{3});
  auto v = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(v.lub(make_subset(3, {1, 2})).has_value());
}

TEST_CASE("from_order reports the missing join") {
  Report why;
  CHECK_FALSE(FiniteLattice::from_order(FinitePoset::from_covers(3, {{0, 1}, {0, 2}}), &why));
  REQUIRE(why.violates("join-exists"));
  CHECK(why.find("join-exists")->witness == std::vector<std::size_t>{1, 2});
}

TEST_CASE("standard frames are distributive lattices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto c = chain_frame(n);
    CHECK(validate_lattice(c).ok());
    CHECK(is_frame(c));
  }
  for (std::size_t k = 0; k <= 4; ++k) {
    auto b = boolean_frame(k);
    CHECK(b.size() == (std::size_t{1} << k));
    CHECK(validate_lattice(b).ok());
    CHECK(is_frame(b));
  }
  auto p = product_frame(chain_frame(2), chain_frame(3));
  CHECK(p.size() == 6);
  CHECK(validate_lattice(p).ok());
  CHECK(is_frame(p));
}

TEST_CASE("M3 and N5 fail distributivity with a real witness") {
  for (const auto& l : {m3(), n5()}) {
    CHECK(validate_lattice(l).ok());
    auto v = is_frame(l);
    REQUIRE_FALSE(v);
    REQUIRE(v.witness.size() == 3);
    const Elem x = v.witness[0], y = v.witness[1], z = v.witness[2];
    CHECK(l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)));
  }
}

TEST_CASE("meet-prime filters agree with the subset search") {
  std::vector<FiniteFrame> frames;
  for (std::size_t n = 1; n <= 5; ++n) frames.push_back(chain_frame(n));
  for (std::size_t k = 0; k <= 4; ++k) frames.push_back(boolean_frame(k));
  frames.push_back(product_frame(chain_frame(3), boolean_frame(2)));
  for (const auto& f : frames) CHECK(library_filters(f) == oracle::cp_filters(f));
}

TEST_CASE("filter counts of chains and boolean lattices") {
  // A chain of n elements has n-1 points; the power set of k atoms has k.
  CHECK(enumerate_cp_filters(chain_frame(3)).size() == 2);
  CHECK(enumerate_cp_filters(chain_frame(5)).size() == 4);
  CHECK(enumerate_cp_filters(boolean_frame(3)).size() == 3);
  CHECK(enumerate_cp_filters(chain_frame(1)).empty());
}

TEST_CASE("property: random opens frames") {
  std::mt19937 rng(7);
  for (int round = 0; round < 40; ++round) {
    const auto f = random_opens_frame(rng, 2 + round % 4);
    CHECK(validate_lattice(f).ok());
    CHECK(is_frame(f));
    CHECK(library_filters(f) == oracle::cp_filters(f));
    CHECK(frame_spatial_check(f));
    const auto pt = pt_topology(f);
    CHECK(pt.laws.ok());
    CHECK(validate_topology(pt.topology).ok());
  }
}

TEST_CASE("point space laws on a product") {
  const auto f = product_frame(chain_frame(3), chain_frame(3));
  const auto pt = pt_topology(f);
  CHECK(pt.points.size() == 4);
  CHECK(pt.laws.ok());
  CHECK(pt.x_sets[f.bottom()].none());
  CHECK(pt.x_sets[f.top()].count() == pt.points.size());
}

TEST_CASE("down frame of an element") {
  const auto f = boolean_frame(3);
  const auto d = down_frame(f, 3);
  CHECK(d.frame.size() == 4);
  CHECK(is_frame(d.frame));
  CHECK(d.index[4] == kNone);
  for (Elem i = 0; i < d.frame.size(); ++i) CHECK(d.index[d.embed[i]] == i);
}
