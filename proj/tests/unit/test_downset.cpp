#include "doctest.h"
#include "lofs/downset.hpp"
#include "lofs/enumerate.hpp"
#include "oracles.hpp"

using namespace lofs;

namespace {

std::vector<PreorderRef> all_up_to(std::size_t n) {
  std::vector<PreorderRef> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_preorders(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Down-closed subsets by testing every subset.
std::size_t count_down_closed(const FinPreorder& x) {
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << x.size()); ++mask) {
    bool closed = true;
    for (auto j : oracle::members(mask, x.size()))
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x.leq(i, j) && !(mask & (1U << i))) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("down-set lattices") {
  CHECK(*downsets(objects::chain(2)).carrier == *objects::chain(3));
  CHECK(is_isomorphic(*downsets(objects::antichain(2)).carrier, *objects::diamond()));
  CHECK(downsets(objects::empty()).sets.size() == 1);

  const auto p = downsets(objects::chain(2));
  CHECK(p.sets.front().none());
  CHECK(p.sets.back().count() == 2);
  CHECK(p.carrier->label(1) == "{0}");

  for (const auto& x : all_up_to(5)) {
    CHECK(downsets(x).sets.size() == count_down_closed(*x));
    CHECK(count_down_sets(*x, 1000) == count_down_closed(*x));
    CHECK(upsets(x).sets.size() == count_down_closed(*x));
  }
}

TEST_CASE("unit") {
  const auto c2 = objects::chain(2);
  const auto pc2 = downsets(c2);
  CHECK(pc2.sets[downset_unit(pc2)(1)].count() == 2);

  const auto a2 = objects::antichain(2);
  const auto pa2 = downsets(a2);
  const auto a = pa2.sets[downset_unit(pa2)(0)];
  CHECK(a.count() == 1);
  CHECK(a.test(0));

  for (const auto& x : all_up_to(5)) CHECK(is_full(downset_unit(downsets(x))));
}

TEST_CASE("multiplication") {
  const auto x = objects::chain(2);
  const auto px = downsets(x);
  const auto ppx = downsets(px.carrier);
  const auto m = downset_mult(ppx, px);
  CHECK(px.sets[m(0)].none());
  const auto unit_p = downset_unit(ppx);
  for (Elem phi = 0; phi < px.sets.size(); ++phi) CHECK(m(unit_p(phi)) == phi);
}

TEST_CASE("monad laws") {
  for (const auto& x : all_up_to(3)) CHECK(check_downset_monad_laws(x).all());
}

TEST_CASE("algebras are the complete lattices") {
  const auto d = objects::diamond();
  const auto alpha = downset_algebra(d);
  REQUIRE(alpha);
  const auto pd = downsets(d);
  CHECK(pd.sets.size() == 6);
  for (Elem e = 0; e < pd.sets.size(); ++e) CHECK((*alpha)(e) == *least_upper_bound(*d, pd.sets[e]));

  CHECK_FALSE(downset_algebra(objects::antichain(2)));
  const auto one = downset_algebra(objects::one());
  REQUIRE(one);
  CHECK(one->assignment() == Assignment{0, 0});

  for (const auto& x : all_up_to(4)) {
    CHECK(downset_algebra(x).has_value() == is_complete_lattice(*x));
    CHECK(downset_algebra(x, Equality::strict).has_value() == is_complete_lattice_strict(*x));
  }
}

TEST_CASE("lax idempotency") {
  CHECK(check_lax_idempotent_P(objects::antichain(2)));
  CHECK(check_lax_idempotent_P(objects::chain(3)));
  CHECK(check_lax_idempotent_P(objects::empty()));
  for (const auto& x : all_up_to(3)) CHECK(check_lax_idempotent_P(x));
}

TEST_CASE("size bound") {
  Limits tight;
  tight.max_carrier = 3;
  CHECK_THROWS_AS(downsets(objects::antichain(2), tight), Error);
}
