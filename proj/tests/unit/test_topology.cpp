#include <set>

#include "doctest.h"
#include "lofs/enumerate.hpp"
#include "lofs/topology.hpp"

using namespace lofs;

namespace {

std::vector<PreorderRef> all_up_to(std::size_t n, bool posets_only = false) {
  std::vector<PreorderRef> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_preorders(k, {Isomorphism::up_to_iso, posets_only});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

MonotoneMap map_of(const PreorderRef& x, const PreorderRef& y, Assignment a) { return MonotoneMap(x, y, std::move(a)); }

std::set<std::vector<std::size_t>> as_sets(const std::vector<DynBitset>& family) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& s : family) out.insert(s.to_indices());
  return out;
}

DynBitset subset(std::size_t n, std::initializer_list<std::size_t> members) {
  DynBitset s(n);
  for (auto m : members) s.set(m);
  return s;
}

}  // namespace

TEST_CASE("Scott opens") {
  CHECK(as_sets(scott_opens(*objects::chain(2))) == std::set<std::vector<std::size_t>>{{}, {1}, {0, 1}});
  CHECK(scott_opens(*objects::antichain(2)).size() == 4);
  CHECK_THROWS_AS(scott_opens(*objects::indiscrete(2)), Error);
  for (const auto& l : all_up_to(5, true)) CHECK(as_sets(scott_opens(*l)) == as_sets(upsets(l).sets));
}

TEST_CASE("way below") {
  const auto c3 = way_below(*objects::chain(3));
  CHECK(c3[0].test(2));
  const auto d = way_below(*objects::diamond());
  CHECK(d[1].test(3));
  CHECK(d[3].test(3));
  for (const auto& l : all_up_to(5, true)) {
    const auto wb = way_below(*l);
    for (std::size_t x = 0; x < l->size(); ++x)
      for (std::size_t y = 0; y < l->size(); ++y) CHECK(wb[x].test(y) == l->leq(x, y));
  }
}

TEST_CASE("continuous lattices") {
  CHECK(is_continuous_lattice(*objects::diamond()));
  CHECK_FALSE(is_continuous_lattice(*objects::vee()));
  CHECK(is_continuous_lattice(*objects::one()));
  CHECK_FALSE(is_continuous_lattice(*objects::indiscrete(2)));
  for (const auto& l : all_up_to(5, true)) CHECK(is_continuous_lattice(*l) == is_complete_lattice(*l));
}

TEST_CASE("filter spaces") {
  const auto fone = filter_space(FiniteSpace{objects::one()});
  CHECK(*fone.points() == *objects::chain(2));
  // the larger filter is the improper one
  CHECK(fone.filters.sets[1].count() == 2);

  const auto c2 = objects::chain(2);
  const auto fc2 = filter_space(FiniteSpace{c2});
  CHECK(*fc2.points() == *objects::chain(3));
  const auto unit = filter_unit(fc2);
  std::set<std::vector<std::size_t>> eta1;
  fc2.filters.sets[unit(1)].for_each([&](std::size_t u) { eta1.insert(fc2.opens.sets[u].to_indices()); });
  CHECK(eta1 == std::set<std::vector<std::size_t>>{{1}, {0, 1}});

  for (const auto& x : all_up_to(4)) {
    const auto fx = filter_space(FiniteSpace{x});
    CHECK(as_sets(fx.filters.sets) == as_sets(filters_by_definition(fx.opens)));
    CHECK(filter_specialization(fx) == *fx.points());
    for (const auto& f : fx.filters.sets) CHECK(is_filter(fx.opens, f));
  }
}

TEST_CASE("filter monad laws") {
  for (const auto& x : all_up_to(3)) CHECK(check_filter_monad_laws(FiniteSpace{x}).all());
}

TEST_CASE("filter algebras") {
  CHECK(filter_algebra(FiniteSpace{objects::diamond()}));
  CHECK_FALSE(filter_algebra(FiniteSpace{objects::antichain(2)}));
  const auto one = filter_algebra(FiniteSpace{objects::one()});
  REQUIRE(one);
  CHECK(one->assignment() == Assignment{0, 0});
  for (const auto& x : all_up_to(4)) {
    CHECK(filter_algebra(FiniteSpace{x}).has_value() == is_complete_lattice(*x));
    CHECK(filter_algebra(FiniteSpace{x}, Equality::strict).has_value() == is_continuous_lattice(*x));
  }
}

TEST_CASE("f lower star") {
  const auto d = objects::diamond();
  const auto id = MonotoneMap::identity(d);
  CHECK(f_lower_star(id) == MonotoneMap::identity(upsets(d).carrier));

  const auto a2 = objects::antichain(2);
  const auto j = map_of(a2, d, {1, 2});
  const auto oa = upsets(a2);
  const auto od = upsets(d);
  const auto fs = f_lower_star(j, oa, od);
  CHECK(od.sets[fs(oa.at(subset(2, {0})))] == subset(4, {1, 3}));

  const auto top = MonotoneMap::constant(objects::one(), d, 3);
  const auto ts = f_lower_star(top);
  CHECK(ts(0) == 0);  // only the empty open misses the top

  CHECK(is_top_coalgebra(j));
  CHECK_FALSE(is_top_coalgebra(map_of(d, objects::chain(2), {0, 0, 1, 1})));
  CHECK(is_top_coalgebra(id));
}

TEST_CASE("top-coalgebras are the embeddings between T0 spaces") {
  const auto objs = all_up_to(4, true);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      const auto hom = hom_poset(x, y);
      for (std::size_t i = 0; i < hom.maps.size(); ++i) {
        const auto f = hom.map(i);
        CHECK(is_top_coalgebra(f) == is_subspace_embedding(f));
        CHECK(is_subspace_embedding(f) == is_order_embedding(f));
      }
    }
}

TEST_CASE("finite ordinal stages") {
  for (std::size_t m = 0; m < 6; ++m)
    for (std::size_t m2 = m + 1; m2 <= 6; ++m2) {
      const auto small = objects::chain(m + 1);
      const auto big = objects::chain(m2 + 1);
      Assignment inc(m + 1);
      for (Elem i = 0; i <= m; ++i) inc[i] = i;
      const MonotoneMap f(small, big, inc);
      CHECK(is_continuous_lattice(*small));
      CHECK(is_scott_continuous(f));
      CHECK(is_subspace_embedding(f));
    }
}
