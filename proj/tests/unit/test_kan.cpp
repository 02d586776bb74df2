#include "doctest.h"
#include "lofs/enumerate.hpp"
#include "lofs/kan.hpp"
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

MonotoneMap map_of(const PreorderRef& x, const PreorderRef& y, Assignment a) { return MonotoneMap(x, y, std::move(a)); }

// Least g with f <= g . j by scanning all of hom(Y, A), then the
// restriction condition. Independent of the library's search.
std::optional<Assignment> naive_lan(const MonotoneMap& j, const MonotoneMap& f) {
  const auto& a = f.target();
  std::vector<Assignment> above;
  for (const auto& g : oracle::monotone_maps(j.target(), a)) {
    bool ok = true;
    for (std::size_t x = 0; x < j.source().size(); ++x) ok = ok && a.leq(f(x), g[j(x)]);
    if (ok) above.push_back(g);
  }
  for (const auto& g : above) {
    bool least = true;
    for (const auto& h : above)
      for (std::size_t y = 0; y < g.size(); ++y) least = least && a.leq(g[y], h[y]);
    if (!least) continue;
    for (std::size_t x = 0; x < j.source().size(); ++x)
      if (!a.equivalent(g[j(x)], f(x))) return std::nullopt;
    return g;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("extensions") {
  const auto a2 = objects::antichain(2);
  const auto c2 = objects::chain(2);
  const auto d = objects::diamond();
  const auto j = map_of(a2, d, {1, 2});

  const auto f = map_of(a2, c2, {0, 1});
  CHECK(lan_extension(MonotoneMap::identity(a2), f)->ext == f);

  const auto e = lan_extension(j, f);
  REQUIRE(e);
  CHECK(e->ext(0) == 0);
  CHECK(e->ext(3) == 1);

  CHECK_FALSE(lan_extension(j, MonotoneMap::identity(a2)));
  CHECK_FALSE(has_lan_extension(j, MonotoneMap::identity(a2)));
}

TEST_CASE("extension search agrees with the naive oracle") {
  const auto objs = all_up_to(3);
  std::size_t checked = 0;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      const auto js = hom_poset(x, y);
      for (std::size_t i = 0; i < js.maps.size(); ++i) {
        const auto j = js.map(i);
        for (const auto& a : objs) {
          const auto fs = hom_poset(x, a);
          for (std::size_t k = 0; k < fs.maps.size(); ++k) {
            const auto f = fs.map(k);
            const auto lib = lan_extension(j, f);
            const auto naive = naive_lan(j, f);
            REQUIRE(lib.has_value() == naive.has_value());
            if (lib) CHECK(equivalent_maps(lib->ext, MonotoneMap::unchecked(y, a, *naive)));
            CHECK(has_lan_extension(j, f) == lib.has_value());
            ++checked;
          }
        }
      }
    }
  CHECK(checked > 1000);
}

TEST_CASE("Kan injectivity") {
  const auto fam = embedding_family(3);
  CHECK(kan_injective(objects::diamond(), fam));
  const auto failure = kan_injectivity_failure(objects::antichain(2), fam);
  REQUIRE(failure);

  const GeneratorFamily ids = GeneratorFamily::of({MonotoneMap::identity(objects::chain(2)), MonotoneMap::identity(objects::vee())});
  for (const auto& a : all_up_to(3)) CHECK(kan_injective(a, ids));

  for (const auto& j : fam.members) CHECK(is_order_embedding(j));
}

TEST_CASE("classification on small objects") {
  const auto rows = classify_injectives(2, 2);
  REQUIRE(rows.size() == 5);
  std::size_t complete = 0;
  for (const auto& r : rows) {
    CHECK(r.agrees());
    complete += r.complete_lattice;
  }
  // one, c2 and the two-element indiscrete preorder
  CHECK(complete == 3);

  for (const auto& r : classify_injectives(4, 3)) {
    CHECK(r.agrees());
    if (is_isomorphic(*r.object, *objects::diamond())) CHECK(r.kan_injective);
  }
}
