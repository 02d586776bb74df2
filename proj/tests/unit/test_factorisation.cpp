#include <set>

#include "doctest.h"
#include "lofs/adjunction.hpp"
#include "lofs/enumerate.hpp"
#include "lofs/factorisation.hpp"
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

template <class Fn>
void for_all_maps(std::size_t n, Fn&& fn) {
  const auto objs = all_up_to(n);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      const auto hom = hom_poset(a, b);
      for (std::size_t i = 0; i < hom.maps.size(); ++i) fn(hom.map(i));
    }
}

// Kf straight from its definition: every subset of A that is down-closed,
// paired with every b above the image.
struct NaiveK {
  std::vector<std::pair<std::uint32_t, Elem>> elements;
  bool leq(std::size_t i, std::size_t j) const;
  const FinPreorder* b = nullptr;
};

bool NaiveK::leq(std::size_t i, std::size_t j) const {
  const auto [s, x] = elements[i];
  const auto [t, y] = elements[j];
  return (s & ~t) == 0 && b->leq(x, y);
}

NaiveK naive_k(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  NaiveK k;
  k.b = &b;
  for (std::uint32_t mask = 0; mask < (1U << a.size()); ++mask) {
    bool down = true;
    for (auto j : oracle::members(mask, a.size()))
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a.leq(i, j) && !(mask & (1U << i))) down = false;
    if (!down) continue;
    for (Elem y = 0; y < b.size(); ++y) {
      bool bound = true;
      for (auto i : oracle::members(mask, a.size())) bound = bound && b.leq(f(i), y);
      if (bound) k.elements.emplace_back(mask, y);
    }
  }
  return k;
}

std::uint32_t mask_of(const DynBitset& s) {
  std::uint32_t m = 0;
  s.for_each([&](std::size_t i) { m |= 1U << i; });
  return m;
}

MonotoneMap map_of(const PreorderRef& x, const PreorderRef& y, Assignment a) { return MonotoneMap(x, y, std::move(a)); }

}  // namespace

TEST_CASE("factorisation examples") {
  const auto a2 = objects::antichain(2);
  const auto one = objects::one();
  const auto c2 = objects::chain(2);

  CHECK(is_isomorphic(*factorise(MonotoneMap::to_terminal(a2)).k, *objects::diamond()));
  CHECK(*factorise(MonotoneMap::identity(one)).k == *c2);

  const auto d = factorise(MonotoneMap::constant(one, c2, 1));
  REQUIRE(d.elements.size() == 3);
  std::set<std::pair<std::size_t, Elem>> got;
  for (std::size_t e = 0; e < 3; ++e) got.emplace(d.phi(e).count(), d.b(e));
  CHECK(got == std::set<std::pair<std::size_t, Elem>>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(d.phi(d.lambda(0)).count() == 1);
  CHECK(d.b(d.lambda(0)) == 1);
}

TEST_CASE("Kf matches its definition, and f = rho . lambda with lambda full") {
  for_all_maps(3, [](const MonotoneMap& f) {
    const auto d = factorise(f);
    const auto naive = naive_k(f);
    REQUIRE(d.elements.size() == naive.elements.size());
    std::vector<std::size_t> match(d.elements.size());
    for (std::size_t e = 0; e < d.elements.size(); ++e) {
      const std::pair<std::uint32_t, Elem> key{mask_of(d.phi(e)), d.b(e)};
      auto it = std::find(naive.elements.begin(), naive.elements.end(), key);
      REQUIRE(it != naive.elements.end());
      match[e] = static_cast<std::size_t>(it - naive.elements.begin());
      CHECK(in_k(f, d.phi(e), d.b(e)));
    }
    for (std::size_t e = 0; e < match.size(); ++e)
      for (std::size_t e2 = 0; e2 < match.size(); ++e2) CHECK(d.k->leq(e, e2) == naive.leq(match[e], match[e2]));
    CHECK(compose(d.lambda, d.rho) == f);
    CHECK(is_full(d.lambda));
  });
}

TEST_CASE("K on squares is functorial and natural") {
  const auto objs = all_up_to(2);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      const auto fs = hom_poset(a, b);
      for (std::size_t i = 0; i < fs.maps.size(); ++i) {
        const auto f = fs.map(i);
        const auto kf = factorise(f);
        CHECK(k_on_square(identity_square(f), kf, kf) == MonotoneMap::identity(kf.k));
        for (const auto& c : objs)
          for (const auto& e : objs) {
            const auto gs = hom_poset(c, e);
            for (std::size_t m = 0; m < gs.maps.size(); ++m) {
              const auto g = gs.map(m);
              const auto kg = factorise(g);
              const auto squares = sq_hom_poset(f, g);
              for (std::size_t s = 0; s < squares.squares.size(); ++s) {
                const auto sq = squares.square(s);
                const auto kmap = k_on_square(sq, kf, kg);
                CHECK(compose(kmap, kg.rho) == compose(kf.rho, sq.k));
                CHECK(compose(kf.lambda, kmap) == compose(sq.h, kg.lambda));
                const auto back = sq_hom_poset(g, f);
                for (std::size_t t = 0; t < back.squares.size(); ++t) {
                  const auto tq = back.square(t);
                  CHECK(k_on_square(paste(sq, tq), kf, kf) == compose(kmap, k_on_square(tq, kg, kf)));
                }
              }
            }
          }
      }
    }
}

TEST_CASE("multiplication and comultiplication") {
  const auto one = objects::one();
  const auto kid = factorise(MonotoneMap::identity(one));
  const auto mu = mult(kid);
  const auto delta = comult(kid);
  CHECK(compose(mu.of_rho.lambda, mu.pi) == MonotoneMap::identity(kid.k));
  CHECK(compose(delta.sigma, delta.of_lambda.rho) == MonotoneMap::identity(kid.k));
  // pi is the left adjoint of lambda_{rho}
  CHECK(is_left_adjoint(mu.pi, mu.of_rho.lambda));

  const auto kc = factorise(MonotoneMap::constant(one, objects::chain(2), 1));
  const auto mc = mult(kc);
  CHECK(compose(mc.of_rho.lambda, mc.pi) == MonotoneMap::identity(kc.k));
}

TEST_CASE("AWFS laws for all maps up to size 3") {
  for_all_maps(3, [](const MonotoneMap& f) {
    const auto r = check_awfs_laws(f);
    CHECK(r.factorises);
    CHECK(r.lambda_full);
    CHECK(r.pi_closed_form);
    CHECK(r.sigma_closed_form);
    CHECK(r.monad_unit_left);
    CHECK(r.monad_unit_right);
    CHECK(r.comonad_counit_left);
    CHECK(r.comonad_counit_right);
    CHECK(r.coassociative);
    CHECK(r.unit_comparison);
    CHECK(r.pi_adjunctions);
    CHECK(r.sigma_adjunctions);
    CHECK(r.mixed_law);
    if (r.associative) CHECK(*r.associative);
  });
}

TEST_CASE("associativity of the monad on small maps") {
  for_all_maps(2, [](const MonotoneMap& f) {
    const auto r = check_awfs_laws(f);
    REQUIRE(r.associative.has_value());
    CHECK(*r.associative);
  });
}

TEST_CASE("coalgebras are the full maps") {
  const auto c2 = objects::chain(2);
  const auto c3 = objects::chain(3);
  const auto a2 = objects::antichain(2);
  CHECK(coalgebra_structure(map_of(c2, c3, {0, 2})));
  CHECK_FALSE(coalgebra_structure(map_of(a2, c2, {0, 1})));

  const auto id = MonotoneMap::identity(c3);
  const auto s = coalgebra_structure(id);
  REQUIRE(s);
  CHECK(s->s == s->data.lambda);

  for_all_maps(3, [](const MonotoneMap& f) {
    const auto w = coalgebra_structure(f);
    CHECK(w.has_value() == is_full(f));
    if (w) {
      CHECK(equivalent_maps(compose(w->s, w->data.rho), MonotoneMap::identity(f.target_ref())));
      CHECK(equivalent_maps(compose(f, w->s), w->data.lambda));
    }
  });
}

TEST_CASE("algebras") {
  const auto d = objects::diamond();
  const auto p = algebra_structure(MonotoneMap::to_terminal(d));
  REQUIRE(p);
  for (std::size_t e = 0; e < p->data.elements.size(); ++e)
    CHECK(p->p(e) == *least_upper_bound(*d, p->data.phi(e)));
  CHECK_FALSE(algebra_structure(MonotoneMap::to_terminal(objects::antichain(2))));

  const auto c2 = objects::chain(2);
  const auto pid = algebra_structure(MonotoneMap::identity(c2));
  REQUIRE(pid);
  CHECK(pid->p == pid->data.rho);
}

TEST_CASE("canonical diagonal is the least filler") {
  const auto a2 = objects::antichain(2);
  const auto d = objects::diamond();
  const auto j = map_of(a2, d, {1, 2});
  const auto g = MonotoneMap::to_terminal(d);
  const Square sq(j, g, j, MonotoneMap::to_terminal(d));
  const auto s = coalgebra_structure(j);
  const auto p = algebra_structure(g);
  REQUIRE(s);
  REQUIRE(p);
  const auto diag = canonical_diag(sq, *s, *p);
  CHECK(equivalent_maps(compose(j, diag), sq.h));
  CHECK(compose(diag, g) == sq.k);
  CHECK(diag.assignment() == Assignment{0, 1, 2, 3});
  for (const auto& w : oracle::monotone_maps(*d, *d)) {
    const auto wm = MonotoneMap::unchecked(d, d, w);
    if (compose(j, wm) == sq.h) CHECK(two_cell(diag, wm));
  }

  SUBCASE("into an identity the diagonal is forced") {
    const auto c2 = objects::chain(2);
    const auto id = MonotoneMap::identity(c2);
    const Square sq2(j, id, map_of(a2, c2, {0, 1}), map_of(d, c2, {0, 0, 1, 1}));
    const auto p2 = algebra_structure(id);
    REQUIRE(p2);
    CHECK(canonical_diag(sq2, *s, *p2) == sq2.k);
  }
}

TEST_CASE("fibrant replacement") {
  CHECK(is_isomorphic(*fibrant_replacement(objects::antichain(2)).data.k, *objects::diamond()));
  CHECK(*fibrant_replacement(objects::one()).data.k == *objects::chain(2));
  CHECK(is_isomorphic(*fibrant_replacement(objects::chain(2)).data.k, *objects::chain(3)));
  for (const auto& a : all_up_to(4)) {
    const auto fr = fibrant_replacement(a);
    CHECK(compose(fr.data.lambda, fr.iso) == downset_unit(fr.pa));
  }
}
