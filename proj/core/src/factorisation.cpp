#include "lofs/factorisation.hpp"

#include "lofs/adjunction.hpp"
#include "lofs/search.hpp"

namespace lofs {

namespace {

std::uint64_t key(std::size_t phi, std::size_t b, std::size_t nb) { return static_cast<std::uint64_t>(phi) * nb + b; }

DynBitset equivalents(const FinPreorder& x, Elem v, Equality mode) {
  if (mode == Equality::strict) {
    DynBitset s(x.size());
    s.set(v);
    return s;
  }
  return x.equivalence_class(v);
}

DynBitset image(const MonotoneMap& f, const DynBitset& s) {
  DynBitset out(f.target().size());
  s.for_each([&](std::size_t i) { out.set(f(i)); });
  return out;
}

}  // namespace

std::optional<Elem> FactorisationData::index_of(const DynBitset& phi_set, Elem b_elem) const {
  auto phi_index = pa.index_of(phi_set);
  if (!phi_index) return std::nullopt;
  auto it = index.find(key(*phi_index, b_elem, f.target().size()));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Elem FactorisationData::at(const DynBitset& phi_set, Elem b_elem) const {
  auto e = index_of(phi_set, b_elem);
  if (!e) throw Error(Errc::invalid_object, "pair is not an element of Kf");
  return *e;
}

bool in_k(const MonotoneMap& f, const DynBitset& phi, Elem b) {
  bool ok = true;
  phi.for_each([&](std::size_t a) { ok = ok && f.target().leq(f(a), b); });
  return ok;
}

FactorisationData factorise(const MonotoneMap& f, const Limits& limits) {
  const auto& a = f.source();
  const auto& b = f.target();
  auto pa = downsets(f.source_ref(), limits);

  std::vector<std::pair<Elem, Elem>> elements;
  for (std::size_t p = 0; p < pa.sets.size(); ++p) {
    const DynBitset ub = upper_bounds(b, image(f, pa.sets[p]));
    ub.for_each([&](std::size_t y) {
      if (elements.size() == limits.max_carrier) throw_size_limit("factorise", elements.size() + 1, limits.max_carrier);
      elements.emplace_back(static_cast<Elem>(p), static_cast<Elem>(y));
    });
  }

  const std::size_t n = elements.size();
  std::vector<DynBitset> rows(n, DynBitset(n));
  std::vector<std::string> labels(n);
  std::unordered_map<std::uint64_t, Elem> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [pi, bi] = elements[i];
    for (std::size_t k = 0; k < n; ++k)
      if (pa.carrier->leq(pi, elements[k].first) && b.leq(bi, elements[k].second)) rows[i].set(k);
    labels[i] = "(" + pa.carrier->label(pi) + "," + b.label(bi) + ")";
    index.emplace(key(pi, bi, b.size()), static_cast<Elem>(i));
  }
  auto k = share(FinPreorder::from_rows(std::move(rows), std::move(labels)));

  Assignment lam(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) lam[x] = index.at(key(pa.at(a.down(x)), f(x), b.size()));
  Assignment rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = elements[i].second;

  MonotoneMap lambda(f.source_ref(), k, std::move(lam));
  MonotoneMap rho_map(k, f.target_ref(), std::move(rho));
  return FactorisationData{f, std::move(pa), k, std::move(elements), std::move(lambda), std::move(rho_map),
                           std::move(index)};
}

MonotoneMap k_on_square(const Square& sq, const FactorisationData& kf, const FactorisationData& kg) {
  if (!(sq.j == kf.f) || !(sq.g == kg.f)) throw Error(Errc::shape_mismatch, "square does not run between the factorised maps");
  const auto& dom_g = sq.g.source();
  Assignment out(kf.elements.size());
  for (std::size_t e = 0; e < kf.elements.size(); ++e) {
    const DynBitset phi = down_closure(dom_g, image(sq.h, kf.phi(e)));
    out[e] = kg.at(phi, sq.k(kf.b(e)));
  }
  return MonotoneMap(kf.k, kg.k, std::move(out));
}

MonotoneMap k_on_square(const Square& sq, const Limits& limits) {
  return k_on_square(sq, factorise(sq.j, limits), factorise(sq.g, limits));
}

MultiplicationComponent mult(const FactorisationData& kf, const Limits& limits) {
  auto of_rho = factorise(kf.rho, limits);
  auto pi = find_left_adjoint(of_rho.lambda);
  if (!pi) throw Error(Errc::adjoint_missing, "lambda of rho_f has no left adjoint");
  // Closed form: (Psi, b) |-> (union of the first components in Psi, b).
  Assignment closed(of_rho.elements.size());
  for (std::size_t e = 0; e < closed.size(); ++e) {
    DynBitset u(kf.f.source().size());
    of_rho.phi(e).for_each([&](std::size_t kappa) { u |= kf.phi(kappa); });
    closed[e] = kf.at(u, of_rho.b(e));
  }
  auto closed_map = MonotoneMap::unchecked(of_rho.k, kf.k, std::move(closed));
  if (!equivalent_maps(*pi, closed_map))
    throw Error(Errc::adjoint_missing, "multiplication adjoint disagrees with the union formula");
  // The adjoint is unique up to equivalence; the closed form is the
  // representative for which the unit squares commute strictly.
  return MultiplicationComponent{std::move(of_rho), std::move(closed_map)};
}

ComultiplicationComponent comult(const FactorisationData& kf, const Limits& limits) {
  auto of_lambda = factorise(kf.lambda, limits);
  auto sigma = find_right_adjoint(of_lambda.rho);
  if (!sigma) throw Error(Errc::adjoint_missing, "rho of lambda_f has no right adjoint");
  Assignment closed(kf.elements.size());
  for (std::size_t e = 0; e < closed.size(); ++e) closed[e] = of_lambda.at(kf.phi(e), static_cast<Elem>(e));
  auto closed_map = MonotoneMap::unchecked(kf.k, of_lambda.k, std::move(closed));
  if (!equivalent_maps(*sigma, closed_map))
    throw Error(Errc::adjoint_missing, "comultiplication adjoint disagrees with the closed formula");
  return ComultiplicationComponent{std::move(of_lambda), std::move(closed_map)};
}

std::optional<CoalgebraWitness> coalgebra_structure(const MonotoneMap& f, Equality mode, const Limits& limits) {
  auto data = factorise(f, limits);
  const auto& b = f.target();
  const auto& k = *data.k;
  Domains dom(b.size(), DynBitset(k.size()));
  for (std::size_t y = 0; y < b.size(); ++y) {
    const DynBitset fibre = equivalents(b, static_cast<Elem>(y), mode);
    for (std::size_t e = 0; e < k.size(); ++e)
      if (fibre.test(data.rho(e))) dom[y].set(e);
  }
  for (std::size_t x = 0; x < f.source().size(); ++x) dom[f(x)] &= equivalents(k, data.lambda(x), mode);
  auto s = first_monotone(b, k, std::move(dom));
  if (!s) return std::nullopt;
  MonotoneMap sm(f.target_ref(), data.k, std::move(*s));
  return CoalgebraWitness{std::move(data), std::move(sm)};
}

std::optional<AlgebraWitness> algebra_structure(const MonotoneMap& g, Equality mode, const Limits& limits) {
  auto data = factorise(g, limits);
  const auto& a = g.source();
  const auto& k = *data.k;
  Domains dom(k.size(), DynBitset(a.size()));
  for (std::size_t e = 0; e < k.size(); ++e) {
    const DynBitset fibre = equivalents(g.target(), data.rho(e), mode);
    for (std::size_t x = 0; x < a.size(); ++x)
      if (fibre.test(g(x))) dom[e].set(x);
  }
  for (std::size_t x = 0; x < a.size(); ++x) dom[data.lambda(x)] &= equivalents(a, static_cast<Elem>(x), mode);

  std::optional<MultiplicationComponent> mu;
  std::optional<Assignment> found;
  for_each_monotone(k, a, std::move(dom), [&](std::span<const Elem> cand) {
    if (!mu) mu.emplace(mult(data, limits));
    const auto& kr = mu->of_rho;
    // p . pi versus p . K(p, 1) on every element of K(rho_g).
    for (std::size_t e = 0; e < kr.elements.size(); ++e) {
      const Elem lhs = cand[mu->pi(e)];
      DynBitset img(a.size());
      kr.phi(e).for_each([&](std::size_t kappa) { img.set(cand[kappa]); });
      const Elem rhs = cand[data.at(down_closure(a, img), kr.b(e))];
      const bool agree = mode == Equality::strict ? lhs == rhs : a.equivalent(lhs, rhs);
      if (!agree) return true;
    }
    found.emplace(cand.begin(), cand.end());
    return false;
  });
  if (!found) return std::nullopt;
  MonotoneMap p(data.k, g.source_ref(), std::move(*found));
  return AlgebraWitness{std::move(data), std::move(p)};
}

MonotoneMap canonical_diag(const Square& sq, const CoalgebraWitness& s, const AlgebraWitness& p) {
  return compose(compose(s.s, k_on_square(sq, s.data, p.data)), p.p);
}

FibrantReplacement fibrant_replacement(const PreorderRef& a, const Limits& limits) {
  auto data = factorise(MonotoneMap::to_terminal(a), limits);
  auto pa = data.pa;
  Assignment iso(data.elements.size());
  for (std::size_t e = 0; e < iso.size(); ++e) iso[e] = data.elements[e].first;
  MonotoneMap iso_map(data.k, pa.carrier, std::move(iso));
  if (!is_full(iso_map) || iso_map.source().size() != iso_map.target().size() || !is_injective(iso_map))
    throw Error(Errc::invalid_object, "K(A -> 1) is not isomorphic to P(A)");
  return FibrantReplacement{std::move(data), std::move(pa), std::move(iso_map)};
}

bool AwfsLawReport::all() const {
  return factorises && lambda_full && pi_closed_form && sigma_closed_form && monad_unit_left && monad_unit_right &&
         comonad_counit_left && comonad_counit_right && coassociative && unit_comparison && pi_adjunctions &&
         sigma_adjunctions && mixed_law && associative.value_or(true);
}

namespace {

// pi . pi_{rho f} against pi . K(pi, 1), streaming over the elements of
// K(rho rho f) without building its order.
std::optional<bool> check_associativity(const FactorisationData& kf, const MultiplicationComponent& mu,
                                        const Limits& limits) {
  const auto& kr = mu.of_rho;  // K(rho_f), over dom = Kf
  const auto& krk = *kr.k;
  const std::size_t cap = limits.max_carrier;
  if (count_down_sets(krk, cap) >= cap) return std::nullopt;
  const auto& bset = kf.f.target();
  bool ok = true;
  for_each_down_set(krk, [&](const DynBitset& xi) {
    // Upper bounds of rho_{rho f}[xi] in B.
    DynBitset bs(bset.size());
    xi.for_each([&](std::size_t e) { bs.set(kr.b(e)); });
    const DynBitset ub = upper_bounds(bset, bs);
    for (std::size_t b = ub.find_first(); b < ub.size() && ok; b = ub.find_next(b)) {
      // pi_{rho f}(xi, b): least element of K(rho f) above xi with second component >= b.
      DynBitset cands = upper_bounds(krk, xi);
      for (std::size_t e = 0; e < krk.size(); ++e)
        if (!bset.leq(b, kr.b(e))) cands.reset(e);
      std::optional<std::size_t> least;
      for (std::size_t e = cands.find_first(); e < cands.size() && !least; e = cands.find_next(e))
        if (cands.is_subset_of(krk.up(e))) least = e;
      if (!least) {
        ok = false;
        break;
      }
      const Elem lhs = mu.pi(*least);
      DynBitset img(kf.k->size());
      xi.for_each([&](std::size_t e) { img.set(mu.pi(e)); });
      const Elem rhs = mu.pi(kr.at(down_closure(*kf.k, img), static_cast<Elem>(b)));
      ok = kf.k->equivalent(lhs, rhs);
    }
    return ok;
  });
  return ok;
}

}  // namespace

AwfsLawReport check_awfs_laws(const MonotoneMap& f, const Limits& limits) {
  AwfsLawReport r;
  const auto kf = factorise(f, limits);
  r.factorises = compose(kf.lambda, kf.rho) == f;
  r.lambda_full = is_full(kf.lambda);

  std::optional<MultiplicationComponent> mu;
  try {
    mu.emplace(mult(kf, limits));
    r.pi_closed_form = true;
  } catch (const Error& e) {
    if (e.code() != Errc::adjoint_missing) throw;
  }
  std::optional<ComultiplicationComponent> delta;
  try {
    delta.emplace(comult(kf, limits));
    r.sigma_closed_form = true;
  } catch (const Error& e) {
    if (e.code() != Errc::adjoint_missing) throw;
  }
  if (!mu || !delta) return r;

  const auto& kr = mu->of_rho;
  const auto& kl = delta->of_lambda;
  const auto id_k = MonotoneMap::identity(kf.k);

  // K(lambda_f, 1): Kf -> K(rho_f), from the square (lambda_f, 1): f -> rho_f.
  const Square unit_sq(f, kf.rho, kf.lambda, MonotoneMap::identity(f.target_ref()));
  const auto k_lambda = k_on_square(unit_sq, kf, kr);
  // K(1, rho_f): K(lambda_f) -> Kf, from the square (1, rho_f): lambda_f -> f.
  const Square counit_sq(kf.lambda, f, MonotoneMap::identity(f.source_ref()), kf.rho);
  const auto k_rho = k_on_square(counit_sq, kl, kf);

  r.monad_unit_left = equivalent_maps(compose(kr.lambda, mu->pi), id_k);
  r.monad_unit_right = equivalent_maps(compose(k_lambda, mu->pi), id_k);
  r.comonad_counit_left = equivalent_maps(compose(delta->sigma, kl.rho), id_k);
  r.comonad_counit_right = equivalent_maps(compose(delta->sigma, k_rho), id_k);
  r.unit_comparison = two_cell(k_lambda, kr.lambda);
  r.pi_adjunctions = is_left_adjoint(k_lambda, mu->pi) && is_left_adjoint(mu->pi, kr.lambda);
  r.sigma_adjunctions = is_left_adjoint(kl.rho, delta->sigma) && is_left_adjoint(delta->sigma, k_rho);
  r.mixed_law = equivalent_maps(compose(delta->sigma, kl.rho), compose(kr.lambda, mu->pi));

  // Coassociativity: sigma_{lambda f} . sigma_f = K(1, sigma_f) . sigma_f.
  const auto delta2 = comult(kl, limits);
  const Square sigma_sq(kf.lambda, kl.lambda, MonotoneMap::identity(f.source_ref()), delta->sigma);
  const auto k_sigma = k_on_square(sigma_sq, kl, delta2.of_lambda);
  r.coassociative = equivalent_maps(compose(delta->sigma, delta2.sigma), compose(delta->sigma, k_sigma));

  r.associative = check_associativity(kf, *mu, limits);
  return r;
}

}  // namespace lofs
