#include "lofs/adjunction.hpp"

#include "lofs/search.hpp"

namespace lofs {

std::optional<MonotoneMap> find_left_adjoint(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  Assignment g(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) {
    DynBitset above(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(y, f(x))) above.set(x);
    std::optional<Elem> least;
    for (std::size_t x = above.find_first(); x < above.size() && !least; x = above.find_next(x))
      if (above.is_subset_of(a.up(x))) least = static_cast<Elem>(x);
    if (!least) return std::nullopt;
    g[y] = *least;
  }
  return MonotoneMap(f.target_ref(), f.source_ref(), std::move(g));
}

std::optional<MonotoneMap> find_right_adjoint(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  Assignment g(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) {
    DynBitset below(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(f(x), y)) below.set(x);
    std::optional<Elem> greatest;
    for (std::size_t x = below.find_first(); x < below.size() && !greatest; x = below.find_next(x))
      if (below.is_subset_of(a.down(x))) greatest = static_cast<Elem>(x);
    if (!greatest) return std::nullopt;
    g[y] = *greatest;
  }
  return MonotoneMap(f.target_ref(), f.source_ref(), std::move(g));
}

bool is_left_adjoint(const MonotoneMap& g, const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (a.leq(g(y), x) != b.leq(y, f(x))) return false;
  return true;
}

std::vector<MonotoneMap> left_adjoints_exhaustive(const MonotoneMap& f, const Limits& limits) {
  const auto hom = hom_poset(f.target_ref(), f.source_ref(), limits);
  std::vector<MonotoneMap> out;
  for (std::size_t i = 0; i < hom.maps.size(); ++i) {
    auto g = hom.map(i);
    if (is_left_adjoint(g, f)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<MonotoneMap> right_adjoints_exhaustive(const MonotoneMap& f, const Limits& limits) {
  const auto hom = hom_poset(f.target_ref(), f.source_ref(), limits);
  std::vector<MonotoneMap> out;
  for (std::size_t i = 0; i < hom.maps.size(); ++i) {
    auto g = hom.map(i);
    if (is_left_adjoint(f, g)) out.push_back(std::move(g));
  }
  return out;
}

bool RaliWitness::holds(Equality mode) const {
  return maps_agree(compose(left_adjoint, f), MonotoneMap::identity(f.target_ref()), mode) &&
         two_cell(compose(f, left_adjoint), MonotoneMap::identity(f.source_ref()));
}

bool LariWitness::holds(Equality mode) const {
  return maps_agree(compose(f, right_adjoint), MonotoneMap::identity(f.source_ref()), mode) &&
         two_cell(compose(right_adjoint, f), MonotoneMap::identity(f.target_ref()));
}

std::optional<RaliWitness> find_rali(const MonotoneMap& f, Equality mode) {
  auto l = find_left_adjoint(f);
  if (!l) return std::nullopt;
  RaliWitness w{f, std::move(*l)};
  if (!w.holds(mode)) return std::nullopt;
  return w;
}

std::optional<LariWitness> find_lari(const MonotoneMap& f, Equality mode) {
  auto r = find_right_adjoint(f);
  if (!r) return std::nullopt;
  LariWitness w{f, std::move(*r)};
  if (!w.holds(mode)) return std::nullopt;
  return w;
}

CommaObject comma(const MonotoneMap& f, const Limits& limits) {
  const auto& a = f.source();
  const auto& b = f.target();
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      if (b.leq(f(x), y)) {
        if (pairs.size() == limits.max_carrier) throw_size_limit("comma", pairs.size() + 1, limits.max_carrier);
        pairs.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
      }
  const std::size_t n = pairs.size();
  std::vector<DynBitset> rows(n, DynBitset(n));
  std::vector<std::string> labels(n);
  Assignment pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k)
      if (a.leq(pairs[i].first, pairs[k].first) && b.leq(pairs[i].second, pairs[k].second)) rows[i].set(k);
    labels[i] = "(" + a.label(pairs[i].first) + "," + b.label(pairs[i].second) + ")";
    pa[i] = pairs[i].first;
    pb[i] = pairs[i].second;
  }
  auto carrier = share(FinPreorder::from_rows(std::move(rows), std::move(labels)));
  return CommaObject{f, carrier, std::move(pairs), MonotoneMap(carrier, f.source_ref(), std::move(pa)),
                     MonotoneMap(carrier, f.target_ref(), std::move(pb))};
}

Collage collage(const MonotoneMap& f, const Limits& limits) {
  const auto& a = f.source();
  const auto& b = f.target();
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  if (n > limits.max_carrier) throw_size_limit("collage", n, limits.max_carrier);
  std::vector<DynBitset> rows(n, DynBitset(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < na; ++x) {
    a.up(x).for_each([&](std::size_t x2) { rows[x].set(x2); });
    labels[x] = "A." + a.label(x);
  }
  for (std::size_t y = 0; y < b.size(); ++y) {
    b.up(y).for_each([&](std::size_t y2) { rows[na + y].set(na + y2); });
    for (std::size_t x = 0; x < na; ++x)
      if (b.leq(y, f(x))) rows[na + y].set(x);
    labels[na + y] = "B." + b.label(y);
  }
  auto carrier = share(FinPreorder::from_rows(std::move(rows), std::move(labels)));
  Assignment ia(na), ib(b.size());
  for (std::size_t x = 0; x < na; ++x) ia[x] = static_cast<Elem>(x);
  for (std::size_t y = 0; y < b.size(); ++y) ib[y] = static_cast<Elem>(na + y);
  return Collage{f, carrier, MonotoneMap(f.source_ref(), carrier, std::move(ia)),
                 MonotoneMap(f.target_ref(), carrier, std::move(ib))};
}

LaxLimitFactorisation laxlimit_awfs(const MonotoneMap& f, const Limits& limits) {
  auto c = comma(f, limits);
  Assignment l(f.source().size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t i = 0; i < c.pairs.size(); ++i)
      if (c.pairs[i] == std::pair<Elem, Elem>{static_cast<Elem>(x), f(x)}) l[x] = static_cast<Elem>(i);
  }
  MonotoneMap left(f.source_ref(), c.carrier, std::move(l));
  MonotoneMap right = c.proj_b;
  LariWitness w{left, c.proj_a};
  return LaxLimitFactorisation{std::move(c), std::move(left), std::move(right), std::move(w)};
}

LaxColimitFactorisation laxcolimit_awfs(const MonotoneMap& f, const Limits& limits) {
  auto c = collage(f, limits);
  const std::size_t na = f.source().size();
  Assignment m(c.carrier->size());
  for (std::size_t x = 0; x < na; ++x) m[x] = f(x);
  for (std::size_t y = 0; y < f.target().size(); ++y) m[na + y] = static_cast<Elem>(y);
  MonotoneMap right(c.carrier, f.target_ref(), std::move(m));
  MonotoneMap left = c.copr_a;
  RaliWitness w{right, c.copr_b};
  return LaxColimitFactorisation{std::move(c), std::move(left), std::move(right), std::move(w)};
}

}  // namespace lofs
