#include "lofs/topology.hpp"

#include <unordered_set>

#include "lofs/search.hpp"

namespace lofs {

namespace {

// Subset brute force stays below 2^16 subsets.
constexpr std::size_t kMaxSubsetBase = 16;

void require_poset(const FinPreorder& l, const char* what) {
  if (!l.is_poset()) throw Error(Errc::not_a_poset, std::string(what) + ": not a poset");
}

void require_subset_base(const FinPreorder& l) {
  if (l.size() > kMaxSubsetBase) throw_size_limit("subset enumeration", l.size(), kMaxSubsetBase);
}

DynBitset from_mask(std::size_t n, std::uint32_t mask) {
  DynBitset s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1U << i)) s.set(i);
  return s;
}

struct Directed {
  DynBitset members;
  std::optional<Elem> sup;
};

std::vector<Directed> directed_subsets(const FinPreorder& l) {
  std::vector<Directed> out;
  const std::uint32_t total = 1U << l.size();
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    auto d = from_mask(l.size(), mask);
    if (!is_directed(l, d)) continue;
    auto sup = least_upper_bound(l, d);
    out.push_back(Directed{std::move(d), sup});
  }
  return out;
}

}  // namespace

bool is_directed(const FinPreorder& l, const DynBitset& d) {
  if (d.none()) return false;
  bool ok = true;
  d.for_each([&](std::size_t a) {
    d.for_each([&](std::size_t b) {
      if (ok && !(l.up(a) & l.up(b)).intersects(d)) ok = false;
    });
  });
  return ok;
}

std::vector<DynBitset> scott_opens(const FinPreorder& l) {
  require_poset(l, "scott_opens");
  require_subset_base(l);
  const auto directed = directed_subsets(l);
  std::vector<DynBitset> opens;
  const std::uint32_t total = 1U << l.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    auto u = from_mask(l.size(), mask);
    bool open = true;
    u.for_each([&](std::size_t x) {
      if (!l.up(x).is_subset_of(u)) open = false;
    });
    for (std::size_t k = 0; open && k < directed.size(); ++k) {
      const auto& d = directed[k];
      if (d.sup && u.test(*d.sup) && !d.members.intersects(u)) open = false;
    }
    if (open) opens.push_back(std::move(u));
  }
  return opens;
}

std::vector<DynBitset> way_below(const FinPreorder& l) {
  require_poset(l, "way_below");
  require_subset_base(l);
  const std::size_t n = l.size();
  std::vector<DynBitset> rows(n, DynBitset(n, true));
  for (const auto& d : directed_subsets(l)) {
    if (!d.sup) throw Error(Errc::missing_directed_sup, "way_below: a directed subset has no supremum");
    // x << y fails when sup D >= y but no element of D is above x.
    const DynBitset below_d = down_closure(l, d.members);
    for (std::size_t x = 0; x < n; ++x) {
      if (below_d.test(x)) continue;
      rows[x].subtract(l.down(*d.sup));
    }
  }
  return rows;
}

bool is_continuous_lattice(const FinPreorder& l) {
  if (!l.is_poset() || !is_complete_lattice_strict(l)) return false;
  const auto wb = way_below(l);
  for (std::size_t x = 0; x < l.size(); ++x) {
    DynBitset approximants(l.size());
    for (std::size_t y = 0; y < l.size(); ++y)
      if (wb[y].test(x)) approximants.set(y);
    auto sup = least_upper_bound(l, approximants);
    if (!sup || *sup != x) return false;
  }
  return true;
}

DynBitset preimage(const MonotoneMap& f, const DynBitset& v) {
  DynBitset out(f.source().size());
  for (std::size_t x = 0; x < out.size(); ++x)
    if (v.test(f(x))) out.set(x);
  return out;
}

bool is_scott_continuous(const MonotoneMap& f) {
  const auto source_opens = scott_opens(f.source());
  const std::unordered_set<DynBitset, DynBitsetHash> open_set(source_opens.begin(), source_opens.end());
  for (const auto& v : scott_opens(f.target()))
    if (!open_set.count(preimage(f, v))) return false;
  return true;
}

// Filters -------------------------------------------------------------------

DynBitset FilterSpace::sharp(Elem open) const {
  DynBitset s(size());
  for (std::size_t f = 0; f < size(); ++f)
    if (filters.sets[f].test(open)) s.set(f);
  return s;
}

bool is_filter(const SubsetLattice& opens, const DynBitset& family) {
  const FinPreorder& o = *opens.carrier;
  if (family.size() != o.size() || o.empty()) return false;
  // The whole space is the largest open.
  if (!family.test(o.size() - 1)) return false;
  if (!is_up_closed(o, family)) return false;
  bool closed = true;
  family.for_each([&](std::size_t u) {
    family.for_each([&](std::size_t v) {
      if (closed && !family.test(opens.at(opens.sets[u] & opens.sets[v]))) closed = false;
    });
  });
  return closed;
}

std::vector<DynBitset> filters_by_definition(const SubsetLattice& opens, const Limits& limits) {
  std::vector<DynBitset> out;
  for (const auto& family : upsets(opens.carrier, limits).sets)
    if (is_filter(opens, family)) out.push_back(family);
  return out;
}

FilterSpace filter_space(const FiniteSpace& x, const Limits& limits) {
  auto opens = x.opens(limits);
  std::vector<DynBitset> principal;
  principal.reserve(opens.sets.size());
  for (std::size_t u = 0; u < opens.sets.size(); ++u) principal.push_back(opens.carrier->up(u));
  auto filters = make_subset_lattice(opens.carrier, std::move(principal));
  return FilterSpace{x, std::move(opens), std::move(filters)};
}

FinPreorder filter_specialization(const FilterSpace& fx) {
  const std::size_t n = fx.size();
  std::vector<DynBitset> rows(n, DynBitset(n, true));
  for (Elem u = 0; u < fx.opens.sets.size(); ++u) {
    const auto s = fx.sharp(u);
    // F below G requires every sub-basic open containing F to contain G.
    s.for_each([&](std::size_t f) { rows[f] &= s; });
  }
  return FinPreorder::from_rows(std::move(rows));
}

MonotoneMap filter_unit(const FilterSpace& fx) {
  const FinPreorder& x = *fx.base.points;
  Assignment a(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    DynBitset nbhd(fx.opens.sets.size());
    for (std::size_t u = 0; u < fx.opens.sets.size(); ++u)
      if (fx.opens.sets[u].test(p)) nbhd.set(u);
    a[p] = fx.filters.at(nbhd);
  }
  return MonotoneMap::unchecked(fx.base.points, fx.points(), std::move(a));
}

MonotoneMap filter_mult(const FilterSpace& ffx, const FilterSpace& fx) {
  if (!same_object(ffx.base.points, fx.points())) throw Error(Errc::shape_mismatch, "filter_mult: FFX is not built over FX");
  const std::size_t n_opens = fx.opens.sets.size();
  std::vector<Elem> sharp_index(n_opens);
  for (Elem u = 0; u < n_opens; ++u) sharp_index[u] = ffx.opens.at(fx.sharp(u));

  Assignment a(ffx.size());
  for (std::size_t g = 0; g < ffx.size(); ++g) {
    DynBitset m(n_opens);
    for (Elem u = 0; u < n_opens; ++u)
      if (ffx.filters.sets[g].test(sharp_index[u])) m.set(u);
    a[g] = fx.filters.at(m);
  }
  return MonotoneMap::unchecked(ffx.points(), fx.points(), std::move(a));
}

MonotoneMap filter_map(const MonotoneMap& f, const FilterSpace& fx, const FilterSpace& fy) {
  if (!same_object(f.source_ref(), fx.base.points) || !same_object(f.target_ref(), fy.base.points))
    throw Error(Errc::shape_mismatch, "filter_map: spaces do not match f");
  const std::size_t n_opens = fy.opens.sets.size();
  std::vector<Elem> pre(n_opens);
  for (Elem v = 0; v < n_opens; ++v) pre[v] = fx.opens.at(preimage(f, fy.opens.sets[v]));

  Assignment a(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) {
    DynBitset image(n_opens);
    for (Elem v = 0; v < n_opens; ++v)
      if (fx.filters.sets[i].test(pre[v])) image.set(v);
    a[i] = fy.filters.at(image);
  }
  return MonotoneMap::unchecked(fx.points(), fy.points(), std::move(a));
}

FilterMonadLaws check_filter_monad_laws(const FiniteSpace& x, const Limits& limits) {
  FilterMonadLaws laws;
  const auto fx = filter_space(x, limits);
  const auto ffx = filter_space(FiniteSpace{fx.points()}, limits);
  const auto fffx = filter_space(FiniteSpace{ffx.points()}, limits);

  const auto unit = filter_unit(fx);
  const auto mult = filter_mult(ffx, fx);
  const auto id = MonotoneMap::identity(fx.points());

  laws.unit_monotone = true;
  const FinPreorder& pts = *x.points;
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (pts.leq(p, q) && !fx.points()->leq(unit(p), unit(q))) laws.unit_monotone = false;

  laws.left_unit = compose(filter_unit(ffx), mult) == id;
  laws.right_unit = compose(filter_map(unit, fx, ffx), mult) == id;
  laws.associative = compose(filter_mult(fffx, ffx), mult) == compose(filter_map(mult, fffx, ffx), mult);
  return laws;
}

std::optional<MonotoneMap> filter_algebra(const FiniteSpace& x, Equality mode, const Limits& limits) {
  const FinPreorder& pts = *x.points;
  const auto fx = filter_space(x, limits);
  const auto ffx = filter_space(FiniteSpace{fx.points()}, limits);
  const auto unit = filter_unit(fx);
  const auto mult = filter_mult(ffx, fx);

  // a . unit = 1 pins the value on each neighbourhood filter.
  Domains domains = full_domains(*fx.points(), pts);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    DynBitset allowed(pts.size());
    if (mode == Equality::strict) allowed.set(p);
    else allowed = pts.equivalence_class(p);
    domains[unit(p)] &= allowed;
  }

  std::optional<MonotoneMap> found;
  for_each_monotone(*fx.points(), pts, std::move(domains), [&](std::span<const Elem> values) {
    auto a = MonotoneMap::unchecked(fx.points(), x.points, Assignment(values.begin(), values.end()));
    if (!maps_agree(compose(unit, a), MonotoneMap::identity(x.points), mode)) return true;
    if (!maps_agree(compose(mult, a), compose(filter_map(a, ffx, fx), a), mode)) return true;
    found = std::move(a);
    return false;
  });
  return found;
}

// Embeddings ----------------------------------------------------------------

MonotoneMap f_lower_star(const MonotoneMap& f, const SubsetLattice& ox, const SubsetLattice& oy) {
  if (!same_object(f.source_ref(), ox.base) || !same_object(f.target_ref(), oy.base))
    throw Error(Errc::shape_mismatch, "f_lower_star: open lattices do not match f");
  std::vector<DynBitset> pre;
  pre.reserve(oy.sets.size());
  for (const auto& v : oy.sets) pre.push_back(preimage(f, v));

  Assignment a(ox.sets.size());
  for (std::size_t u = 0; u < ox.sets.size(); ++u) {
    DynBitset image(f.target().size());
    for (std::size_t v = 0; v < oy.sets.size(); ++v)
      if (pre[v].is_subset_of(ox.sets[u])) image |= oy.sets[v];
    a[u] = oy.at(image);
  }
  return MonotoneMap::unchecked(ox.carrier, oy.carrier, std::move(a));
}

MonotoneMap f_lower_star(const MonotoneMap& f, const Limits& limits) {
  return f_lower_star(f, upsets(f.source_ref(), limits), upsets(f.target_ref(), limits));
}

bool is_top_coalgebra(const MonotoneMap& f, const Limits& limits) { return is_full(f_lower_star(f, limits)); }

bool is_subspace_embedding(const MonotoneMap& f, const Limits& limits) {
  if (!is_injective(f)) return false;
  const auto ox = upsets(f.source_ref(), limits);
  const auto oy = upsets(f.target_ref(), limits);
  std::unordered_set<DynBitset, DynBitsetHash> induced;
  for (const auto& v : oy.sets) induced.insert(preimage(f, v));
  return induced.size() == ox.sets.size();
}

}  // namespace lofs
