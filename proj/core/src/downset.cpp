#include "lofs/downset.hpp"

#include <algorithm>
#include <numeric>

namespace lofs {

std::optional<Elem> SubsetLattice::index_of(const DynBitset& s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Elem SubsetLattice::at(const DynBitset& s) const {
  auto i = index_of(s);
  if (!i) throw Error(Errc::invalid_object, "subset is not an element of the lattice");
  return *i;
}

namespace {

std::string render_subset(const FinPreorder& base, const DynBitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += base.label(i);
    first = false;
  });
  return out + "}";
}

// Equivalence classes of x listed bottom-up along a linear extension.
std::vector<DynBitset> classes_bottom_up(const FinPreorder& x) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.equivalence_class(i).find_first() == i) reps.push_back(i);
  std::stable_sort(reps.begin(), reps.end(),
                   [&](std::size_t a, std::size_t b) { return x.down(a).count() < x.down(b).count(); });
  std::vector<DynBitset> out;
  out.reserve(reps.size());
  for (auto r : reps) out.push_back(x.equivalence_class(r));
  return out;
}

class DownSetWalk {
 public:
  DownSetWalk(const FinPreorder& x, const std::function<bool(const DynBitset&)>& visit)
      : classes_(classes_bottom_up(x)), visit_(visit), current_(x.size()) {
    below_.reserve(classes_.size());
    for (const auto& c : classes_) {
      DynBitset strictly_below = x.down(c.find_first());
      strictly_below.subtract(c);
      below_.push_back(std::move(strictly_below));
    }
  }

  bool run(std::size_t k = 0) {
    if (k == classes_.size()) return visit_(current_);
    if (!run(k + 1)) return false;
    if (below_[k].is_subset_of(current_)) {
      current_ |= classes_[k];
      const bool go_on = run(k + 1);
      current_.subtract(classes_[k]);
      if (!go_on) return false;
    }
    return true;
  }

 private:
  std::vector<DynBitset> classes_;
  std::vector<DynBitset> below_;
  const std::function<bool(const DynBitset&)>& visit_;
  DynBitset current_;
};

}  // namespace

SubsetLattice make_subset_lattice(PreorderRef base, std::vector<DynBitset> sets) {
  std::vector<std::vector<std::size_t>> keys(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) keys[i] = sets[i].to_indices();
  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });

  SubsetLattice lat;
  lat.base = std::move(base);
  lat.sets.reserve(sets.size());
  for (auto i : order) lat.sets.push_back(std::move(sets[i]));

  const std::size_t n = lat.sets.size();
  std::vector<DynBitset> rows(n, DynBitset(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (lat.sets[a].is_subset_of(lat.sets[b])) rows[a].set(b);
    labels[a] = render_subset(*lat.base, lat.sets[a]);
    lat.index.emplace(lat.sets[a], static_cast<Elem>(a));
  }
  if (lat.index.size() != n) throw Error(Errc::invalid_object, "subset family has duplicates");
  lat.carrier = share(FinPreorder::from_rows(std::move(rows), std::move(labels)));
  return lat;
}

void for_each_down_set(const FinPreorder& x, const std::function<bool(const DynBitset&)>& visit) {
  DownSetWalk(x, visit).run();
}

std::size_t count_down_sets(const FinPreorder& x, std::size_t cap) {
  std::size_t count = 0;
  for_each_down_set(x, [&](const DynBitset&) { return ++count < cap; });
  return count;
}

DownSetLattice downsets(const PreorderRef& x, const Limits& limits) {
  std::vector<DynBitset> sets;
  for_each_down_set(*x, [&](const DynBitset& s) {
    if (sets.size() == limits.max_carrier) throw_size_limit("downsets", sets.size() + 1, limits.max_carrier);
    sets.push_back(s);
    return true;
  });
  return make_subset_lattice(x, std::move(sets));
}

SubsetLattice upsets(const PreorderRef& x, const Limits& limits) {
  const FinPreorder op = x->opposite();
  std::vector<DynBitset> sets;
  for_each_down_set(op, [&](const DynBitset& s) {
    if (sets.size() == limits.max_carrier) throw_size_limit("upsets", sets.size() + 1, limits.max_carrier);
    sets.push_back(s);
    return true;
  });
  return make_subset_lattice(x, std::move(sets));
}

MonotoneMap downset_unit(const DownSetLattice& px) {
  const auto& x = *px.base;
  Assignment a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = px.at(x.down(i));
  return MonotoneMap::unchecked(px.base, px.carrier, std::move(a));
}

MonotoneMap downset_mult(const DownSetLattice& ppx, const DownSetLattice& px) {
  if (!same_object(ppx.base, px.carrier)) throw Error(Errc::shape_mismatch, "P(P(X)) is not built over P(X)");
  Assignment a(ppx.sets.size());
  for (std::size_t e = 0; e < ppx.sets.size(); ++e) {
    DynBitset u(px.base->size());
    ppx.sets[e].for_each([&](std::size_t phi) { u |= px.sets[phi]; });
    a[e] = px.at(u);
  }
  return MonotoneMap::unchecked(ppx.carrier, px.carrier, std::move(a));
}

MonotoneMap downset_map(const MonotoneMap& f, const DownSetLattice& pa, const DownSetLattice& pb) {
  if (!same_object(f.source_ref(), pa.base) || !same_object(f.target_ref(), pb.base))
    throw Error(Errc::shape_mismatch, "P(f) needs P(dom f) and P(cod f)");
  Assignment a(pa.sets.size());
  for (std::size_t e = 0; e < pa.sets.size(); ++e) {
    DynBitset image(pb.base->size());
    pa.sets[e].for_each([&](std::size_t i) { image.set(f(i)); });
    a[e] = pb.at(down_closure(*pb.base, image));
  }
  return MonotoneMap::unchecked(pa.carrier, pb.carrier, std::move(a));
}

std::optional<MonotoneMap> downset_algebra(const PreorderRef& x, Equality mode, const Limits& limits) {
  const auto px = downsets(x, limits);
  Assignment sup(px.sets.size());
  for (std::size_t e = 0; e < px.sets.size(); ++e) {
    auto s = least_upper_bound(*x, px.sets[e]);
    if (!s) return std::nullopt;
    sup[e] = *s;
  }
  MonotoneMap alpha(px.carrier, x, std::move(sup));
  if (!maps_agree(compose(downset_unit(px), alpha), MonotoneMap::identity(x), mode)) return std::nullopt;
  const auto ppx = downsets(px.carrier, limits);
  const auto lhs = compose(downset_mult(ppx, px), alpha);
  const auto rhs = compose(downset_map(alpha, ppx, px), alpha);
  if (!maps_agree(lhs, rhs, mode)) return std::nullopt;
  return alpha;
}

bool check_lax_idempotent_P(const PreorderRef& x, const Limits& limits) {
  const auto px = downsets(x, limits);
  const auto ppx = downsets(px.carrier, limits);
  const auto p_of_unit = downset_map(downset_unit(px), px, ppx);
  const auto unit_of_p = downset_unit(ppx);
  return two_cell(p_of_unit, unit_of_p);
}

DownSetMonadLaws check_downset_monad_laws(const PreorderRef& x, const Limits& limits) {
  DownSetMonadLaws laws;
  const auto px = downsets(x, limits);
  const auto ppx = downsets(px.carrier, limits);
  const auto pppx = downsets(ppx.carrier, limits);
  const auto mult = downset_mult(ppx, px);
  const auto id = MonotoneMap::identity(px.carrier);
  laws.left_unit = compose(downset_unit(ppx), mult) == id;
  laws.right_unit = compose(downset_map(downset_unit(px), px, ppx), mult) == id;
  const auto mult_p = downset_mult(pppx, ppx);
  laws.associative = compose(mult_p, mult) == compose(downset_map(mult, pppx, ppx), mult);
  return laws;
}

}  // namespace lofs
