#include "lofs/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lofs/search.hpp"

namespace lofs {

void GeneratorFamily::validate() const {
  for (const auto& l : links) {
    if (l.from >= members.size() || l.to >= members.size())
      throw Error(Errc::index_out_of_range, "link refers to a missing member");
    if (!commutes(members[l.from], members[l.to], l.top, l.bottom))
      throw Error(Errc::invalid_object, "link square does not commute");
  }
}

GeneratorFamily coproduct(const GeneratorFamily& a, const GeneratorFamily& b) {
  GeneratorFamily out = a;
  const std::size_t shift = a.members.size();
  out.members.insert(out.members.end(), b.members.begin(), b.members.end());
  for (auto l : b.links) {
    l.from += shift;
    l.to += shift;
    out.links.push_back(std::move(l));
  }
  return out;
}

const Assignment& LiftingStructure::filler(std::size_t member, const Assignment& h, const Assignment& k) const {
  auto s = squares.at(member).index_of(h, k);
  if (!s) throw Error(Errc::invalid_object, "not a square into g");
  return chosen[member][*s];
}

ComparisonMap canonical_map(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits) {
  auto hom = hom_poset(j.target_ref(), g.source_ref(), limits);
  auto squares = sq_hom_poset(j, g, limits);
  Assignment image(hom.maps.size());
  for (std::size_t i = 0; i < hom.maps.size(); ++i) {
    const auto& d = hom.maps[i];
    Assignment h(j.source().size()), k(j.target().size());
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = d[j(x)];
    for (std::size_t y = 0; y < k.size(); ++y) k[y] = g(d[y]);
    image[i] = static_cast<Elem>(*squares.index_of(h, k));
  }
  MonotoneMap map(hom.poset, squares.poset, std::move(image));
  return ComparisonMap{std::move(hom), std::move(squares), std::move(map)};
}

std::vector<Assignment> fillers(const Square& sq, const Limits& limits) {
  const auto& cod_j = sq.j.target();
  const auto& dom_g = sq.g.source();
  const auto& cod_g = sq.g.target();
  Domains dom(cod_j.size(), DynBitset(dom_g.size()));
  for (std::size_t y = 0; y < cod_j.size(); ++y)
    for (std::size_t c = 0; c < dom_g.size(); ++c)
      if (cod_g.equivalent(sq.g(c), sq.k(y))) dom[y].set(c);
  for (std::size_t x = 0; x < sq.j.source().size(); ++x) dom[sq.j(x)] &= dom_g.equivalence_class(sq.h(x));
  std::vector<Assignment> out;
  for_each_monotone(cod_j, dom_g, std::move(dom), [&](std::span<const Elem> d) {
    if (out.size() == limits.max_carrier) throw_size_limit("fillers", out.size() + 1, limits.max_carrier);
    out.emplace_back(d.begin(), d.end());
    return true;
  });
  return out;
}

bool has_lifting(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits) {
  const auto squares = sq_hom_poset(j, g, limits);
  for (std::size_t s = 0; s < squares.squares.size(); ++s)
    if (fillers(squares.square(s), limits).empty()) return false;
  return true;
}

namespace {

bool below(const FinPreorder& t, const Assignment& a, const Assignment& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!t.leq(a[i], b[i])) return false;
  return true;
}

bool equivalent(const FinPreorder& t, const Assignment& a, const Assignment& b) {
  return below(t, a, b) && below(t, b, a);
}

// d . v
Assignment after(const Assignment& d, const MonotoneMap& v) {
  Assignment out(v.source().size());
  for (std::size_t y = 0; y < out.size(); ++y) out[y] = d[v(y)];
  return out;
}

// u . h
Assignment then(const Assignment& h, const MonotoneMap& u) {
  Assignment out(h.size());
  for (std::size_t x = 0; x < h.size(); ++x) out[x] = u(h[x]);
  return out;
}

// Every constraint below is invariant under replacing a filler by a
// pointwise-equivalent one, so one representative per class suffices.
std::vector<Assignment> distinct_up_to_equivalence(const FinPreorder& t, std::vector<Assignment> all) {
  std::vector<Assignment> out;
  for (auto& a : all)
    if (std::none_of(out.begin(), out.end(), [&](const Assignment& r) { return equivalent(t, a, r); }))
      out.push_back(std::move(a));
  return out;
}

// One variable per (member, square). Constraints are pairwise and checked
// against earlier variables only.
class StructureSearch {
 public:
  StructureSearch(const GeneratorFamily& family, const MonotoneMap& g, const Limits& limits)
      : family_(family), g_(g) {
    family.validate();
    for (std::size_t m = 0; m < family.members.size(); ++m) {
      squares_.push_back(sq_hom_poset(family.members[m], g, limits));
      for (std::size_t s = 0; s < squares_.back().squares.size(); ++s) {
        auto cands = distinct_up_to_equivalence(g.source(), fillers(squares_.back().square(s), limits));
        const auto least = least_of(g.source(), cands);
        least_flags_.push_back(least.has_value());
        if (least && *least != 0) std::rotate(cands.begin(), cands.begin() + static_cast<long>(*least),
                                              cands.begin() + static_cast<long>(*least) + 1);
        vars_.push_back({m, s});
        candidates_.push_back(std::move(cands));
      }
    }
    index_vars();
    build_constraints();
  }

  bool feasible() const {
    return std::all_of(candidates_.begin(), candidates_.end(), [](const auto& c) { return !c.empty(); });
  }

  // Calls visit on each solution; stops when visit returns false.
  void run(const std::function<bool(const LiftingStructure&)>& visit) {
    if (!feasible()) return;
    choice_.assign(vars_.size(), 0);
    visit_ = &visit;
    extend(0);
  }

 private:
  struct Var {
    std::size_t member;
    std::size_t square;
  };
  enum class Kind { below_earlier, above_earlier, natural_earlier_is_source, natural_earlier_is_target };
  struct Constraint {
    std::size_t other;
    Kind kind;
    const MonotoneMap* bottom;  // for naturality
  };

  void index_vars() {
    std::size_t offset = 0;
    for (const auto& sq : squares_) {
      offsets_.push_back(offset);
      offset += sq.squares.size();
    }
  }

  std::size_t var_of(std::size_t m, std::size_t s) const { return offsets_[m] + s; }

  void build_constraints() {
    constraints_.assign(vars_.size(), {});
    for (std::size_t m = 0; m < squares_.size(); ++m) {
      const auto& order = *squares_[m].poset;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) {
          if (a == b || !order.leq(a, b)) continue;
          const auto va = var_of(m, a), vb = var_of(m, b);
          // d(a) <= d(b)
          if (va < vb) constraints_[vb].push_back({va, Kind::above_earlier, nullptr});
          else constraints_[va].push_back({vb, Kind::below_earlier, nullptr});
        }
    }
    for (const auto& link : family_.links) {
      // For each square (h, k): members[to] -> g, the pasted square
      // (h . top, k . bottom): members[from] -> g must get d(to) . bottom.
      const auto& target_squares = squares_[link.to];
      for (std::size_t t = 0; t < target_squares.squares.size(); ++t) {
        const auto& [h, k] = target_squares.squares[t];
        const Assignment h2 = after(h, link.top);
        const Assignment k2 = after(k, link.bottom);
        const auto s = squares_[link.from].index_of(h2, k2);
        if (!s) throw Error(Errc::invalid_object, "pasted square missing");
        const auto vs = var_of(link.from, *s), vt = var_of(link.to, t);
        if (vs == vt) {
          self_natural_.push_back({vs, &link.bottom});
        } else if (vs < vt) {
          constraints_[vt].push_back({vs, Kind::natural_earlier_is_source, &link.bottom});
        } else {
          constraints_[vs].push_back({vt, Kind::natural_earlier_is_target, &link.bottom});
        }
      }
    }
  }

  const Assignment& value(std::size_t v) const { return candidates_[v][choice_[v]]; }

  bool consistent(std::size_t v) const {
    const auto& tgt = g_.source();
    const Assignment& d = value(v);
    for (const auto& c : constraints_[v]) {
      const Assignment& e = value(c.other);
      switch (c.kind) {
        case Kind::above_earlier:
          if (!below(tgt, e, d)) return false;
          break;
        case Kind::below_earlier:
          if (!below(tgt, d, e)) return false;
          break;
        case Kind::natural_earlier_is_source:
          if (!equivalent(tgt, e, after(d, *c.bottom))) return false;
          break;
        case Kind::natural_earlier_is_target:
          if (!equivalent(tgt, d, after(e, *c.bottom))) return false;
          break;
      }
    }
    for (const auto& [sv, bottom] : self_natural_)
      if (sv == v && !equivalent(tgt, d, after(d, *bottom))) return false;
    return true;
  }

  bool extend(std::size_t v) {
    if (v == vars_.size()) return (*visit_)(assemble());
    for (std::size_t c = 0; c < candidates_[v].size(); ++c) {
      choice_[v] = c;
      if (consistent(v) && !extend(v + 1)) return false;
    }
    return true;
  }

  LiftingStructure assemble() const {
    LiftingStructure s{g_, squares_, {}, true};
    s.chosen.resize(squares_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      s.chosen[vars_[v].member].push_back(value(v));
      if (!(least_flags_[v] && choice_[v] == 0)) s.canonical = false;
    }
    return s;
  }

  const GeneratorFamily& family_;
  const MonotoneMap& g_;
  std::vector<SquarePoset> squares_;
  std::vector<Var> vars_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Assignment>> candidates_;
  std::vector<bool> least_flags_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::pair<std::size_t, const MonotoneMap*>> self_natural_;
  std::vector<std::size_t> choice_;
  const std::function<bool(const LiftingStructure&)>* visit_ = nullptr;
};

}  // namespace

bool is_coherent(const GeneratorFamily& family, const LiftingStructure& s) {
  const auto& g = s.g;
  const auto& dom_g = g.source();
  const auto& cod_g = g.target();
  if (s.squares.size() != family.members.size()) return false;
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    const auto& j = family.members[m];
    const auto& sp = s.squares[m];
    if (s.chosen[m].size() != sp.squares.size()) return false;
    for (std::size_t i = 0; i < sp.squares.size(); ++i) {
      const auto& d = s.chosen[m][i];
      const auto& [h, k] = sp.squares[i];
      for (std::size_t x = 0; x < j.source().size(); ++x)
        if (!dom_g.equivalent(d[j(x)], h[x])) return false;
      for (std::size_t y = 0; y < j.target().size(); ++y)
        if (!cod_g.equivalent(g(d[y]), k[y])) return false;
      for (std::size_t i2 = 0; i2 < sp.squares.size(); ++i2)
        if (sp.poset->leq(i, i2) && !below(dom_g, d, s.chosen[m][i2])) return false;
    }
  }
  for (const auto& link : family.links) {
    const auto& tsq = s.squares[link.to];
    for (std::size_t t = 0; t < tsq.squares.size(); ++t) {
      const auto& [h, k] = tsq.squares[t];
      const auto& lhs = s.filler(link.from, after(h, link.top), after(k, link.bottom));
      if (!equivalent(dom_g, lhs, after(s.chosen[link.to][t], link.bottom))) return false;
    }
  }
  return true;
}

std::optional<LiftingStructure> lifting_structure(const GeneratorFamily& family, const MonotoneMap& g,
                                                  const Limits& limits) {
  StructureSearch search(family, g, limits);
  std::optional<LiftingStructure> out;
  search.run([&](const LiftingStructure& s) {
    out = s;
    return false;
  });
  return out;
}

LiftingEnumeration all_lifting_structures(const GeneratorFamily& family, const MonotoneMap& g, std::size_t cap,
                                          const Limits& limits) {
  StructureSearch search(family, g, limits);
  LiftingEnumeration out;
  search.run([&](const LiftingStructure& s) {
    if (out.structures.size() == cap) {
      out.complete = false;
      return false;
    }
    out.structures.push_back(s);
    return true;
  });
  return out;
}

MonotoneMap KzLifting::section(std::size_t square) const {
  return comparison.hom.map(rali.left_adjoint(square));
}

std::optional<KzLifting> kz_orthogonal(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits) {
  auto comparison = canonical_map(j, g, limits);
  auto rali = find_rali(comparison.map);
  if (!rali) return std::nullopt;
  return KzLifting{std::move(comparison), std::move(*rali)};
}

LiftingStructure compose_structures(const GeneratorFamily& family, const LiftingStructure& on_f,
                                    const LiftingStructure& on_g, const Limits& limits) {
  const auto& f = on_f.g;
  const auto& g = on_g.g;
  if (!same_object(f.target_ref(), g.source_ref())) throw Error(Errc::shape_mismatch, "structures do not compose");
  if (on_f.squares.size() != family.members.size() || on_g.squares.size() != family.members.size())
    throw Error(Errc::shape_mismatch, "structures are over a different family");
  const auto gf = compose(f, g);
  LiftingStructure out{gf, {}, {}, on_f.canonical && on_g.canonical};
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    out.squares.push_back(sq_hom_poset(family.members[m], gf, limits));
    const auto& sp = out.squares.back();
    out.chosen.emplace_back();
    for (const auto& [h, k] : sp.squares) {
      const Assignment& dg = on_g.filler(m, then(h, f), k);
      out.chosen.back().push_back(on_f.filler(m, h, dg));
    }
  }
  return out;
}

bool coproduct_family_check(const GeneratorFamily& j1, const GeneratorFamily& j2, const MonotoneMap& g,
                            std::size_t cap, const Limits& limits) {
  const auto sum = coproduct(j1, j2);
  const auto e1 = all_lifting_structures(j1, g, cap, limits);
  const auto e2 = all_lifting_structures(j2, g, cap, limits);
  const auto e12 = all_lifting_structures(sum, g, cap, limits);
  if (!e1.complete || !e2.complete || !e12.complete)
    throw_size_limit("coproduct_family_check", cap + 1, cap);

  const bool exists_sum = !e12.structures.empty();
  const bool exists_both = !e1.structures.empty() && !e2.structures.empty();
  if (exists_sum != exists_both) return false;

  // Restriction to each summand must land in the summand's structures and
  // hit every pair exactly once.
  using Choice = std::vector<std::vector<Assignment>>;
  std::set<Choice> s1, s2;
  for (const auto& s : e1.structures) s1.insert(s.chosen);
  for (const auto& s : e2.structures) s2.insert(s.chosen);
  std::set<std::pair<Choice, Choice>> seen;
  const std::size_t n1 = j1.members.size();
  for (const auto& s : e12.structures) {
    Choice left(s.chosen.begin(), s.chosen.begin() + static_cast<long>(n1));
    Choice right(s.chosen.begin() + static_cast<long>(n1), s.chosen.end());
    if (!s1.count(left) || !s2.count(right)) return false;
    if (!seen.emplace(std::move(left), std::move(right)).second) return false;
  }
  return seen.size() == s1.size() * s2.size();
}

}  // namespace lofs
