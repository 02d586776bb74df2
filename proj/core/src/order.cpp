#include "lofs/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lofs/search.hpp"

namespace lofs {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::not_a_poset: return "NotAPoset";
    case Errc::missing_directed_sup: return "MissingDirectedSup";
    case Errc::adjoint_missing: return "AdjointMissing";
    case Errc::invalid_object: return "InvalidObject";
  }
  return "Unknown";
}

void throw_size_limit(const char* what, std::size_t requested, std::size_t bound) {
  std::ostringstream os;
  os << what << ": " << requested << " elements exceeds the carrier bound " << bound;
  throw Error(Errc::size_limit_exceeded, os.str());
}

// FinPreorder ---------------------------------------------------------------

FinPreorder FinPreorder::from_rows(std::vector<DynBitset> up_rows, std::vector<std::string> labels) {
  const std::size_t n = up_rows.size();
  FinPreorder p;
  for (std::size_t i = 0; i < n; ++i) {
    if (up_rows[i].size() != n) throw Error(Errc::invalid_object, "relation rows must be n x n");
    if (!up_rows[i].test(i)) throw Error(Errc::invalid_object, "relation is not reflexive at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool transitive = true;
    up_rows[i].for_each([&](std::size_t j) {
      if (!up_rows[j].is_subset_of(up_rows[i])) transitive = false;
    });
    if (!transitive) throw Error(Errc::invalid_object, "relation is not transitive at " + std::to_string(i));
  }
  p.down_.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) up_rows[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  p.up_ = std::move(up_rows);
  p.labels_ = std::move(labels);
  p.validate_labels();
  return p;
}

FinPreorder FinPreorder::closure(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                 std::vector<std::string> labels) {
  std::vector<DynBitset> rows(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(Errc::index_out_of_range, "pair index out of range");
    rows[a].set(b);
  }
  // Warshall on rows: anything reaching k inherits k's row.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  return from_rows(std::move(rows), std::move(labels));
}

bool FinPreorder::is_poset() const noexcept {
  for (std::size_t i = 0; i < size(); ++i)
    if ((up_[i] & down_[i]).count() != 1) return false;
  return true;
}

std::string FinPreorder::label(std::size_t i) const { return labels_.empty() ? std::to_string(i) : labels_[i]; }

std::optional<Elem> FinPreorder::find_label(const std::string& name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (label(i) == name) return static_cast<Elem>(i);
  return std::nullopt;
}

FinPreorder FinPreorder::with_labels(std::vector<std::string> labels) const {
  FinPreorder p = *this;
  p.labels_ = std::move(labels);
  p.validate_labels();
  return p;
}

FinPreorder FinPreorder::opposite() const {
  FinPreorder p;
  p.up_ = down_;
  p.down_ = up_;
  p.labels_ = labels_;
  return p;
}

void FinPreorder::validate_labels() const {
  if (labels_.empty()) return;
  if (labels_.size() != size()) throw Error(Errc::invalid_object, "label count differs from element count");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error(Errc::invalid_object, "labels must be distinct");
}

namespace objects {

namespace {
std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}
}  // namespace

PreorderRef empty() { return share(FinPreorder{}); }

PreorderRef one() { return share(FinPreorder::closure(1, {}, {"*"})); }

PreorderRef chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return share(FinPreorder::closure(n, pairs, numbered(n)));
}

PreorderRef antichain(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = n <= 26 ? std::string(1, static_cast<char>('a' + i)) : std::to_string(i);
  return share(FinPreorder::closure(n, {}, std::move(labels)));
}

PreorderRef indiscrete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  return share(FinPreorder::closure(n, pairs, numbered(n)));
}

PreorderRef diamond() {
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return share(FinPreorder::closure(4, pairs, {"bot", "a", "b", "top"}));
}

PreorderRef vee() {
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 2}, {1, 2}};
  return share(FinPreorder::closure(3, pairs, {"a", "b", "top"}));
}

}  // namespace objects

// MonotoneMap ---------------------------------------------------------------

MonotoneMap::MonotoneMap(PreorderRef src, PreorderRef tgt, Assignment assign)
    : src_(std::move(src)), tgt_(std::move(tgt)), assign_(std::move(assign)) {
  if (assign_.size() != src_->size()) throw Error(Errc::shape_mismatch, "assignment length differs from source size");
  for (Elem v : assign_)
    if (v >= tgt_->size()) throw Error(Errc::index_out_of_range, "assignment value out of range");
  for (std::size_t i = 0; i < assign_.size(); ++i) {
    bool ok = true;
    src_->up(i).for_each([&](std::size_t j) { ok = ok && tgt_->leq(assign_[i], assign_[j]); });
    if (!ok) throw Error(Errc::invalid_object, "map is not monotone at " + src_->label(i));
  }
}

MonotoneMap MonotoneMap::unchecked(PreorderRef src, PreorderRef tgt, Assignment assign) {
  return MonotoneMap(Unchecked{}, std::move(src), std::move(tgt), std::move(assign));
}

MonotoneMap MonotoneMap::identity(const PreorderRef& x) {
  Assignment a(x->size());
  std::iota(a.begin(), a.end(), Elem{0});
  return unchecked(x, x, std::move(a));
}

MonotoneMap MonotoneMap::constant(PreorderRef src, PreorderRef tgt, Elem value) {
  if (value >= tgt->size()) throw Error(Errc::index_out_of_range, "constant value out of range");
  Assignment a(src->size(), value);
  return unchecked(std::move(src), std::move(tgt), std::move(a));
}

MonotoneMap MonotoneMap::to_terminal(PreorderRef src) {
  Assignment a(src->size(), 0);
  return unchecked(std::move(src), objects::one(), std::move(a));
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (!same_object(f.target_ref(), g.source_ref()))
    throw Error(Errc::shape_mismatch, "compose: target of the first map is not the source of the second");
  Assignment a(f.source().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return MonotoneMap::unchecked(f.source_ref(), g.target_ref(), std::move(a));
}

namespace {
void require_parallel(const MonotoneMap& f, const MonotoneMap& g) {
  if (!same_object(f.source_ref(), g.source_ref()) || !same_object(f.target_ref(), g.target_ref()))
    throw Error(Errc::shape_mismatch, "maps are not parallel");
}
}  // namespace

bool two_cell(const MonotoneMap& f, const MonotoneMap& g) {
  require_parallel(f, g);
  for (std::size_t i = 0; i < f.source().size(); ++i)
    if (!f.target().leq(f(i), g(i))) return false;
  return true;
}

bool equivalent_maps(const MonotoneMap& f, const MonotoneMap& g) { return two_cell(f, g) && two_cell(g, f); }

bool maps_agree(const MonotoneMap& f, const MonotoneMap& g, Equality mode) {
  if (mode == Equality::strict) {
    require_parallel(f, g);
    return f.assignment() == g.assignment();
  }
  return equivalent_maps(f, g);
}

TwoCell::TwoCell(MonotoneMap l, MonotoneMap u) : lower(std::move(l)), upper(std::move(u)) {
  if (!two_cell(lower, upper)) throw Error(Errc::invalid_object, "no 2-cell between the given maps");
}

bool commutes(const MonotoneMap& j, const MonotoneMap& g, const MonotoneMap& h, const MonotoneMap& k) {
  if (!same_object(h.source_ref(), j.source_ref()) || !same_object(h.target_ref(), g.source_ref()) ||
      !same_object(k.source_ref(), j.target_ref()) || !same_object(k.target_ref(), g.target_ref()))
    throw Error(Errc::shape_mismatch, "square components have the wrong shape");
  for (std::size_t x = 0; x < j.source().size(); ++x)
    if (g(h(x)) != k(j(x))) return false;
  return true;
}

Square::Square(MonotoneMap j_, MonotoneMap g_, MonotoneMap h_, MonotoneMap k_)
    : j(std::move(j_)), g(std::move(g_)), h(std::move(h_)), k(std::move(k_)) {
  if (!commutes(j, g, h, k)) throw Error(Errc::invalid_object, "square does not commute");
}

Square identity_square(const MonotoneMap& f) {
  return Square(f, f, MonotoneMap::identity(f.source_ref()), MonotoneMap::identity(f.target_ref()));
}

Square paste(const Square& s, const Square& t) {
  if (!(s.g == t.j)) throw Error(Errc::shape_mismatch, "paste: squares do not meet");
  return Square(s.j, t.g, compose(s.h, t.h), compose(s.k, t.k));
}

DownSet::DownSet(PreorderRef c, DynBitset m) : carrier(std::move(c)), members(std::move(m)) {
  if (members.size() != carrier->size()) throw Error(Errc::shape_mismatch, "member vector has the wrong length");
  if (!is_down_closed(*carrier, members)) throw Error(Errc::invalid_object, "subset is not down-closed");
}

DynBitset down_closure(const FinPreorder& x, const DynBitset& subset) {
  DynBitset out(x.size());
  subset.for_each([&](std::size_t i) { out |= x.down(i); });
  return out;
}

DynBitset up_closure(const FinPreorder& x, const DynBitset& subset) {
  DynBitset out(x.size());
  subset.for_each([&](std::size_t i) { out |= x.up(i); });
  return out;
}

bool is_down_closed(const FinPreorder& x, const DynBitset& subset) {
  bool ok = true;
  subset.for_each([&](std::size_t i) { ok = ok && x.down(i).is_subset_of(subset); });
  return ok;
}

bool is_up_closed(const FinPreorder& x, const DynBitset& subset) {
  bool ok = true;
  subset.for_each([&](std::size_t i) { ok = ok && x.up(i).is_subset_of(subset); });
  return ok;
}

// Predicates ----------------------------------------------------------------

bool is_poset(const FinPreorder& x) { return x.is_poset(); }

bool is_full(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (b.leq(f(i), f(j)) && !a.leq(i, j)) return false;
  return true;
}

bool is_injective(const MonotoneMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (Elem v : f.assignment()) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_order_embedding(const MonotoneMap& f) {
  if (!is_full(f)) return false;
  const auto& a = f.source();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (f.target().equivalent(f(i), f(j)) && !a.equivalent(i, j)) return false;
  return true;
}

DynBitset upper_bounds(const FinPreorder& x, const DynBitset& subset) {
  DynBitset out(x.size(), true);
  subset.for_each([&](std::size_t i) { out &= x.up(i); });
  return out;
}

DynBitset lower_bounds(const FinPreorder& x, const DynBitset& subset) {
  DynBitset out(x.size(), true);
  subset.for_each([&](std::size_t i) { out &= x.down(i); });
  return out;
}

namespace {
std::optional<Elem> least_in(const FinPreorder& x, const DynBitset& set) {
  for (std::size_t i = set.find_first(); i < set.size(); i = set.find_next(i))
    if (set.is_subset_of(x.up(i))) return static_cast<Elem>(i);
  return std::nullopt;
}
std::optional<Elem> greatest_in(const FinPreorder& x, const DynBitset& set) {
  for (std::size_t i = set.find_first(); i < set.size(); i = set.find_next(i))
    if (set.is_subset_of(x.down(i))) return static_cast<Elem>(i);
  return std::nullopt;
}
}  // namespace

std::optional<Elem> least_upper_bound(const FinPreorder& x, const DynBitset& subset) {
  return least_in(x, upper_bounds(x, subset));
}

std::optional<Elem> greatest_lower_bound(const FinPreorder& x, const DynBitset& subset) {
  return greatest_in(x, lower_bounds(x, subset));
}

std::optional<Elem> least_element(const FinPreorder& x) { return least_in(x, DynBitset(x.size(), true)); }

std::optional<Elem> greatest_element(const FinPreorder& x) { return greatest_in(x, DynBitset(x.size(), true)); }

CompletenessReport completeness(const FinPreorder& x) {
  // In a finite preorder a least element plus binary joins give joins of
  // every subset by induction on its size.
  CompletenessReport r;
  if (!least_element(x)) return r;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      DynBitset pair(x.size());
      pair.set(i);
      pair.set(j);
      if (!least_upper_bound(x, pair)) return r;
    }
  r.complete = true;
  r.unique_witnesses = x.is_poset();
  return r;
}

bool is_complete_lattice(const FinPreorder& x) { return completeness(x).complete; }

bool is_complete_lattice_strict(const FinPreorder& x) {
  const auto r = completeness(x);
  return r.complete && r.unique_witnesses;
}

bool is_complete_lattice(const FinPreorder& x, Equality mode) {
  return mode == Equality::strict ? is_complete_lattice_strict(x) : is_complete_lattice(x);
}

bool preserves_all_sups(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  if (a.size() > 20) throw_size_limit("preserves_all_sups", a.size(), 20);
  const std::size_t total = std::size_t{1} << a.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    DynBitset s(a.size());
    DynBitset image(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1U) {
        s.set(i);
        image.set(f(i));
      }
    const auto sup = least_upper_bound(a, s);
    if (!sup) continue;
    const auto image_sup = least_upper_bound(b, image);
    if (!image_sup || !b.equivalent(*image_sup, f(*sup))) return false;
  }
  return true;
}

// Hom-objects ---------------------------------------------------------------

FinPreorder pointwise_order(const FinPreorder& target, std::span<const Assignment> maps) {
  const std::size_t n = maps.size();
  std::vector<DynBitset> rows(n, DynBitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < maps[a].size() && le; ++i) le = target.leq(maps[a][i], maps[b][i]);
      if (le) rows[a].set(b);
    }
  return FinPreorder::from_rows(std::move(rows));
}

std::optional<std::size_t> HomPoset::index_of(const Assignment& a) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), a);
  if (it == maps.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - maps.begin());
}

HomPoset hom_poset(const PreorderRef& x, const PreorderRef& y, const Limits& limits) {
  HomPoset h{x, y, nullptr, {}};
  for_each_monotone(*x, *y, full_domains(*x, *y), [&](std::span<const Elem> a) {
    if (h.maps.size() == limits.max_carrier) throw_size_limit("hom_poset", h.maps.size() + 1, limits.max_carrier);
    h.maps.emplace_back(a.begin(), a.end());
    return true;
  });
  h.poset = share(pointwise_order(*y, h.maps));
  return h;
}

Square SquarePoset::square(std::size_t i) const {
  const auto& [h, k] = squares[i];
  return Square(j, g, MonotoneMap::unchecked(j.source_ref(), g.source_ref(), h),
                MonotoneMap::unchecked(j.target_ref(), g.target_ref(), k));
}

std::optional<std::size_t> SquarePoset::index_of(const Assignment& h, const Assignment& k) const {
  const std::pair<Assignment, Assignment> key{h, k};
  auto it = std::lower_bound(squares.begin(), squares.end(), key);
  if (it == squares.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - squares.begin());
}

SquarePoset sq_hom_poset(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits) {
  SquarePoset sp{j, g, nullptr, {}};
  const auto& dom_j = j.source();
  const auto& cod_j = j.target();
  const auto& dom_g = g.source();
  const auto& cod_g = g.target();
  for_each_monotone(dom_j, dom_g, full_domains(dom_j, dom_g), [&](std::span<const Elem> h) {
    // k is forced on the image of j: k(j(x)) = g(h(x)).
    Domains dk = full_domains(cod_j, cod_g);
    for (std::size_t x = 0; x < dom_j.size(); ++x) {
      DynBitset only(cod_g.size());
      only.set(g(h[x]));
      dk[j(x)] &= only;
    }
    for_each_monotone(cod_j, cod_g, std::move(dk), [&](std::span<const Elem> k) {
      if (sp.squares.size() == limits.max_carrier)
        throw_size_limit("sq_hom_poset", sp.squares.size() + 1, limits.max_carrier);
      sp.squares.emplace_back(Assignment(h.begin(), h.end()), Assignment(k.begin(), k.end()));
      return true;
    });
    return true;
  });
  const std::size_t n = sp.squares.size();
  std::vector<DynBitset> rows(n, DynBitset(n));
  auto below = [](const FinPreorder& t, const Assignment& a, const Assignment& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!t.leq(a[i], b[i])) return false;
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (below(dom_g, sp.squares[a].first, sp.squares[b].first) &&
          below(cod_g, sp.squares[a].second, sp.squares[b].second))
        rows[a].set(b);
  sp.poset = share(FinPreorder::from_rows(std::move(rows)));
  return sp;
}

// Isomorphism ---------------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const FinPreorder& x, const FinPreorder& y) : x_(x), y_(y), assign_(x.size()), used_(y.size(), false) {}

  std::optional<Assignment> run() {
    const std::size_t n = x_.size();
    if (n != y_.size()) return std::nullopt;
    sig_x_.resize(n);
    sig_y_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig_x_[i] = {x_.up(i).count(), x_.down(i).count()};
      sig_y_[i] = {y_.up(i).count(), y_.down(i).count()};
    }
    auto sx = sig_x_;
    auto sy = sig_y_;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
    if (extend(0)) return assign_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == x_.size()) return true;
    for (std::size_t v = 0; v < y_.size(); ++v) {
      if (used_[v] || sig_x_[i] != sig_y_[v]) continue;
      bool ok = y_.leq(v, v) == x_.leq(i, i);
      for (std::size_t p = 0; p < i && ok; ++p)
        ok = x_.leq(p, i) == y_.leq(assign_[p], v) && x_.leq(i, p) == y_.leq(v, assign_[p]);
      if (!ok) continue;
      used_[v] = true;
      assign_[i] = static_cast<Elem>(v);
      if (extend(i + 1)) return true;
      used_[v] = false;
    }
    return false;
  }

  const FinPreorder& x_;
  const FinPreorder& y_;
  Assignment assign_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, std::size_t>> sig_x_, sig_y_;
};

}  // namespace

std::optional<Assignment> find_isomorphism(const FinPreorder& x, const FinPreorder& y) {
  return IsoSearch(x, y).run();
}

bool is_isomorphic(const FinPreorder& x, const FinPreorder& y) { return find_isomorphism(x, y).has_value(); }

}  // namespace lofs
