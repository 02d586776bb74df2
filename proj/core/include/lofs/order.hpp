#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lofs/bitset.hpp"
#include "lofs/equality.hpp"
#include "lofs/error.hpp"

namespace lofs {

using Elem = std::uint32_t;
using Assignment = std::vector<Elem>;

class FinPreorder;
using PreorderRef = std::shared_ptr<const FinPreorder>;

/// A finite set {0..n-1} with a reflexive, transitive relation stored as
/// bitset rows. Also read as a finite Alexandrov space whose opens are the
/// up-sets. Labels are presentation only: equality and every algorithm use
/// indices.
class FinPreorder {
 public:
  FinPreorder() = default;

  /// Takes up-rows (row i holds every j with i <= j) and validates
  /// reflexivity and transitivity.
  static FinPreorder from_rows(std::vector<DynBitset> up_rows, std::vector<std::string> labels = {});

  /// Smallest preorder on n elements containing `pairs`.
  static FinPreorder closure(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                             std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }

  bool leq(std::size_t i, std::size_t j) const noexcept { return up_[i].test(j); }
  bool equivalent(std::size_t i, std::size_t j) const noexcept { return leq(i, j) && leq(j, i); }
  const DynBitset& up(std::size_t i) const noexcept { return up_[i]; }
  const DynBitset& down(std::size_t i) const noexcept { return down_[i]; }
  DynBitset equivalence_class(std::size_t i) const { return up_[i] & down_[i]; }

  bool is_poset() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of i, or its decimal index when the preorder is unlabelled.
  std::string label(std::size_t i) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::optional<Elem> find_label(const std::string& name) const;
  FinPreorder with_labels(std::vector<std::string> labels) const;

  FinPreorder opposite() const;

  /// Structural equality: same size, same relation. Labels are ignored.
  friend bool operator==(const FinPreorder& a, const FinPreorder& b) { return a.up_ == b.up_; }

 private:
  void validate_labels() const;

  std::vector<DynBitset> up_;
  std::vector<DynBitset> down_;
  std::vector<std::string> labels_;
};

inline PreorderRef share(FinPreorder p) { return std::make_shared<const FinPreorder>(std::move(p)); }

/// Pointer-equal or structurally equal.
inline bool same_object(const PreorderRef& a, const PreorderRef& b) { return a == b || *a == *b; }

namespace objects {
PreorderRef empty();
PreorderRef one();
/// 0 < 1 < ... < n-1
PreorderRef chain(std::size_t n);
PreorderRef antichain(std::size_t n);
/// n mutually equivalent elements.
PreorderRef indiscrete(std::size_t n);
/// bot < a, b < top
PreorderRef diamond();
/// a, b < top
PreorderRef vee();
}  // namespace objects

/// An order-preserving function between two preorders.
class MonotoneMap {
 public:
  /// Validates ranges and monotonicity.
  MonotoneMap(PreorderRef src, PreorderRef tgt, Assignment assign);

  static MonotoneMap unchecked(PreorderRef src, PreorderRef tgt, Assignment assign);
  static MonotoneMap identity(const PreorderRef& x);
  static MonotoneMap constant(PreorderRef src, PreorderRef tgt, Elem value);
  /// The unique map to objects::one().
  static MonotoneMap to_terminal(PreorderRef src);

  const FinPreorder& source() const noexcept { return *src_; }
  const FinPreorder& target() const noexcept { return *tgt_; }
  const PreorderRef& source_ref() const noexcept { return src_; }
  const PreorderRef& target_ref() const noexcept { return tgt_; }

  Elem operator()(std::size_t i) const noexcept { return assign_[i]; }
  const Assignment& assignment() const noexcept { return assign_; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.assign_ == b.assign_ && same_object(a.src_, b.src_) && same_object(a.tgt_, b.tgt_);
  }

 private:
  struct Unchecked {};
  MonotoneMap(Unchecked, PreorderRef src, PreorderRef tgt, Assignment assign)
      : src_(std::move(src)), tgt_(std::move(tgt)), assign_(std::move(assign)) {}

  PreorderRef src_;
  PreorderRef tgt_;
  Assignment assign_;
};

/// g after f. Throws shape_mismatch unless f's target is g's source.
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

/// Existence of the 2-cell f => g, i.e. f(x) <= g(x) for every x.
bool two_cell(const MonotoneMap& f, const MonotoneMap& g);
/// Pointwise equivalence (2-cells both ways).
bool equivalent_maps(const MonotoneMap& f, const MonotoneMap& g);
bool maps_agree(const MonotoneMap& f, const MonotoneMap& g, Equality mode);

struct TwoCell {
  MonotoneMap lower;
  MonotoneMap upper;
  /// Throws invalid_object when lower is not pointwise below upper.
  TwoCell(MonotoneMap lower, MonotoneMap upper);
};

/// A commutative square g.h = k.j, read as a morphism (h,k): j -> g of the
/// arrow category.
struct Square {
  MonotoneMap j;
  MonotoneMap g;
  MonotoneMap h;
  MonotoneMap k;
  /// Validates shapes and strict commutativity.
  Square(MonotoneMap j, MonotoneMap g, MonotoneMap h, MonotoneMap k);
};

bool commutes(const MonotoneMap& j, const MonotoneMap& g, const MonotoneMap& h, const MonotoneMap& k);

/// Identity square (id, id): f -> f.
Square identity_square(const MonotoneMap& f);
/// Pasting of s: f -> g and t: g -> e into t.s: f -> e.
Square paste(const Square& s, const Square& t);

struct DownSet {
  PreorderRef carrier;
  DynBitset members;
  /// Validates down-closure.
  DownSet(PreorderRef carrier, DynBitset members);
};

DynBitset down_closure(const FinPreorder& x, const DynBitset& subset);
DynBitset up_closure(const FinPreorder& x, const DynBitset& subset);
bool is_down_closed(const FinPreorder& x, const DynBitset& subset);
bool is_up_closed(const FinPreorder& x, const DynBitset& subset);

// Predicates ---------------------------------------------------------------

bool is_poset(const FinPreorder& x);
/// f(a) <= f(a') implies a <= a'.
bool is_full(const MonotoneMap& f);
bool is_injective(const MonotoneMap& f);
/// Full and injective on equivalence classes.
bool is_order_embedding(const MonotoneMap& f);

DynBitset upper_bounds(const FinPreorder& x, const DynBitset& subset);
DynBitset lower_bounds(const FinPreorder& x, const DynBitset& subset);
/// Lowest-index least upper bound of the subset, if any exists.
std::optional<Elem> least_upper_bound(const FinPreorder& x, const DynBitset& subset);
std::optional<Elem> greatest_lower_bound(const FinPreorder& x, const DynBitset& subset);
std::optional<Elem> least_element(const FinPreorder& x);
std::optional<Elem> greatest_element(const FinPreorder& x);

struct CompletenessReport {
  /// Every subset has a least upper bound up to equivalence.
  bool complete = false;
  /// Every least upper bound is unique; with `complete` this is the poset case.
  bool unique_witnesses = false;
};

CompletenessReport completeness(const FinPreorder& x);
/// Least upper bounds up to equivalence.
bool is_complete_lattice(const FinPreorder& x);
/// Complete and a poset.
bool is_complete_lattice_strict(const FinPreorder& x);
bool is_complete_lattice(const FinPreorder& x, Equality mode);

/// Preserves the least upper bound of every subset (up to equivalence).
bool preserves_all_sups(const MonotoneMap& f);

// Hom-objects --------------------------------------------------------------

/// All monotone maps X -> Y in lexicographic order of assignment vectors,
/// ordered pointwise.
struct HomPoset {
  PreorderRef source;
  PreorderRef target;
  PreorderRef poset;
  std::vector<Assignment> maps;

  MonotoneMap map(std::size_t i) const { return MonotoneMap::unchecked(source, target, maps[i]); }
  std::optional<std::size_t> index_of(const Assignment& a) const;
};

HomPoset hom_poset(const PreorderRef& x, const PreorderRef& y, const Limits& limits = {});

/// All commutative squares from j to g, in lexicographic order on (h, k),
/// ordered pointwise in both components.
struct SquarePoset {
  MonotoneMap j;
  MonotoneMap g;
  PreorderRef poset;
  std::vector<std::pair<Assignment, Assignment>> squares;

  Square square(std::size_t i) const;
  std::optional<std::size_t> index_of(const Assignment& h, const Assignment& k) const;
};

SquarePoset sq_hom_poset(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits = {});

/// Pointwise order on a list of equally sized assignments into `target`.
FinPreorder pointwise_order(const FinPreorder& target, std::span<const Assignment> maps);

// Isomorphism --------------------------------------------------------------

/// Finds an order-isomorphism X -> Y by backtracking over bijections.
std::optional<Assignment> find_isomorphism(const FinPreorder& x, const FinPreorder& y);
bool is_isomorphic(const FinPreorder& x, const FinPreorder& y);

}  // namespace lofs
