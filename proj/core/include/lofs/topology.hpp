#pragma once

#include <optional>
#include <vector>

#include "lofs/downset.hpp"
#include "lofs/order.hpp"

namespace lofs {

/// A finite space, stored as its specialization preorder. Its opens are the
/// up-sets (every finite space is Alexandrov), and it is T0 iff the preorder
/// is a poset.
struct FiniteSpace {
  PreorderRef points;

  bool is_t0() const { return points->is_poset(); }
  /// O(X) under inclusion.
  SubsetLattice opens(const Limits& limits = {}) const { return upsets(points, limits); }
};

// Scott topology ------------------------------------------------------------

/// Nonempty subsets in which every pair has an upper bound inside the set.
bool is_directed(const FinPreorder& l, const DynBitset& d);

/// All subsets U that are up-closed and meet every directed set whose
/// supremum lies in U. Evaluates both conditions over every subset.
/// Throws not_a_poset.
std::vector<DynBitset> scott_opens(const FinPreorder& l);

/// Row x holds every y with x way below y, quantified over all directed
/// subsets. Throws not_a_poset, or missing_directed_sup when a directed
/// subset has no supremum.
std::vector<DynBitset> way_below(const FinPreorder& l);

/// A complete poset in which each x is the supremum of the elements way
/// below it. False for preorders that are not posets.
bool is_continuous_lattice(const FinPreorder& l);

/// Preimages of Scott opens are Scott open (both sides posets).
bool is_scott_continuous(const MonotoneMap& f);

// Filter monad --------------------------------------------------------------

/// The filters of O(X): up-closed, closed under binary intersection and
/// containing X. The improper filter (containing the empty open) is
/// included. Ordered by inclusion.
struct FilterSpace {
  FiniteSpace base;
  SubsetLattice opens;
  /// Each filter is a set of opens (indices into `opens`); filters.carrier
  /// is FX as a space.
  SubsetLattice filters;

  const PreorderRef& points() const { return filters.carrier; }
  std::size_t size() const { return filters.sets.size(); }
  /// U# = {F : U in F}, as a subset of points().
  DynBitset sharp(Elem open) const;
};

/// Tests the three filter conditions on a set of opens (indices into `opens`).
bool is_filter(const SubsetLattice& opens, const DynBitset& family);

/// On a finite lattice every filter is principal, so the filters are the
/// up-closures of single opens. The generic enumeration over all up-sets of
/// O(X) is `filters_by_definition`.
FilterSpace filter_space(const FiniteSpace& x, const Limits& limits = {});
std::vector<DynBitset> filters_by_definition(const SubsetLattice& opens, const Limits& limits = {});

/// Specialization order of the topology with sub-basic opens U#.
FinPreorder filter_specialization(const FilterSpace& fx);

/// x |-> {U open : x in U}.
MonotoneMap filter_unit(const FilterSpace& fx);
/// F |-> {U : U# in F}, from FFX (built over fx.points) to FX.
MonotoneMap filter_mult(const FilterSpace& ffx, const FilterSpace& fx);
/// F |-> {V : f^-1(V) in F}.
MonotoneMap filter_map(const MonotoneMap& f, const FilterSpace& fx, const FilterSpace& fy);

struct FilterMonadLaws {
  bool unit_monotone = false;  // x <= y implies unit(x) <= unit(y)
  bool left_unit = false;      // m . unit_F = 1
  bool right_unit = false;     // m . F(unit) = 1
  bool associative = false;    // m . m_F = m . F(m)
  bool all() const { return unit_monotone && left_unit && right_unit && associative; }
};
FilterMonadLaws check_filter_monad_laws(const FiniteSpace& x, const Limits& limits = {});

/// a : FX -> X with a . unit = 1 and a . m = a . F(a), by exhaustive search;
/// lexicographically first witness.
std::optional<MonotoneMap> filter_algebra(const FiniteSpace& x, Equality mode = Equality::up_to_equivalence,
                                          const Limits& limits = {});

// Embeddings ----------------------------------------------------------------

/// f_*(U) = union of the opens V of Y with f^-1(V) inside U, as a map
/// O(X) -> O(Y).
MonotoneMap f_lower_star(const MonotoneMap& f, const SubsetLattice& ox, const SubsetLattice& oy);
MonotoneMap f_lower_star(const MonotoneMap& f, const Limits& limits = {});

/// f_* is full.
bool is_top_coalgebra(const MonotoneMap& f, const Limits& limits = {});

/// Injective, and every open of X is f^-1 of an open of Y.
bool is_subspace_embedding(const MonotoneMap& f, const Limits& limits = {});

/// Preimage of a subset of cod f.
DynBitset preimage(const MonotoneMap& f, const DynBitset& v);

}  // namespace lofs
