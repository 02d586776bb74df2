#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "lofs/order.hpp"

namespace lofs {

/// A family of subsets of `base`, ordered by inclusion. Used for down-set
/// lattices P(X) and for open-set lattices O(X).
struct SubsetLattice {
  PreorderRef base;
  PreorderRef carrier;
  std::vector<DynBitset> sets;

  std::optional<Elem> index_of(const DynBitset& s) const;
  Elem at(const DynBitset& s) const;

  // Built by make_subset_lattice.
  std::unordered_map<DynBitset, Elem, DynBitsetHash> index;
};

/// Orders `sets` by (cardinality, lexicographic) and builds the inclusion
/// order. Labels render each member as {x,y,...}.
SubsetLattice make_subset_lattice(PreorderRef base, std::vector<DynBitset> sets);

/// Visits every down-closed subset of x (any order). Stops early when the
/// visitor returns false.
void for_each_down_set(const FinPreorder& x, const std::function<bool(const DynBitset&)>& visit);

/// Number of down-sets, counting up to `cap` (returns cap when reached).
std::size_t count_down_sets(const FinPreorder& x, std::size_t cap);

using DownSetLattice = SubsetLattice;

/// P(X): all down-sets of X under inclusion. Ordered by size, then
/// lexicographically, so the empty set comes first and X last.
DownSetLattice downsets(const PreorderRef& x, const Limits& limits = {});
/// All up-sets of X under inclusion.
SubsetLattice upsets(const PreorderRef& x, const Limits& limits = {});

/// x |-> principal down-set of x, as a map X -> P(X).
MonotoneMap downset_unit(const DownSetLattice& px);
/// Union, as a map P(P(X)) -> P(X).
MonotoneMap downset_mult(const DownSetLattice& ppx, const DownSetLattice& px);
/// P(f): phi |-> down-closure of f[phi].
MonotoneMap downset_map(const MonotoneMap& f, const DownSetLattice& pa, const DownSetLattice& pb);

/// A P-algebra structure P(X) -> X sending each down-set to a least upper
/// bound, with the unit and associativity laws verified under `mode`.
/// Absent iff X is not a complete lattice in the matching sense.
std::optional<MonotoneMap> downset_algebra(const PreorderRef& x, Equality mode = Equality::up_to_equivalence,
                                           const Limits& limits = {});

/// The pointwise inequality P(unit_X) <= unit_{P X} between maps
/// P(X) -> P(P(X)), evaluated on every down-set.
bool check_lax_idempotent_P(const PreorderRef& x, const Limits& limits = {});

/// Monad laws of (P, unit, union) evaluated elementwise on X.
struct DownSetMonadLaws {
  bool left_unit = false;   // mult . unit_P = id
  bool right_unit = false;  // mult . P(unit) = id
  bool associative = false; // mult . mult_P = mult . P(mult)
  bool all() const { return left_unit && right_unit && associative; }
};
DownSetMonadLaws check_downset_monad_laws(const PreorderRef& x, const Limits& limits = {});

}  // namespace lofs
