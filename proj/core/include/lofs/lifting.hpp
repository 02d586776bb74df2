#pragma once

#include <optional>
#include <vector>

#include "lofs/adjunction.hpp"
#include "lofs/order.hpp"

namespace lofs {

/// A morphism (top, bottom): members[from] -> members[to] of the arrow
/// category, i.e. members[to] . top = bottom . members[from].
struct GeneratorLink {
  std::size_t from = 0;
  std::size_t to = 0;
  MonotoneMap top;
  MonotoneMap bottom;
};

/// A small diagram of generators. Links carry no composition data: in
/// preorders the internal-category structure adds nothing.
struct GeneratorFamily {
  std::vector<MonotoneMap> members;
  std::vector<GeneratorLink> links;

  /// Throws invalid_object when a link is ill-shaped or does not commute.
  void validate() const;
  static GeneratorFamily of(std::vector<MonotoneMap> members) { return GeneratorFamily{std::move(members), {}}; }
};

/// Disjoint union of two families; links of the second are reindexed.
GeneratorFamily coproduct(const GeneratorFamily& a, const GeneratorFamily& b);

/// A choice of diagonal filler for every square from every member to g.
struct LiftingStructure {
  MonotoneMap g;
  std::vector<SquarePoset> squares;             // squares[m]: all squares members[m] -> g
  std::vector<std::vector<Assignment>> chosen;  // chosen[m][s]: filler for squares[m].squares[s]
  /// False when some choice had no least filler and fell back to the
  /// lexicographically first one.
  bool canonical = true;

  const Assignment& filler(std::size_t member, const Assignment& h, const Assignment& k) const;
};

/// d |-> (d . j, g . d), from hom(cod j, dom g) to the squares j -> g.
struct ComparisonMap {
  HomPoset hom;
  SquarePoset squares;
  MonotoneMap map;
};

ComparisonMap canonical_map(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits = {});

/// Fillers d : cod j -> dom g with d . j = h and g . d = k (up to
/// equivalence), in lexicographic order.
std::vector<Assignment> fillers(const Square& sq, const Limits& limits = {});

/// Every square j -> g has at least one filler.
bool has_lifting(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits = {});

/// Checks filler equations, monotonicity in the square and naturality
/// across links.
bool is_coherent(const GeneratorFamily& family, const LiftingStructure& s);

/// Structures are searched up to pointwise equivalence of fillers: each
/// class of equivalent fillers is represented by its lexicographically first
/// member.
///
/// Coherent lifting structure found by backtracking. Each square tries its
/// least filler first (when one exists), then the rest lexicographically.
std::optional<LiftingStructure> lifting_structure(const GeneratorFamily& family, const MonotoneMap& g,
                                                  const Limits& limits = {});

/// All coherent lifting structures, up to `cap`. `complete` is false when
/// the cap was hit.
struct LiftingEnumeration {
  std::vector<LiftingStructure> structures;
  bool complete = true;
};
LiftingEnumeration all_lifting_structures(const GeneratorFamily& family, const MonotoneMap& g, std::size_t cap,
                                          const Limits& limits = {});

/// A KZ-lifting operation: a RALI structure on the comparison map.
struct KzLifting {
  ComparisonMap comparison;
  RaliWitness rali;
  /// Filler chosen for square i of comparison.squares.
  MonotoneMap section(std::size_t square) const;
};

std::optional<KzLifting> kz_orthogonal(const MonotoneMap& j, const MonotoneMap& g, const Limits& limits = {});

/// Lifting structure on g . f from structures on f and on g over the same
/// family: fill the outer square against g first, then against f. The
/// inner square must commute strictly, which always holds when dom g is a
/// poset; otherwise invalid_object may be thrown.
LiftingStructure compose_structures(const GeneratorFamily& family, const LiftingStructure& on_f,
                                    const LiftingStructure& on_g, const Limits& limits = {});

/// Coherent structures for J1 + J2 exist iff they exist for both, and
/// restriction is a bijection onto pairs. Enumerates up to `cap` structures
/// per family and throws size_limit_exceeded beyond that.
bool coproduct_family_check(const GeneratorFamily& j1, const GeneratorFamily& j2, const MonotoneMap& g,
                            std::size_t cap = 20000, const Limits& limits = {});

}  // namespace lofs
