#pragma once

#include <optional>
#include <vector>

#include "lofs/order.hpp"

namespace lofs {

/// g with g(b) <= a  <=>  b <= f(a), built from pointwise minima of
/// {a : b <= f(a)}. Absent when some such set has no least element.
std::optional<MonotoneMap> find_left_adjoint(const MonotoneMap& f);
/// g with f(a) <= b  <=>  a <= g(b), from pointwise maxima.
std::optional<MonotoneMap> find_right_adjoint(const MonotoneMap& f);

/// Every monotone g : cod f -> dom f satisfying the adjunction inequalities,
/// by enumeration of the hom-poset. Verification oracle for the pointwise
/// construction.
std::vector<MonotoneMap> left_adjoints_exhaustive(const MonotoneMap& f, const Limits& limits = {});
std::vector<MonotoneMap> right_adjoints_exhaustive(const MonotoneMap& f, const Limits& limits = {});

bool is_left_adjoint(const MonotoneMap& g, const MonotoneMap& f);

/// Right adjoint left inverse: f . left_adjoint = id and left_adjoint . f <= id.
struct RaliWitness {
  MonotoneMap f;
  MonotoneMap left_adjoint;
  bool holds(Equality mode = Equality::up_to_equivalence) const;
};

/// Left adjoint right inverse: right_adjoint . f = id and f . right_adjoint <= id.
struct LariWitness {
  MonotoneMap f;
  MonotoneMap right_adjoint;
  bool holds(Equality mode = Equality::up_to_equivalence) const;
};

std::optional<RaliWitness> find_rali(const MonotoneMap& f, Equality mode = Equality::up_to_equivalence);
std::optional<LariWitness> find_lari(const MonotoneMap& f, Equality mode = Equality::up_to_equivalence);

/// f/B: pairs (a, b) with f(a) <= b, ordered componentwise.
struct CommaObject {
  MonotoneMap f;
  PreorderRef carrier;
  std::vector<std::pair<Elem, Elem>> pairs;
  MonotoneMap proj_a;
  MonotoneMap proj_b;
};

/// A + B with in_B(b) <= in_A(a) iff b <= f(a); A occupies indices
/// 0..|A|-1 and B follows.
struct Collage {
  MonotoneMap f;
  PreorderRef carrier;
  MonotoneMap copr_a;
  MonotoneMap copr_b;
};

CommaObject comma(const MonotoneMap& f, const Limits& limits = {});
Collage collage(const MonotoneMap& f, const Limits& limits = {});

/// f = R(f) . L(f) through the comma object; L(f) is a LARI.
struct LaxLimitFactorisation {
  CommaObject comma;
  MonotoneMap left;   // a |-> (a, f(a))
  MonotoneMap right;  // projection to B
  LariWitness left_is_lari;
};

/// f = M(f) . E(f) through the collage; M(f) is a RALI with section in_B.
struct LaxColimitFactorisation {
  Collage collage;
  MonotoneMap left;   // in_A
  MonotoneMap right;  // in_A(a) |-> f(a), in_B(b) |-> b
  RaliWitness right_is_rali;
};

LaxLimitFactorisation laxlimit_awfs(const MonotoneMap& f, const Limits& limits = {});
LaxColimitFactorisation laxcolimit_awfs(const MonotoneMap& f, const Limits& limits = {});

}  // namespace lofs
