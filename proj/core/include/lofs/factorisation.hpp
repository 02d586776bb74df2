#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "lofs/downset.hpp"
#include "lofs/order.hpp"

namespace lofs {

/// The factorisation f = rho . lambda through
///   Kf = { (phi, b) : phi a down-set of A, b an upper bound of f[phi] }
/// ordered by inclusion on phi and the order of B on b.
///   lambda(a) = (down(a), f(a)),   rho(phi, b) = b.
struct FactorisationData {
  MonotoneMap f;
  DownSetLattice pa;
  PreorderRef k;
  /// (index of phi in pa, b), sorted.
  std::vector<std::pair<Elem, Elem>> elements;
  MonotoneMap lambda;
  MonotoneMap rho;

  const DynBitset& phi(std::size_t e) const { return pa.sets[elements[e].first]; }
  Elem b(std::size_t e) const { return elements[e].second; }
  std::optional<Elem> index_of(const DynBitset& phi, Elem b) const;
  Elem at(const DynBitset& phi, Elem b) const;

  std::unordered_map<std::uint64_t, Elem> index;
};

/// Membership in Kf: b is an upper bound of f[phi].
bool in_k(const MonotoneMap& f, const DynBitset& phi, Elem b);

FactorisationData factorise(const MonotoneMap& f, const Limits& limits = {});

/// K on a morphism (h, k): f -> g of the arrow category,
/// (phi, b) |-> (down-closure of h[phi], k(b)).
MonotoneMap k_on_square(const Square& sq, const FactorisationData& kf, const FactorisationData& kg);
MonotoneMap k_on_square(const Square& sq, const Limits& limits = {});

/// Monad multiplication component pi_f : K(rho_f) -> Kf, computed as the
/// left adjoint of lambda_{rho_f}.
struct MultiplicationComponent {
  FactorisationData of_rho;
  MonotoneMap pi;
};

/// Comonad comultiplication component sigma_f : Kf -> K(lambda_f), computed
/// as the right adjoint of rho_{lambda_f}.
struct ComultiplicationComponent {
  FactorisationData of_lambda;
  MonotoneMap sigma;
};

/// Throws adjoint_missing if the adjoint does not exist or disagrees with
/// the closed form (phi_union, b); either would be a bug.
MultiplicationComponent mult(const FactorisationData& kf, const Limits& limits = {});
/// Throws adjoint_missing if the adjoint does not exist or disagrees with
/// the closed form (phi, (phi, b)).
ComultiplicationComponent comult(const FactorisationData& kf, const Limits& limits = {});

/// s : cod f -> Kf with rho . s = id and s . f = lambda.
struct CoalgebraWitness {
  FactorisationData data;
  MonotoneMap s;
};

/// p : Kg -> dom g with p . lambda = id, g . p = rho and
/// p . pi_g = p . K(p, 1).
struct AlgebraWitness {
  FactorisationData data;
  MonotoneMap p;
};

/// Exhaustive search over hom(cod f, Kf); lexicographically first witness.
std::optional<CoalgebraWitness> coalgebra_structure(const MonotoneMap& f, Equality mode = Equality::up_to_equivalence,
                                                    const Limits& limits = {});
/// Exhaustive search over hom(Kg, dom g); lexicographically first witness.
std::optional<AlgebraWitness> algebra_structure(const MonotoneMap& g, Equality mode = Equality::up_to_equivalence,
                                                const Limits& limits = {});

/// Diagonal filler p . K(h, k) . s for a square (h, k): f -> g.
MonotoneMap canonical_diag(const Square& sq, const CoalgebraWitness& s, const AlgebraWitness& p);

struct FibrantReplacement {
  FactorisationData data;  // K(A -> 1)
  DownSetLattice pa;
  /// Order isomorphism K(A -> 1) -> P(A), (phi, *) |-> phi.
  MonotoneMap iso;
};

FibrantReplacement fibrant_replacement(const PreorderRef& a, const Limits& limits = {});

/// Elementwise verification of the (co)monad structure on f.
struct AwfsLawReport {
  bool factorises = false;          // rho . lambda = f
  bool lambda_full = false;
  bool pi_closed_form = false;      // adjoint agrees with (union, b)
  bool sigma_closed_form = false;   // adjoint agrees with (phi, (phi, b))
  bool monad_unit_left = false;     // pi . lambda_{rho f} = 1
  bool monad_unit_right = false;    // pi . K(lambda_f, 1) = 1
  bool comonad_counit_left = false; // rho_{lambda f} . sigma = 1
  bool comonad_counit_right = false;// K(1, rho_f) . sigma = 1
  bool coassociative = false;       // sigma_{lambda f} . sigma = K(1, sigma) . sigma
  bool unit_comparison = false;     // K(lambda_f, 1) <= lambda_{rho f}
  bool pi_adjunctions = false;      // K(lambda_f, 1) -| pi -| lambda_{rho f}
  bool sigma_adjunctions = false;   // rho_{lambda f} -| sigma -| K(1, rho_f)
  bool mixed_law = false;           // rho_{lambda f} . sigma = pi . lambda_{rho f}
  /// pi . pi_{rho f} = pi . K(pi, 1); absent when K(rho rho f) exceeds the bound.
  std::optional<bool> associative;

  bool all() const;
};

AwfsLawReport check_awfs_laws(const MonotoneMap& f, const Limits& limits = {});

}  // namespace lofs
