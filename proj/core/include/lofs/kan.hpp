#pragma once

#include <optional>
#include <vector>

#include "lofs/lifting.hpp"
#include "lofs/order.hpp"

namespace lofs {

/// ext . j = f (up to equivalence) with ext the least g : Y -> A such that
/// f <= g . j.
struct ExtensionWitness {
  MonotoneMap j;
  MonotoneMap f;
  MonotoneMap ext;
};

/// Left Kan extension of f along j by enumeration of hom(Y, A). When every
/// set {f(x) : j(x) <= y} has a least upper bound, the pointwise candidate
/// is checked against the enumerated minimum and a mismatch throws.
std::optional<ExtensionWitness> lan_extension(const MonotoneMap& j, const MonotoneMap& f, const Limits& limits = {});

/// y |-> least upper bound of {f(x) : j(x) <= y}, when every such bound
/// exists and the result is monotone.
std::optional<MonotoneMap> pointwise_extension(const MonotoneMap& j, const MonotoneMap& f);

/// Same answer as lan_extension(j, f).has_value(). Accepts the pointwise
/// candidate when it is monotone and restricts to f: it is then the least
/// extension, since any g with f <= g . j is above every f(x) with
/// j(x) <= y. Otherwise falls back to enumeration.
bool has_lan_extension(const MonotoneMap& j, const MonotoneMap& f, const Limits& limits = {});

/// Every f : dom j -> A has a left Kan extension along every member j.
bool kan_injective(const PreorderRef& a, const GeneratorFamily& family, const Limits& limits = {});

/// The first (j, f) without an extension, in family order then lexicographic
/// order of f.
struct KanFailure {
  std::size_t member;
  Assignment f;
};
std::optional<KanFailure> kan_injectivity_failure(const PreorderRef& a, const GeneratorFamily& family,
                                                  const Limits& limits = {});

/// Order embeddings X -> Y for X, Y ranging over isomorphism-class
/// representatives of size <= max_size (posets only if requested).
GeneratorFamily embedding_family(std::size_t max_size, bool posets_only = false, const Limits& limits = {});

struct ClassificationRow {
  PreorderRef object;
  bool kan_injective = false;
  bool kan_injective_poset_generators = false;
  bool complete_lattice = false;
  bool agrees() const { return kan_injective == complete_lattice && kan_injective_poset_generators == complete_lattice; }
};

/// Every preorder of size <= max_object_size up to isomorphism, tested
/// against embeddings between preorders of size <= max_generator_size.
std::vector<ClassificationRow> classify_injectives(std::size_t max_object_size, std::size_t max_generator_size,
                                                   const Limits& limits = {});

}  // namespace lofs
