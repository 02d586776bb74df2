#pragma once

#include <cstdint>
#include <vector>

#include "lofs/order.hpp"

namespace lofs {

enum class Isomorphism { labelled, up_to_iso };

struct EnumerationOptions {
  Isomorphism mode = Isomorphism::up_to_iso;
  bool posets_only = false;
};

/// Relation bits packed row-major; valid for n <= 8.
std::uint64_t relation_code(const FinPreorder& x);

/// Relabelling of x whose relation code is lexicographically least among
/// all permutations. Isomorphic preorders have equal canonical forms.
FinPreorder canonical_form(const FinPreorder& x);

/// Every preorder on {0..n-1}. Labelled results are sorted by relation
/// code; up-to-iso results are canonical forms sorted by relation code.
/// Throws size_limit_exceeded when n > limits.max_enumeration.
std::vector<PreorderRef> enumerate_preorders(std::size_t n, EnumerationOptions options = {},
                                             const Limits& limits = {});

}  // namespace lofs
