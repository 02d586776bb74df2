#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lofs/bitset.hpp"
#include "lofs/order.hpp"

namespace lofs {

/// Allowed target values for each source element.
using Domains = std::vector<DynBitset>;

Domains full_domains(const FinPreorder& src, const FinPreorder& tgt);

/// Visitor for map search; return false to stop.
using MapVisitor = std::function<bool(std::span<const Elem>)>;

/// Visits every monotone map src -> tgt whose values lie in `domains`, in
/// lexicographic order of assignment vectors. Uses forward checking: fixing
/// an element narrows the domains of everything comparable with it.
/// Returns the number of maps visited.
std::size_t for_each_monotone(const FinPreorder& src, const FinPreorder& tgt, Domains domains,
                              const MapVisitor& visit);

/// First map in lexicographic order, if any.
std::optional<Assignment> first_monotone(const FinPreorder& src, const FinPreorder& tgt, Domains domains);

/// Pointwise least element of a set of maps into `tgt`, when one exists:
/// returns the first candidate that lies below every other one.
std::optional<std::size_t> least_of(const FinPreorder& tgt, std::span<const Assignment> maps);

}  // namespace lofs
