#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "lofs/factorisation.hpp"
#include "lofs/lifting.hpp"
#include "lofs/order.hpp"
#include "lofs/topology.hpp"

namespace lofs {

/// JSON formats:
///   {"type":"preorder","elements":["a","b"],"le":[["a","b"]]}
///   {"type":"space", ...same fields...}
///   {"type":"map","source":<preorder|path>,"target":<preorder|path>,"assign":{"a":"x"}}
///   {"type":"family","members":[<map>...],"links":[{"from":0,"to":1,"top":<map>,"bottom":<map>}]}
///   or a bare array of maps for a family without links.
/// The reader takes the reflexive-transitive closure of "le"; pairs may name
/// elements or give their indices. Relative paths resolve against base_dir.
/// Malformed input throws Error(invalid_object).
using JsonObject = std::variant<PreorderRef, MonotoneMap, FiniteSpace, GeneratorFamily>;

JsonObject parse_object(std::string_view text, const std::filesystem::path& base_dir = {});
/// Reads and parses a file. Throws std::runtime_error when it cannot be read.
JsonObject load_object(const std::filesystem::path& file);

PreorderRef as_preorder(const JsonObject& obj);  // also accepts a space
MonotoneMap as_map(const JsonObject& obj);
GeneratorFamily as_family(const JsonObject& obj);  // also accepts a single map

/// Emits the generating pairs only: covers between class representatives
/// and one cycle through each equivalence class.
std::string preorder_json(const FinPreorder& x, std::string_view type = "preorder");
std::string map_json(const MonotoneMap& f);
/// {"K":<preorder>,"lambda":<map>,"rho":<map>}
std::string factorisation_json(const FactorisationData& d);

/// Hasse diagram of the poset reflection, bottom to top: one node per
/// equivalence class, labelled by its members.
std::string to_dot(const FinPreorder& x, std::string_view name = "preorder");

}  // namespace lofs
