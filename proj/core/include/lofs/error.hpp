#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lofs {

enum class Errc {
  index_out_of_range,
  shape_mismatch,
  size_limit_exceeded,
  not_a_poset,
  missing_directed_sup,
  adjoint_missing,
  invalid_object,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Bounds on intermediate objects. Every operation that materialises a carrier
/// (down-set lattices, hom-posets, factorisation objects, filter spaces)
/// checks it against max_carrier before and during construction.
struct Limits {
  std::size_t max_carrier = 4096;
  /// Largest n accepted by preorder enumeration.
  std::size_t max_enumeration = 5;
};

[[noreturn]] void throw_size_limit(const char* what, std::size_t requested, std::size_t bound);

}  // namespace lofs
