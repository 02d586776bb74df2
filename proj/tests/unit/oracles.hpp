#pragma once

// Naive reference implementations used to cross-check the library. They
// share nothing with the code under test beyond FinPreorder::leq.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lofs/order.hpp"

namespace oracle {

inline std::vector<std::size_t> members(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1U << i)) out.push_back(i);
  return out;
}

/// Every subset has a least upper bound up to equivalence.
inline bool complete_by_subsets(const lofs::FinPreorder& x) {
  const std::size_t n = x.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto s = members(mask, n);
    bool has_lub = false;
    for (std::size_t u = 0; u < n && !has_lub; ++u) {
      bool upper = true;
      for (auto i : s) upper = upper && x.leq(i, u);
      if (!upper) continue;
      bool least = true;
      for (std::size_t v = 0; v < n; ++v) {
        bool v_upper = true;
        for (auto i : s) v_upper = v_upper && x.leq(i, v);
        if (v_upper && !x.leq(u, v)) least = false;
      }
      has_lub = least;
    }
    if (!has_lub) return false;
  }
  return true;
}

/// All endo-relations on n points that are reflexive and transitive,
/// by direct enumeration of n*n bit matrices.
inline std::size_t count_labelled_preorders(std::size_t n, bool posets_only) {
  std::size_t count = 0;
  const std::size_t bits = n * n;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << bits); ++r) {
    auto le = [&](std::size_t i, std::size_t j) { return (r >> (i * n + j)) & 1U; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = le(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          if (le(i, j) && le(j, k) && !le(i, k)) ok = false;
    if (ok && posets_only)
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          if (i != j && le(i, j) && le(j, i)) ok = false;
    count += ok;
  }
  return count;
}

/// Number of automorphisms, by trying every permutation.
inline std::size_t automorphisms(const lofs::FinPreorder& x) {
  std::vector<std::size_t> p(x.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j)
        if (x.leq(i, j) != x.leq(p[i], p[j])) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// All maps X -> Y (monotone or not) as assignment vectors, in
/// lexicographic order; filtered to monotone ones.
inline std::vector<lofs::Assignment> monotone_maps(const lofs::FinPreorder& x, const lofs::FinPreorder& y) {
  std::vector<lofs::Assignment> out;
  if (y.size() == 0) {
    if (x.size() == 0) out.emplace_back();
    return out;
  }
  lofs::Assignment a(x.size(), 0);
  while (true) {
    bool mono = true;
    for (std::size_t i = 0; i < x.size() && mono; ++i)
      for (std::size_t j = 0; j < x.size() && mono; ++j)
        if (x.leq(i, j) && !y.leq(a[i], a[j])) mono = false;
    if (mono) out.push_back(a);
    std::size_t k = x.size();
    while (k > 0) {
      --k;
      if (++a[k] < y.size()) break;
      a[k] = 0;
      if (k == 0) return out;
    }
    if (x.size() == 0) return out;
  }
}

}  // namespace oracle
