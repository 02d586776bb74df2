#include "lofs/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lofs {

namespace {

constexpr std::size_t kMaxCodeSize = 8;

std::uint64_t code_under(const FinPreorder& x, const std::vector<std::size_t>& perm) {
  // perm[new] = old
  const std::size_t n = x.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      code = (code << 1) | (x.leq(perm[i], perm[j]) ? 1U : 0U);
  return code;
}

FinPreorder from_code(std::size_t n, std::uint64_t code) {
  std::vector<DynBitset> rows(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t bit = n * n - 1 - (i * n + j);
      if (code >> bit & 1U) rows[i].set(j);
    }
  return FinPreorder::from_rows(std::move(rows));
}

}  // namespace

std::uint64_t relation_code(const FinPreorder& x) {
  if (x.size() > kMaxCodeSize) throw_size_limit("relation_code", x.size(), kMaxCodeSize);
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return code_under(x, perm);
}

FinPreorder canonical_form(const FinPreorder& x) {
  const std::size_t n = x.size();
  if (n > kMaxCodeSize) throw_size_limit("canonical_form", n, kMaxCodeSize);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = code_under(x, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code_under(x, perm));
  return from_code(n, best);
}

std::vector<PreorderRef> enumerate_preorders(std::size_t n, EnumerationOptions options, const Limits& limits) {
  if (n > limits.max_enumeration) throw_size_limit("enumerate_preorders", n, limits.max_enumeration);
  if (n > kMaxCodeSize) throw_size_limit("enumerate_preorders", n, kMaxCodeSize);

  // Brute force over the off-diagonal bits, keeping the transitive ones.
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);

  std::vector<std::uint64_t> codes;
  const std::uint64_t total = std::uint64_t{1} << off.size();
  std::vector<std::uint32_t> rows(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = 1U << i;
    for (std::size_t b = 0; b < off.size(); ++b)
      if (mask >> b & 1U) rows[off[b].first] |= 1U << off[b].second;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if ((rows[i] >> j & 1U) && (rows[j] & ~rows[i])) ok = false;
    if (!ok) continue;
    if (options.posets_only) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if ((rows[i] >> j & 1U) && (rows[j] >> i & 1U)) ok = false;
      if (!ok) continue;
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (rows[i] >> j & 1U);
    codes.push_back(code);
  }

  if (options.mode == Isomorphism::up_to_iso) {
    std::set<std::uint64_t> canon;
    for (auto c : codes) canon.insert(relation_code(canonical_form(from_code(n, c))));
    codes.assign(canon.begin(), canon.end());
  } else {
    std::sort(codes.begin(), codes.end());
  }

  std::vector<PreorderRef> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(share(from_code(n, c)));
  return out;
}

}  // namespace lofs
