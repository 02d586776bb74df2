#include "lofs/search.hpp"

namespace lofs {

Domains full_domains(const FinPreorder& src, const FinPreorder& tgt) {
  return Domains(src.size(), DynBitset(tgt.size(), true));
}

namespace {

class MonotoneSearch {
 public:
  MonotoneSearch(const FinPreorder& src, const FinPreorder& tgt, const MapVisitor& visit)
      : src_(src), tgt_(tgt), visit_(visit), assign_(src.size(), 0) {}

  // Returns false once the visitor asked to stop.
  bool run(Domains domains) {
    levels_.assign(src_.size() + 1, domains);
    return run(0);
  }

  std::size_t visited() const { return visited_; }

 private:
  bool run(std::size_t depth) {
    const std::size_t n = src_.size();
    if (depth == n) {
      ++visited_;
      return visit_(assign_);
    }
    const Domains& domains = levels_[depth];
    Domains& next = levels_[depth + 1];
    const DynBitset& dom = domains[depth];
    for (std::size_t v = dom.find_first(); v < dom.size(); v = dom.find_next(v)) {
      for (std::size_t u = depth + 1; u < n; ++u) next[u] = domains[u];
      bool ok = true;
      for (std::size_t u = depth + 1; u < n && ok; ++u) {
        if (src_.leq(depth, u)) next[u] &= tgt_.up(v);
        if (src_.leq(u, depth)) next[u] &= tgt_.down(v);
        ok = next[u].any();
      }
      if (!ok) continue;
      assign_[depth] = static_cast<Elem>(v);
      if (!run(depth + 1)) return false;
    }
    return true;
  }

  const FinPreorder& src_;
  const FinPreorder& tgt_;
  const MapVisitor& visit_;
  Assignment assign_;
  std::vector<Domains> levels_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_monotone(const FinPreorder& src, const FinPreorder& tgt, Domains domains,
                              const MapVisitor& visit) {
  if (domains.size() != src.size()) throw Error(Errc::shape_mismatch, "domain count differs from source size");
  for (const auto& d : domains)
    if (d.size() != tgt.size()) throw Error(Errc::shape_mismatch, "domain width differs from target size");
  for (const auto& d : domains)
    if (d.none()) return 0;
  MonotoneSearch search(src, tgt, visit);
  search.run(std::move(domains));
  return search.visited();
}

std::optional<Assignment> first_monotone(const FinPreorder& src, const FinPreorder& tgt, Domains domains) {
  std::optional<Assignment> found;
  for_each_monotone(src, tgt, std::move(domains), [&](std::span<const Elem> a) {
    found.emplace(a.begin(), a.end());
    return false;
  });
  return found;
}

std::optional<std::size_t> least_of(const FinPreorder& tgt, std::span<const Assignment> maps) {
  if (maps.empty()) return std::nullopt;
  auto below = [&](const Assignment& a, const Assignment& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!tgt.leq(a[i], b[i])) return false;
    return true;
  };
  // Any least element is below the running minimum candidate, so one pass
  // followed by a verification pass suffices.
  std::size_t best = 0;
  for (std::size_t i = 1; i < maps.size(); ++i)
    if (below(maps[i], maps[best]) && !below(maps[best], maps[i])) best = i;
  for (const auto& m : maps)
    if (!below(maps[best], m)) return std::nullopt;
  // Prefer the first index among equivalent minima.
  for (std::size_t i = 0; i < best; ++i)
    if (below(maps[i], maps[best])) return i;
  return best;
}

}  // namespace lofs
