#include "lofs/kan.hpp"

#include <stdexcept>

#include "lofs/enumerate.hpp"
#include "lofs/search.hpp"

namespace lofs {

namespace {

void check_shapes(const MonotoneMap& j, const MonotoneMap& f) {
  if (!same_object(j.source_ref(), f.source_ref())) {
    throw Error(Errc::shape_mismatch, "extension: j and f must share their domain");
  }
}

// {f(x) : j(x) <= y} as a subset of A.
DynBitset restricted_image(const MonotoneMap& j, const MonotoneMap& f, Elem y) {
  const FinPreorder& yy = j.target();
  DynBitset s(f.target().size());
  for (std::size_t x = 0; x < j.source().size(); ++x) {
    if (yy.leq(j(x), y)) s.set(f(x));
  }
  return s;
}

}  // namespace

std::optional<MonotoneMap> pointwise_extension(const MonotoneMap& j, const MonotoneMap& f) {
  check_shapes(j, f);
  const FinPreorder& a = f.target();
  Assignment g(j.target().size());
  for (Elem y = 0; y < g.size(); ++y) {
    auto lub = least_upper_bound(a, restricted_image(j, f, y));
    if (!lub) return std::nullopt;
    g[y] = *lub;
  }
  // y <= y' enlarges the restricted image, so g is monotone.
  return MonotoneMap::unchecked(j.target_ref(), f.target_ref(), std::move(g));
}

std::optional<ExtensionWitness> lan_extension(const MonotoneMap& j, const MonotoneMap& f, const Limits& limits) {
  check_shapes(j, f);
  const FinPreorder& a = f.target();
  const FinPreorder& y = j.target();

  // f <= g . j together with monotonicity of g: g(y) bounds the restricted image.
  Domains domains(y.size());
  for (Elem v = 0; v < y.size(); ++v) domains[v] = upper_bounds(a, restricted_image(j, f, v));

  std::vector<Assignment> candidates;
  for_each_monotone(y, a, std::move(domains), [&](std::span<const Elem> g) {
    if (candidates.size() >= limits.max_carrier) throw_size_limit("extension candidates", candidates.size() + 1, limits.max_carrier);
    candidates.emplace_back(g.begin(), g.end());
    return true;
  });

  auto least = least_of(a, candidates);
  auto pointwise = pointwise_extension(j, f);
  if (pointwise) {
    if (!least || !equivalent_maps(*pointwise, MonotoneMap::unchecked(j.target_ref(), f.target_ref(), candidates[*least]))) {
      throw std::logic_error("lan_extension: pointwise extension is not the least candidate");
    }
  }
  if (!least) return std::nullopt;

  auto ext = MonotoneMap::unchecked(j.target_ref(), f.target_ref(), candidates[*least]);
  if (!equivalent_maps(compose(j, ext), f)) return std::nullopt;
  return ExtensionWitness{j, f, std::move(ext)};
}

bool has_lan_extension(const MonotoneMap& j, const MonotoneMap& f, const Limits& limits) {
  if (auto g = pointwise_extension(j, f)) return equivalent_maps(compose(j, *g), f);
  return lan_extension(j, f, limits).has_value();
}

std::optional<KanFailure> kan_injectivity_failure(const PreorderRef& a, const GeneratorFamily& family,
                                                  const Limits& limits) {
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    const MonotoneMap& j = family.members[m];
    std::optional<KanFailure> failure;
    for_each_monotone(j.source(), *a, full_domains(j.source(), *a), [&](std::span<const Elem> values) {
      auto f = MonotoneMap::unchecked(j.source_ref(), a, Assignment(values.begin(), values.end()));
      if (has_lan_extension(j, f, limits)) return true;
      failure = KanFailure{m, f.assignment()};
      return false;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

bool kan_injective(const PreorderRef& a, const GeneratorFamily& family, const Limits& limits) {
  return !kan_injectivity_failure(a, family, limits).has_value();
}

GeneratorFamily embedding_family(std::size_t max_size, bool posets_only, const Limits& limits) {
  EnumerationOptions options{Isomorphism::up_to_iso, posets_only};
  std::vector<PreorderRef> reps;
  for (std::size_t n = 0; n <= max_size; ++n) {
    auto level = enumerate_preorders(n, options, limits);
    reps.insert(reps.end(), level.begin(), level.end());
  }

  GeneratorFamily family;
  for (const auto& x : reps) {
    for (const auto& y : reps) {
      if (x->size() > y->size()) continue;
      for_each_monotone(*x, *y, full_domains(*x, *y), [&](std::span<const Elem> values) {
        auto j = MonotoneMap::unchecked(x, y, Assignment(values.begin(), values.end()));
        if (is_order_embedding(j)) family.members.push_back(std::move(j));
        return true;
      });
    }
  }
  return family;
}

std::vector<ClassificationRow> classify_injectives(std::size_t max_object_size, std::size_t max_generator_size,
                                                   const Limits& limits) {
  const GeneratorFamily all = embedding_family(max_generator_size, false, limits);
  const GeneratorFamily posets = embedding_family(max_generator_size, true, limits);

  std::vector<ClassificationRow> rows;
  for (std::size_t n = 0; n <= max_object_size; ++n) {
    for (auto& a : enumerate_preorders(n, {}, limits)) {
      ClassificationRow row;
      row.object = a;
      row.kan_injective = kan_injective(a, all, limits);
      row.kan_injective_poset_generators = kan_injective(a, posets, limits);
      row.complete_lattice = is_complete_lattice(*a);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace lofs
