#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lofs/adjunction.hpp"
#include "lofs/downset.hpp"
#include "lofs/enumerate.hpp"
#include "lofs/factorisation.hpp"
#include "lofs/io.hpp"
#include "lofs/kan.hpp"
#include "lofs/lifting.hpp"
#include "lofs/search.hpp"
#include "lofs/suite.hpp"
#include "lofs/topology.hpp"

namespace lofs::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string second;
  std::string predicate;
  std::string format;
  bool witness = false;
  std::optional<std::size_t> max_size;
  std::size_t max_carrier = 4096;
  // enumerate
  std::size_t n = 0;
  bool posets = false;
  bool labelled = false;
  // suite
  std::vector<int> only;
  std::uint64_t seed = SuiteOptions{}.seed;

  Limits limits() const {
    Limits l;
    l.max_carrier = max_carrier;
    return l;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parsed(const std::string& text) { return json::parse(text); }

json subset_labels(const FinPreorder& x, const DynBitset& s) {
  auto out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(x.label(i)); });
  return out;
}

// {source label: target label}
json assignment(const FinPreorder& src, const FinPreorder& tgt, const Assignment& a) {
  json out = json::object();
  for (std::size_t i = 0; i < a.size(); ++i) out[src.label(i)] = tgt.label(a[i]);
  return out;
}

json family_json(const GeneratorFamily& fam) {
  json j;
  j["type"] = "family";
  j["members"] = json::array();
  for (const auto& m : fam.members) j["members"].push_back(parsed(map_json(m)));
  j["links"] = json::array();
  for (const auto& l : fam.links)
    j["links"].push_back({{"from", l.from}, {"to", l.to}, {"top", parsed(map_json(l.top))},
                          {"bottom", parsed(map_json(l.bottom))}});
  return j;
}

json square_json(const Square& sq) {
  return {{"h", assignment(sq.h.source(), sq.h.target(), sq.h.assignment())},
          {"k", assignment(sq.k.source(), sq.k.target(), sq.k.assignment())}};
}

// Witness searches ------------------------------------------------------------

// Subsets in order of size, then of their bitmask.
std::optional<DynBitset> first_subset(std::size_t n, const std::function<bool(const DynBitset&)>& bad) {
  if (n > 16) throw_size_limit("witness subset search", n, 16);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      DynBitset s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1U << i)) s.set(i);
      if (bad(s)) return s;
    }
  return std::nullopt;
}

json distinct_equivalent_pair(const FinPreorder& x) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x.equivalent(a, b)) return {{"equivalent", {x.label(a), x.label(b)}}};
  return nullptr;
}

json missing_sup(const FinPreorder& x) {
  auto s = first_subset(x.size(), [&](const DynBitset& s) { return !least_upper_bound(x, s); });
  if (!s) return nullptr;
  return {{"subset", subset_labels(x, *s)}, {"upper_bounds", subset_labels(x, upper_bounds(x, *s))}};
}

json non_full_pair(const MonotoneMap& f) {
  const auto& a = f.source();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f.target().leq(f(x), f(y)) && !a.leq(x, y))
        return {{"images_ordered", {a.label(x), a.label(y)}}, {"but_not", {f.target().label(f(x)), f.target().label(f(y))}}};
  return nullptr;
}

json non_injective_pair(const MonotoneMap& f) {
  for (std::size_t x = 0; x < f.source().size(); ++x)
    for (std::size_t y = x + 1; y < f.source().size(); ++y)
      if (f(x) == f(y)) return {{"same_image", {f.source().label(x), f.source().label(y)}}};
  return nullptr;
}

json unpreserved_sup(const MonotoneMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  auto s = first_subset(a.size(), [&](const DynBitset& s) {
    const auto sup = least_upper_bound(a, s);
    if (!sup) return false;
    DynBitset image(b.size());
    s.for_each([&](std::size_t i) { image.set(f(i)); });
    const auto target_sup = least_upper_bound(b, image);
    return !target_sup || !b.equivalent(*target_sup, f(*sup));
  });
  if (!s) return nullptr;
  return {{"subset", subset_labels(a, *s)}, {"sup", a.label(*least_upper_bound(a, *s))}};
}

json not_continuous(const FinPreorder& l) {
  if (!l.is_poset()) return distinct_equivalent_pair(l);
  if (!is_complete_lattice(l)) return missing_sup(l);
  const auto wb = way_below(l);
  for (std::size_t y = 0; y < l.size(); ++y) {
    DynBitset below(l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
      if (wb[x].test(y)) below.set(x);
    const auto sup = least_upper_bound(l, below);
    if (!sup || *sup != y) return {{"element", l.label(y)}, {"way_below", subset_labels(l, below)}};
  }
  return nullptr;
}

json not_subspace(const MonotoneMap& f, const Limits& limits) {
  if (auto w = non_injective_pair(f); !w.is_null()) return w;
  const auto ox = upsets(f.source_ref(), limits);
  const auto oy = upsets(f.target_ref(), limits);
  std::vector<DynBitset> preimages;
  for (const auto& v : oy.sets) preimages.push_back(preimage(f, v));
  for (const auto& u : ox.sets)
    if (std::find(preimages.begin(), preimages.end(), u) == preimages.end())
      return {{"open_not_a_preimage", subset_labels(f.source(), u)}};
  return nullptr;
}

json not_top_coalgebra(const MonotoneMap& f, const Limits& limits) {
  const auto ox = upsets(f.source_ref(), limits);
  const auto oy = upsets(f.target_ref(), limits);
  const auto fs = f_lower_star(f, ox, oy);
  for (std::size_t u = 0; u < ox.sets.size(); ++u)
    for (std::size_t v = 0; v < ox.sets.size(); ++v)
      if (oy.carrier->leq(fs(u), fs(v)) && !ox.carrier->leq(u, v))
        return {{"opens", {subset_labels(f.source(), ox.sets[u]), subset_labels(f.source(), ox.sets[v])}},
                {"pushed_forward", {subset_labels(f.target(), oy.sets[fs(u)]), subset_labels(f.target(), oy.sets[fs(v)])}}};
  return nullptr;
}

json not_scott_continuous(const MonotoneMap& f) {
  const auto source_opens = scott_opens(f.source());
  for (const auto& v : scott_opens(f.target()))
    if (std::find(source_opens.begin(), source_opens.end(), preimage(f, v)) == source_opens.end())
      return {{"open", subset_labels(f.target(), v)}, {"preimage", subset_labels(f.source(), preimage(f, v))}};
  return nullptr;
}

json failed_laws(const std::vector<std::pair<const char*, bool>>& laws) {
  auto out = json::array();
  for (const auto& [name, holds] : laws)
    if (!holds) out.push_back(name);
  return {{"failed_laws", out}};
}

// Predicates ------------------------------------------------------------------

struct Verdict {
  bool holds = false;
  json witness;  // only filled on failure
};

using Predicate = std::function<Verdict(const JsonObject&, const Limits&)>;

Verdict verdict(bool holds, const std::function<json()>& witness) {
  return {holds, holds ? json() : witness()};
}

const std::map<std::string, Predicate>& predicates() {
  static const std::map<std::string, Predicate> table = {
      {"poset",
       [](const JsonObject& o, const Limits&) {
         const auto x = as_preorder(o);
         return verdict(x->is_poset(), [&] { return distinct_equivalent_pair(*x); });
       }},
      {"t0",
       [](const JsonObject& o, const Limits&) {
         const auto x = as_preorder(o);
         return verdict(FiniteSpace{x}.is_t0(), [&] { return distinct_equivalent_pair(*x); });
       }},
      {"complete-lattice",
       [](const JsonObject& o, const Limits&) {
         const auto x = as_preorder(o);
         return verdict(is_complete_lattice(*x), [&] { return missing_sup(*x); });
       }},
      {"complete-lattice-strict",
       [](const JsonObject& o, const Limits&) {
         const auto x = as_preorder(o);
         return verdict(is_complete_lattice_strict(*x), [&] {
           return x->is_poset() ? missing_sup(*x) : distinct_equivalent_pair(*x);
         });
       }},
      {"continuous-lattice",
       [](const JsonObject& o, const Limits&) {
         const auto x = as_preorder(o);
         return verdict(is_continuous_lattice(*x), [&] { return not_continuous(*x); });
       }},
      {"lax-idempotent",
       [](const JsonObject& o, const Limits& limits) {
         return verdict(check_lax_idempotent_P(as_preorder(o), limits), [] { return json(); });
       }},
      {"downset-monad-laws",
       [](const JsonObject& o, const Limits& limits) {
         const auto laws = check_downset_monad_laws(as_preorder(o), limits);
         return verdict(laws.all(), [&] {
           return failed_laws({{"left_unit", laws.left_unit}, {"right_unit", laws.right_unit},
                               {"associative", laws.associative}});
         });
       }},
      {"filter-monad-laws",
       [](const JsonObject& o, const Limits& limits) {
         const auto laws = check_filter_monad_laws(FiniteSpace{as_preorder(o)}, limits);
         return verdict(laws.all(), [&] {
           return failed_laws({{"unit_monotone", laws.unit_monotone}, {"left_unit", laws.left_unit},
                               {"right_unit", laws.right_unit}, {"associative", laws.associative}});
         });
       }},
      {"full",
       [](const JsonObject& o, const Limits&) {
         const auto f = as_map(o);
         return verdict(is_full(f), [&] { return non_full_pair(f); });
       }},
      {"injective",
       [](const JsonObject& o, const Limits&) {
         const auto f = as_map(o);
         return verdict(is_injective(f), [&] { return non_injective_pair(f); });
       }},
      {"order-embedding",
       [](const JsonObject& o, const Limits&) {
         const auto f = as_map(o);
         return verdict(is_order_embedding(f), [&] { return non_full_pair(f); });
       }},
      {"preserves-sups",
       [](const JsonObject& o, const Limits&) {
         const auto f = as_map(o);
         return verdict(preserves_all_sups(f), [&] { return unpreserved_sup(f); });
       }},
      {"scott-continuous",
       [](const JsonObject& o, const Limits&) {
         const auto f = as_map(o);
         return verdict(is_scott_continuous(f), [&] { return not_scott_continuous(f); });
       }},
      {"coalgebra",
       [](const JsonObject& o, const Limits& limits) {
         const auto f = as_map(o);
         return verdict(coalgebra_structure(f, Equality::up_to_equivalence, limits).has_value(),
                        [&] { return non_full_pair(f); });
       }},
      {"algebra",
       [](const JsonObject& o, const Limits& limits) {
         const auto g = as_map(o);
         return verdict(algebra_structure(g, Equality::up_to_equivalence, limits).has_value(), [] { return json(); });
       }},
      {"awfs-laws",
       [](const JsonObject& o, const Limits& limits) {
         const auto r = check_awfs_laws(as_map(o), limits);
         return verdict(r.all(), [&] {
           return failed_laws({{"factorises", r.factorises},
                               {"lambda_full", r.lambda_full},
                               {"pi_closed_form", r.pi_closed_form},
                               {"sigma_closed_form", r.sigma_closed_form},
                               {"monad_unit_left", r.monad_unit_left},
                               {"monad_unit_right", r.monad_unit_right},
                               {"comonad_counit_left", r.comonad_counit_left},
                               {"comonad_counit_right", r.comonad_counit_right},
                               {"coassociative", r.coassociative},
                               {"unit_comparison", r.unit_comparison},
                               {"pi_adjunctions", r.pi_adjunctions},
                               {"sigma_adjunctions", r.sigma_adjunctions},
                               {"mixed_law", r.mixed_law},
                               {"associative", r.associative.value_or(true)}});
         });
       }},
      {"subspace-embedding",
       [](const JsonObject& o, const Limits& limits) {
         const auto f = as_map(o);
         return verdict(is_subspace_embedding(f, limits), [&] { return not_subspace(f, limits); });
       }},
      {"top-coalgebra",
       [](const JsonObject& o, const Limits& limits) {
         const auto f = as_map(o);
         return verdict(is_top_coalgebra(f, limits), [&] { return not_top_coalgebra(f, limits); });
       }},
  };
  return table;
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : predicates()) names.push_back(name);
  return names;
}

// Verbs -----------------------------------------------------------------------

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int validate() {
    const auto obj = load_object(o_.file);
    if (dot()) return emit_dot(*as_preorder(obj), "preorder");
    json j;
    if (auto p = std::get_if<PreorderRef>(&obj)) j = parsed(preorder_json(**p));
    else if (auto s = std::get_if<FiniteSpace>(&obj)) j = parsed(preorder_json(*s->points, "space"));
    else if (auto m = std::get_if<MonotoneMap>(&obj)) j = parsed(map_json(*m));
    else j = family_json(std::get<GeneratorFamily>(obj));
    return emit(j);
  }

  int factor() {
    const auto d = factorise(as_map(load_object(o_.file)), limits());
    if (dot()) return emit_dot(*d.k, "K");
    out_ << factorisation_json(d) << '\n';
    return ok;
  }

  int fibrant() {
    const auto fr = fibrant_replacement(as_preorder(load_object(o_.file)), limits());
    if (dot()) return emit_dot(*fr.data.k, "K");
    json j;
    j["K"] = parsed(preorder_json(*fr.data.k));
    j["lambda"] = parsed(map_json(fr.data.lambda));
    j["P"] = parsed(preorder_json(*fr.pa.carrier));
    j["iso"] = parsed(map_json(fr.iso));
    return emit(j);
  }

  int check(const std::string& name, const std::function<void(json&)>& extra = {}) {
    no_dot();
    const auto obj = load_object(o_.file);
    const auto v = predicates().at(name)(obj, limits());
    json j;
    j["predicate"] = name;
    j["holds"] = v.holds;
    if (extra) extra(j);
    if (!v.holds && o_.witness) j["witness"] = v.witness;
    emit(j);
    return v.holds ? ok : predicate_false;
  }

  int top_coalgebra() {
    return check("top-coalgebra", [&](json& j) {
      const auto f = as_map(load_object(o_.file));
      j["f_lower_star"] = parsed(map_json(f_lower_star(f, limits())));
    });
  }

  int lift() {
    no_dot();
    const auto family = as_family(load_object(o_.file));
    const auto g = as_map(load_object(o_.second));
    const auto s = lifting_structure(family, g, limits());
    json j;
    j["exists"] = s.has_value();
    if (s) {
      j["canonical"] = s->canonical;
      j["members"] = json::array();
      for (std::size_t m = 0; m < family.members.size(); ++m) {
        auto squares = json::array();
        for (std::size_t i = 0; i < s->squares[m].squares.size(); ++i) {
          const auto sq = s->squares[m].square(i);
          auto e = square_json(sq);
          e["filler"] = assignment(sq.j.target(), sq.g.source(), s->chosen[m][i]);
          squares.push_back(std::move(e));
        }
        j["members"].push_back({{"squares", std::move(squares)}});
      }
    } else if (o_.witness) {
      j["witness"] = {{"reason", "fillers exist square by square but no coherent choice does"}};
      for (std::size_t m = 0; m < family.members.size(); ++m) {
        const auto sp = sq_hom_poset(family.members[m], g, limits());
        for (std::size_t i = 0; i < sp.squares.size(); ++i)
          if (fillers(sp.square(i), limits()).empty()) {
            j["witness"] = {{"reason", "square without a filler"}, {"member", m}};
            j["witness"].update(square_json(sp.square(i)));
            return emit(j, predicate_false);
          }
      }
    }
    return emit(j, s ? ok : predicate_false);
  }

  int kz() {
    no_dot();
    const auto jm = as_map(load_object(o_.file));
    const auto g = as_map(load_object(o_.second));
    const auto k = kz_orthogonal(jm, g, limits());
    json j;
    j["exists"] = k.has_value();
    if (k) {
      j["squares"] = json::array();
      for (std::size_t i = 0; i < k->comparison.squares.squares.size(); ++i) {
        auto e = square_json(k->comparison.squares.square(i));
        const auto d = k->section(i);
        e["diagonal"] = assignment(d.source(), d.target(), d.assignment());
        j["squares"].push_back(std::move(e));
      }
    } else if (o_.witness) {
      j["witness"] = {{"reason", "least fillers exist but do not vary monotonically with the square"}};
      const auto sp = sq_hom_poset(jm, g, limits());
      for (std::size_t i = 0; i < sp.squares.size(); ++i) {
        const auto sq = sp.square(i);
        const auto all = fillers(sq, limits());
        if (all.empty() || !least_of(g.source(), all)) {
          j["witness"] = square_json(sq);
          j["witness"]["reason"] = all.empty() ? "no filler" : "no least filler";
          auto listed = json::array();
          for (const auto& a : all) listed.push_back(assignment(jm.target(), g.source(), a));
          j["witness"]["fillers"] = std::move(listed);
          break;
        }
      }
    }
    return emit(j, k ? ok : predicate_false);
  }

  int kan_injective_verb() {
    no_dot();
    const auto a = as_preorder(load_object(o_.file));
    const auto family =
        o_.second.empty() ? embedding_family(o_.max_size.value_or(3), false, limits()) : as_family(load_object(o_.second));
    const auto failure = kan_injectivity_failure(a, family, limits());
    json j;
    j["kan_injective"] = !failure.has_value();
    j["complete_lattice"] = is_complete_lattice(*a);
    j["generators"] = family.members.size();
    if (failure && o_.witness) {
      const auto& member = family.members[failure->member];
      j["witness"] = {{"member", parsed(map_json(member))},
                      {"f", assignment(member.source(), *a, failure->f)}};
    }
    return emit(j, failure ? predicate_false : ok);
  }

  int classify() {
    no_dot();
    const std::size_t n = o_.max_size.value_or(4);
    const auto rows = classify_injectives(n, std::min<std::size_t>(n, 4), limits());
    auto j = json::array();
    bool agree = true;
    for (const auto& r : rows) {
      j.push_back({{"object", parsed(preorder_json(*r.object))},
                   {"kan_injective", r.kan_injective},
                   {"kan_injective_poset_generators", r.kan_injective_poset_generators},
                   {"complete_lattice", r.complete_lattice}});
      agree = agree && r.agrees();
    }
    return emit(j, agree ? ok : predicate_false);
  }

  int filter_space_verb() {
    const FiniteSpace x{as_preorder(load_object(o_.file))};
    const auto fx = filter_space(x, limits());
    if (dot()) return emit_dot(*fx.points(), "FX");
    json j;
    j["opens"] = parsed(preorder_json(*fx.opens.carrier));
    j["filters"] = parsed(preorder_json(*fx.points(), "space"));
    j["unit"] = parsed(map_json(filter_unit(fx)));
    return emit(j);
  }

  int enumerate() {
    no_dot();
    Limits l = limits();
    if (o_.max_size) l.max_enumeration = *o_.max_size;
    const auto all = enumerate_preorders(
        o_.n, {o_.labelled ? Isomorphism::labelled : Isomorphism::up_to_iso, o_.posets}, l);
    auto j = json::array();
    for (const auto& x : all) j.push_back(parsed(preorder_json(*x)));
    return emit(j);
  }

  int dot_verb() {
    const auto x = as_preorder(load_object(o_.file));
    return emit_dot(*x, std::filesystem::path(o_.file).stem().string());
  }

  int suite() {
    SuiteOptions options;
    options.limits = limits();
    options.only = o_.only;
    options.seed = o_.seed;
    const bool as_json = o_.format == "json";
    if (o_.format == "dot") throw UsageError("suite has no DOT output");
    // Timings go to stderr so that stdout is reproducible.
    const auto report = run_suite(options, [&](const CriterionResult& r) {
      err_ << (r.passed ? "PASS" : "FAIL") << " " << r.id << " (" << r.seconds << " s)\n";
      if (as_json) return;
      out_ << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  [" << r.cases << " cases]\n";
      out_ << "      " << r.detail << '\n';
      if (!r.witness.empty()) out_ << "      witness: " << r.witness << '\n';
    });
    if (as_json) {
      auto j = json::array();
      for (const auto& r : report.results) {
        json e = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}};
        if (!r.witness.empty()) e["witness"] = parsed(r.witness);
        j.push_back(std::move(e));
      }
      out_ << j.dump(2) << '\n';
    }
    return report.passed() ? ok : predicate_false;
  }

 private:
  Limits limits() const { return o_.limits(); }
  bool dot() const { return o_.format == "dot"; }
  void no_dot() const {
    if (dot()) throw UsageError("this command has no DOT output");
  }
  int emit(const json& j, int code = ok) {
    out_ << j.dump(2) << '\n';
    return code;
  }
  int emit_dot(const FinPreorder& x, const std::string& name) {
    out_ << to_dot(x, name);
    return ok;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite order theory: factorisations, lifting structures, Kan-injectivity and finite spaces", "lofs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--witness", o.witness, "Print a counterexample when a predicate fails");
  app.add_option("--max-size", o.max_size, "Size bound for enumeration, classification and generator families");
  app.add_option("--max-carrier", o.max_carrier, "Largest intermediate carrier to build")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  auto* validate = app.add_subcommand("validate", "Parse an object and print it in normal form");
  validate->add_option("file", o.file)->required();
  auto* factor = app.add_subcommand("factor", "Factorise a map as f = rho . lambda through Kf");
  factor->add_option("map", o.file)->required();
  auto* fibrant = app.add_subcommand("fibrant", "K(A -> 1) and its isomorphism with the down-set lattice");
  fibrant->add_option("preorder", o.file)->required();
  auto* check = app.add_subcommand("check", "Evaluate a predicate");
  check->add_option("predicate", o.predicate)->required()->check(CLI::IsMember(predicate_names()));
  check->add_option("file", o.file)->required();
  auto* lift = app.add_subcommand("lift", "Coherent lifting structure of a family against a map");
  lift->add_option("family", o.file)->required();
  lift->add_option("g", o.second)->required();
  auto* kz = app.add_subcommand("kz", "KZ lifting operation of j against g");
  kz->add_option("j", o.file)->required();
  kz->add_option("g", o.second)->required();
  auto* kan = app.add_subcommand("kan-injective", "Kan-injectivity against a family (default: embeddings)");
  kan->add_option("preorder", o.file)->required();
  kan->add_option("family", o.second);
  auto* classify = app.add_subcommand("classify", "Kan-injectivity versus completeness for all small preorders");
  auto* filters = app.add_subcommand("filter-space", "Opens, filters and the unit of the filter monad");
  filters->add_option("space", o.file)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Preorders of a given size");
  enumerate->add_option("n", o.n)->required();
  enumerate->add_flag("--posets", o.posets, "Posets only");
  enumerate->add_flag("--labelled", o.labelled, "Do not identify isomorphic preorders");
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("preorder", o.file)->required();
  auto* suite = app.add_subcommand("suite", "Run the property battery, stopping at the first failure");
  suite->add_option("--only", o.only, "Criterion ids to run")->delimiter(',');
  suite->add_option("--seed", o.seed, "Seed for sampled checks");
  auto* continuous = app.add_subcommand("continuous-lattice", "Same as: check continuous-lattice");
  continuous->add_option("preorder", o.file)->required();
  auto* top = app.add_subcommand("top-coalgebra", "Fullness of f_* between open-set lattices");
  top->add_option("map", o.file)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  }

  Runner r(o, out, err);
  try {
    if (validate->parsed()) return r.validate();
    if (factor->parsed()) return r.factor();
    if (fibrant->parsed()) return r.fibrant();
    if (check->parsed()) return r.check(o.predicate);
    if (lift->parsed()) return r.lift();
    if (kz->parsed()) return r.kz();
    if (kan->parsed()) return r.kan_injective_verb();
    if (classify->parsed()) return r.classify();
    if (filters->parsed()) return r.filter_space_verb();
    if (enumerate->parsed()) return r.enumerate();
    if (dot->parsed()) return r.dot_verb();
    if (suite->parsed()) return r.suite();
    if (continuous->parsed()) return r.check("continuous-lattice");
    if (top->parsed()) return r.top_coalgebra();
  } catch (const Error& e) {
    err << "lofs: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::size_limit_exceeded ? usage_error : invalid_object;
  } catch (const std::exception& e) {
    err << "lofs: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace lofs::cli
