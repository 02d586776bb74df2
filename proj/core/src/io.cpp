#include "lofs/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lofs {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::invalid_object, what); }

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

std::string type_of(const json& j) {
  if (j.is_array()) return "family";
  if (!j.is_object()) bad("expected a JSON object");
  const auto& t = field(j, "type");
  if (!t.is_string()) bad("\"type\" must be a string");
  return t.get<std::string>();
}

Elem element_ref(const FinPreorder& x, const json& v) {
  if (v.is_string()) {
    auto i = x.find_label(v.get<std::string>());
    if (!i) bad("unknown element \"" + v.get<std::string>() + "\"");
    return *i;
  }
  if (v.is_number_unsigned()) {
    auto i = v.get<std::size_t>();
    if (i >= x.size()) bad("element index " + std::to_string(i) + " out of range");
    return static_cast<Elem>(i);
  }
  bad("elements are referenced by name or index");
}

class Reader {
 public:
  explicit Reader(std::filesystem::path base) : base_(std::move(base)) {}

  JsonObject object(const json& j) {
    const auto type = type_of(j);
    if (type == "preorder") return preorder(j);
    if (type == "space") return FiniteSpace{preorder(j)};
    if (type == "map") return map(j);
    if (type == "family") return family(j);
    bad("unknown type \"" + type + "\"");
  }

  PreorderRef preorder(const json& j) {
    if (j.is_string()) return as_preorder(load(j.get<std::string>()));
    const auto type = type_of(j);
    if (type != "preorder" && type != "space") bad("expected a preorder, got \"" + type + "\"");
    const auto& elements = field(j, "elements");
    if (!elements.is_array()) bad("\"elements\" must be an array");
    std::vector<std::string> labels;
    for (const auto& e : elements) {
      if (!e.is_string()) bad("element names must be strings");
      labels.push_back(e.get<std::string>());
    }
    const auto unlabelled = FinPreorder::closure(labels.size(), {}, labels);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (auto it = j.find("le"); it != j.end()) {
      if (!it->is_array()) bad("\"le\" must be an array of pairs");
      for (const auto& p : *it) {
        if (!p.is_array() || p.size() != 2) bad("each \"le\" entry must be a pair");
        pairs.emplace_back(element_ref(unlabelled, p[0]), element_ref(unlabelled, p[1]));
      }
    }
    const std::size_t n = labels.size();
    return share(FinPreorder::closure(n, pairs, std::move(labels)));
  }

  MonotoneMap map(const json& j) {
    if (j.is_string()) return as_map(load(j.get<std::string>()));
    if (type_of(j) != "map") bad("expected a map");
    auto src = preorder(field(j, "source"));
    auto tgt = preorder(field(j, "target"));
    const auto& assign = field(j, "assign");
    Assignment a(src->size());
    if (assign.is_object()) {
      std::vector<bool> seen(src->size(), false);
      for (const auto& [key, value] : assign.items()) {
        const Elem x = element_ref(*src, json(key));
        a[x] = element_ref(*tgt, value);
        seen[x] = true;
      }
      for (std::size_t x = 0; x < seen.size(); ++x)
        if (!seen[x]) bad("\"assign\" has no value for " + src->label(x));
    } else if (assign.is_array()) {
      if (assign.size() != src->size()) bad("\"assign\" array length differs from the source size");
      for (std::size_t x = 0; x < a.size(); ++x) a[x] = element_ref(*tgt, assign[x]);
    } else {
      bad("\"assign\" must be an object or an array");
    }
    return MonotoneMap(std::move(src), std::move(tgt), std::move(a));
  }

  GeneratorFamily family(const json& j) {
    GeneratorFamily fam;
    const json& members = j.is_array() ? j : field(j, "members");
    if (!members.is_array()) bad("\"members\" must be an array");
    for (const auto& m : members) fam.members.push_back(map(m));
    if (j.is_object()) {
      if (auto it = j.find("links"); it != j.end()) {
        if (!it->is_array()) bad("\"links\" must be an array");
        for (const auto& l : *it) {
          const auto& from = field(l, "from");
          const auto& to = field(l, "to");
          if (!from.is_number_unsigned() || !to.is_number_unsigned()) bad("link endpoints are member indices");
          fam.links.push_back({from.get<std::size_t>(), to.get<std::size_t>(), map(field(l, "top")), map(field(l, "bottom"))});
        }
      }
    }
    fam.validate();
    return fam;
  }

 private:
  JsonObject load(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) p = base_ / p;
    return load_object(p);
  }

  std::filesystem::path base_;
};

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Class representatives (lowest index) in index order.
std::vector<std::size_t> representatives(const FinPreorder& x) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.equivalence_class(i).find_first() == i) reps.push_back(i);
  return reps;
}

// (lower, upper) representative pairs of the cover relation.
std::vector<std::pair<std::size_t, std::size_t>> covers(const FinPreorder& x, const std::vector<std::size_t>& reps) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  auto strictly = [&](std::size_t a, std::size_t b) { return x.leq(a, b) && !x.leq(b, a); };
  for (auto a : reps)
    for (auto b : reps) {
      if (!strictly(a, b)) continue;
      bool between = false;
      for (auto c : reps)
        if (strictly(a, c) && strictly(c, b)) between = true;
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

ordered preorder_value(const FinPreorder& x, std::string_view type) {
  ordered j;
  j["type"] = std::string(type);
  auto elements = ordered::array();
  for (std::size_t i = 0; i < x.size(); ++i) elements.push_back(x.label(i));
  j["elements"] = std::move(elements);

  auto le = ordered::array();
  const auto reps = representatives(x);
  for (auto r : reps) {
    const auto members = x.equivalence_class(r).to_indices();
    if (members.size() < 2) continue;
    for (std::size_t k = 0; k < members.size(); ++k)
      le.push_back({x.label(members[k]), x.label(members[(k + 1) % members.size()])});
  }
  for (const auto& [a, b] : covers(x, reps)) le.push_back({x.label(a), x.label(b)});
  j["le"] = std::move(le);
  return j;
}

ordered map_value(const MonotoneMap& f) {
  ordered j;
  j["type"] = "map";
  j["source"] = preorder_value(f.source(), "preorder");
  j["target"] = preorder_value(f.target(), "preorder");
  ordered assign = ordered::object();
  for (std::size_t x = 0; x < f.source().size(); ++x) assign[f.source().label(x)] = f.target().label(f(x));
  j["assign"] = std::move(assign);
  return j;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

JsonObject parse_object(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return Reader(base_dir).object(j);
}

JsonObject load_object(const std::filesystem::path& file) {
  return parse_object(read_file(file), file.parent_path());
}

PreorderRef as_preorder(const JsonObject& obj) {
  if (auto p = std::get_if<PreorderRef>(&obj)) return *p;
  if (auto s = std::get_if<FiniteSpace>(&obj)) return s->points;
  bad("expected a preorder");
}

MonotoneMap as_map(const JsonObject& obj) {
  if (auto m = std::get_if<MonotoneMap>(&obj)) return *m;
  bad("expected a map");
}

GeneratorFamily as_family(const JsonObject& obj) {
  if (auto f = std::get_if<GeneratorFamily>(&obj)) return *f;
  if (auto m = std::get_if<MonotoneMap>(&obj)) return GeneratorFamily::of({*m});
  bad("expected a family of maps");
}

std::string preorder_json(const FinPreorder& x, std::string_view type) { return preorder_value(x, type).dump(2); }

std::string map_json(const MonotoneMap& f) { return map_value(f).dump(2); }

std::string factorisation_json(const FactorisationData& d) {
  ordered j;
  j["K"] = preorder_value(*d.k, "preorder");
  j["lambda"] = map_value(d.lambda);
  j["rho"] = map_value(d.rho);
  return j.dump(2);
}

std::string to_dot(const FinPreorder& x, std::string_view name) {
  const auto reps = representatives(x);
  std::ostringstream out;
  out << "digraph " << dot_quote(std::string(name)) << " {\n";
  out << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::string label;
    for (auto m : x.equivalence_class(reps[c]).to_indices()) {
      if (!label.empty()) label += ", ";
      label += x.label(m);
    }
    out << "  n" << c << " [label=" << dot_quote(label) << "];\n";
  }
  auto node = [&](std::size_t rep) { return std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin(); };
  for (const auto& [a, b] : covers(x, reps)) out << "  n" << node(a) << " -> n" << node(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace lofs
