#include "doctest.h"
#include "json.hpp"
#include "lofs/enumerate.hpp"
#include "lofs/factorisation.hpp"
#include "lofs/io.hpp"

using namespace lofs;

namespace {

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::index_out_of_range;
}

}  // namespace

TEST_CASE("reader takes the reflexive-transitive closure") {
  const auto x = as_preorder(parse_object(R"({"type":"preorder","elements":["a","b","c"],"le":[["a","b"],["b","c"]]})"));
  REQUIRE(x->size() == 3);
  CHECK(x->leq(0, 2));
  CHECK(x->leq(1, 1));
  CHECK_FALSE(x->leq(2, 0));
  CHECK(x->label(2) == "c");
}

TEST_CASE("le pairs may use indices and le may be omitted") {
  const auto x = as_preorder(parse_object(R"({"type":"preorder","elements":["a","b"],"le":[[1,0]]})"));
  CHECK(x->leq(1, 0));
  CHECK(as_preorder(parse_object(R"({"type":"preorder","elements":["p"]})"))->size() == 1);
}

TEST_CASE("space objects read as their specialization preorder") {
  const auto obj = parse_object(R"({"type":"space","elements":["c","o"],"le":[["c","o"]]})");
  REQUIRE(std::holds_alternative<FiniteSpace>(obj));
  CHECK(*as_preorder(obj) == *objects::chain(2));
}

TEST_CASE("maps accept object or array assignments") {
  const char* by_name = R"({"type":"map","source":{"type":"preorder","elements":["x"]},
    "target":{"type":"preorder","elements":["0","1"],"le":[["0","1"]]},"assign":{"x":"1"}})";
  const char* by_array = R"({"type":"map","source":{"type":"preorder","elements":["x"]},
    "target":{"type":"preorder","elements":["0","1"],"le":[["0","1"]]},"assign":[1]})";
  const auto f = as_map(parse_object(by_name));
  CHECK(f(0) == 1);
  CHECK(f == as_map(parse_object(by_array)));
}

TEST_CASE("malformed input is an invalid object") {
  CHECK(code_of([] { parse_object("{"); }) == Errc::invalid_object);
  CHECK(code_of([] { parse_object(R"({"elements":[]})"); }) == Errc::invalid_object);
  CHECK(code_of([] { parse_object(R"({"type":"lattice"})"); }) == Errc::invalid_object);
  CHECK(code_of([] { parse_object(R"({"type":"preorder","elements":["a"],"le":[["a","z"]]})"); }) ==
        Errc::invalid_object);
  CHECK(code_of([] { parse_object(R"({"type":"preorder","elements":["a"],"le":[[0,3]]})"); }) == Errc::invalid_object);
  // non-monotone
  CHECK(code_of([] {
          parse_object(R"({"type":"map","source":{"type":"preorder","elements":["0","1"],"le":[["0","1"]]},
            "target":{"type":"preorder","elements":["0","1"],"le":[["0","1"]]},"assign":{"0":"1","1":"0"}})");
        }) == Errc::invalid_object);
  CHECK(code_of([] {
          parse_object(R"({"type":"map","source":{"type":"preorder","elements":["0","1"]},
            "target":{"type":"preorder","elements":["0"]},"assign":{"0":"0"}})");
        }) == Errc::invalid_object);
  CHECK(code_of([] { as_map(parse_object(R"({"type":"preorder","elements":[]})")); }) == Errc::invalid_object);
}

TEST_CASE("family links are validated") {
  const std::string a1 = R"({"type":"preorder","elements":["a"]})";
  const std::string c2 = R"({"type":"preorder","elements":["0","1"],"le":[["0","1"]]})";
  const std::string j = R"({"type":"map","source":)" + a1 + R"(,"target":)" + c2 + R"(,"assign":{"a":"0"}})";
  const std::string top = R"({"type":"map","source":)" + a1 + R"(,"target":)" + a1 + R"(,"assign":{"a":"a"}})";
  const std::string up = R"({"type":"map","source":)" + c2 + R"(,"target":)" + c2 + R"(,"assign":{"0":"1","1":"1"}})";
  const std::string id = R"({"type":"map","source":)" + c2 + R"(,"target":)" + c2 + R"(,"assign":{"0":"0","1":"1"}})";
  auto family = [&](const std::string& bottom) {
    return R"({"type":"family","members":[)" + j + "," + j + R"(],"links":[{"from":0,"to":1,"top":)" + top +
           R"(,"bottom":)" + bottom + "}]}";
  };
  const auto ok = as_family(parse_object(family(id)));
  CHECK(ok.members.size() == 2);
  CHECK(ok.links.size() == 1);
  // j . top = (a |-> 0) but up . j = (a |-> 1)
  CHECK(code_of([&] { parse_object(family(up)); }) == Errc::invalid_object);
  CHECK(as_family(parse_object("[" + j + "]")).members.size() == 1);
}

TEST_CASE("emitted JSON re-parses to the same objects") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& x : enumerate_preorders(n)) {
      const auto back = as_preorder(parse_object(preorder_json(*x)));
      CHECK(*back == *x);
      for (std::size_t i = 0; i < n; ++i) CHECK(back->label(i) == x->label(i));
    }
  const auto f = MonotoneMap::to_terminal(objects::diamond());
  CHECK(as_map(parse_object(map_json(f))) == f);
}

TEST_CASE("factorisation JSON round-trips to the library values") {
  const auto f = MonotoneMap(objects::one(), objects::chain(2), {1});
  const auto d = factorise(f);
  const auto j = nlohmann::json::parse(factorisation_json(d));
  const auto k = as_preorder(parse_object(j["K"].dump()));
  CHECK(k->size() == 3);
  CHECK(*k == *d.k);
  CHECK(as_map(parse_object(j["lambda"].dump())) == d.lambda);
  CHECK(as_map(parse_object(j["rho"].dump())) == d.rho);
}

TEST_CASE("DOT output draws covers between classes") {
  const auto x = share(FinPreorder::closure(3, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}, {1, 2}},
                                            {"p", "q", "r"}));
  const auto dot = to_dot(*x, "x");
  CHECK(dot ==
        "digraph \"x\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"p, q\"];\n  n1 [label=\"r\"];\n"
        "  n0 -> n1;\n}\n");
  CHECK(to_dot(*x, "x") == dot);
}
