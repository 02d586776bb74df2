#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "lofs/factorisation.hpp"
#include "lofs/io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) { return std::string(LOFS_FIXTURES) + "/" + name; }

Result lofs_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lofs::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check complete-lattice") {
  CHECK(lofs_run({"check", "complete-lattice", fixture("diamond.json")}).code == 0);
  const auto a2 = lofs_run({"check", "complete-lattice", fixture("a2.json")});
  CHECK(a2.code == 1);
  CHECK_FALSE(json::parse(a2.out).contains("witness"));
}

TEST_CASE("witness is the smallest subset without a supremum") {
  const auto r = lofs_run({"check", "complete-lattice", fixture("a2.json"), "--witness"});
  REQUIRE(r.code == 1);
  // the empty set: a2 has no least element
  CHECK(json::parse(r.out)["witness"]["subset"] == json::array());
  const auto v = lofs_run({"--witness", "check", "complete-lattice", fixture("vee.json")});
  CHECK(json::parse(v.out)["witness"]["subset"] == json::array());
}

TEST_CASE("factor f: one -> c2 gives a three-element K") {
  const auto r = lofs_run({"factor", fixture("f.json")});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["K"]["elements"].size() == 3);

  // re-parses to exactly what the library computes
  const auto f = lofs::as_map(lofs::load_object(fixture("f.json")));
  const auto d = lofs::factorise(f);
  CHECK(*lofs::as_preorder(lofs::parse_object(j["K"].dump())) == *d.k);
  CHECK(lofs::as_map(lofs::parse_object(j["lambda"].dump())) == d.lambda);
  CHECK(lofs::as_map(lofs::parse_object(j["rho"].dump())) == d.rho);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"dot", fixture("diamond.json")}, {"factor", fixture("f.json")},
        {"filter-space", fixture("sierpinski.json")}, {"enumerate", "3"}}) {
    const auto first = lofs_run(args);
    CHECK(first.code == 0);
    CHECK(lofs_run(args).out == first.out);
  }
  CHECK(lofs_run({"dot", fixture("diamond.json")}).out ==
        "digraph \"diamond\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"bot\"];\n  n1 [label=\"a\"];\n"
        "  n2 [label=\"b\"];\n  n3 [label=\"top\"];\n  n0 -> n1;\n  n0 -> n2;\n  n1 -> n3;\n  n2 -> n3;\n}\n");
}

TEST_CASE("validate normalises and round-trips") {
  const auto r = lofs_run({"validate", fixture("diamond.json")});
  REQUIRE(r.code == 0);
  const auto again = lofs::as_preorder(lofs::parse_object(r.out));
  CHECK(*again == *lofs::as_preorder(lofs::load_object(fixture("diamond.json"))));
  CHECK(lofs_run({"validate", fixture("family.json")}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(lofs_run({}).code == 2);
  CHECK(lofs_run({"frobnicate"}).code == 2);
  CHECK(lofs_run({"check", "no-such-predicate", fixture("a2.json")}).code == 2);
  CHECK(lofs_run({"factor"}).code == 2);
  CHECK(lofs_run({"factor", fixture("missing.json")}).code == 2);
  CHECK(lofs_run({"validate", fixture("malformed.json")}).code == 3);
  // a preorder where a map is expected
  CHECK(lofs_run({"factor", fixture("a2.json")}).code == 3);
  CHECK(lofs_run({"enumerate", "7"}).code == 2);
  CHECK(lofs_run({"enumerate", "6", "--max-size", "5"}).code == 2);
  CHECK(lofs_run({"--max-carrier", "2", "fibrant", fixture("diamond.json")}).code == 2);
  CHECK(lofs_run({"kz", fixture("a2_into_diamond.json"), fixture("diamond_to_one.json"), "--format", "dot"}).code == 2);
  CHECK(lofs_run({"--help"}).code == 0);
}

TEST_CASE("map predicates") {
  CHECK(lofs_run({"check", "full", fixture("a2_into_diamond.json")}).code == 0);
  CHECK(lofs_run({"check", "order-embedding", fixture("a2_into_diamond.json")}).code == 0);
  CHECK(lofs_run({"check", "coalgebra", fixture("a2_into_diamond.json")}).code == 0);
  CHECK(lofs_run({"check", "algebra", fixture("diamond_to_one.json")}).code == 0);
  CHECK(lofs_run({"check", "algebra", fixture("vee_to_one.json")}).code == 1);
  CHECK(lofs_run({"check", "awfs-laws", fixture("f.json")}).code == 0);
  CHECK(lofs_run({"check", "subspace-embedding", fixture("a2_into_diamond.json")}).code == 0);
  const auto top = lofs_run({"top-coalgebra", fixture("a2_into_diamond.json")});
  CHECK(top.code == 0);
  CHECK(json::parse(top.out).contains("f_lower_star"));

  const auto collapse = lofs_run({"check", "full", fixture("diamond_to_one.json"), "--witness"});
  CHECK(collapse.code == 1);
  CHECK(json::parse(collapse.out)["witness"]["images_ordered"] == json({"a", "bot"}));
}

TEST_CASE("space predicates") {
  CHECK(lofs_run({"continuous-lattice", fixture("diamond.json")}).code == 0);
  CHECK(lofs_run({"continuous-lattice", fixture("indiscrete2.json")}).code == 1);
  CHECK(lofs_run({"check", "t0", fixture("sierpinski.json")}).code == 0);
  const auto t0 = lofs_run({"check", "t0", fixture("indiscrete2.json"), "--witness"});
  CHECK(t0.code == 1);
  CHECK(json::parse(t0.out)["witness"]["equivalent"] == json({"x", "y"}));
  CHECK(lofs_run({"check", "filter-monad-laws", fixture("sierpinski.json")}).code == 0);
  const auto fx = json::parse(lofs_run({"filter-space", fixture("sierpinski.json")}).out);
  CHECK(fx["filters"]["elements"].size() == 3);
  CHECK(fx["opens"]["elements"].size() == 3);
}

TEST_CASE("lifting and KZ") {
  // vee has no bottom, so the square (a, b) has no filler
  const auto lift = lofs_run({"lift", fixture("family.json"), fixture("vee_to_one.json"), "--witness"});
  CHECK(lift.code == 1);
  CHECK(json::parse(lift.out)["witness"]["reason"] == "square without a filler");
  const auto ok = lofs_run({"lift", fixture("family.json"), fixture("diamond_to_one.json")});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["members"][0]["squares"].size() == 16);

  const auto kz = lofs_run({"kz", fixture("a2_into_diamond.json"), fixture("diamond_to_one.json")});
  REQUIRE(kz.code == 0);
  const auto squares = json::parse(kz.out)["squares"];
  REQUIRE(squares.size() == 16);
  // h = (a |-> bot, b |-> a): least filler sends top to the join a
  CHECK(squares[1]["diagonal"]["top"] == "a");
  CHECK(lofs_run({"kz", fixture("a2_into_diamond.json"), fixture("vee_to_one.json")}).code == 1);
}

TEST_CASE("Kan-injectivity and classification") {
  CHECK(lofs_run({"kan-injective", fixture("diamond.json")}).code == 0);
  const auto vee = lofs_run({"kan-injective", fixture("vee.json"), "--witness"});
  CHECK(vee.code == 1);
  // the empty map into vee has no extension along 0 -> 1: no least element
  CHECK(json::parse(vee.out)["witness"]["member"]["source"]["elements"].empty());
  CHECK(lofs_run({"kan-injective", fixture("vee.json"), fixture("family.json")}).code == 1);

  const auto rows = lofs_run({"classify", "--max-size", "3"});
  REQUIRE(rows.code == 0);
  const auto j = json::parse(rows.out);
  CHECK(j.size() == 1 + 1 + 3 + 9);
  for (const auto& row : j) CHECK(row["kan_injective"] == row["complete_lattice"]);
}

TEST_CASE("fibrant replacement and enumeration") {
  const auto fr = json::parse(lofs_run({"fibrant", fixture("a2.json")}).out);
  CHECK(fr["K"]["elements"].size() == 4);
  CHECK(fr["P"]["elements"].size() == 4);
  CHECK(json::parse(lofs_run({"enumerate", "4"}).out).size() == 33);
  CHECK(json::parse(lofs_run({"enumerate", "4", "--posets"}).out).size() == 16);
  CHECK(json::parse(lofs_run({"enumerate", "3", "--labelled"}).out).size() == 29);
}

TEST_CASE("suite subset") {
  const auto r = lofs_run({"suite", "--only", "10,11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  10") != std::string::npos);
  const auto j = json::parse(lofs_run({"suite", "--only", "11", "--format", "json"}).out);
  CHECK(j.size() == 1);
  CHECK(j[0]["passed"] == true);
}
