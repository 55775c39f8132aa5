#include "doctest.h"
#include "msa/error.hpp"
#include "msa/report.hpp"
#include "msa/request.hpp"

using namespace msa;

TEST_CASE("JSON 1-Kronecker") {
  const auto req = parse_request(
      R"({"quiver":{"vertices":["s","t"],"arrows":[{"name":"a","source":"s","target":"t"}]}})");
  const auto n = normalize(req);
  CHECK(n.quiver.vertex_count() == 2);
  CHECK(n.quiver.arrow_count_between(0, 1) == 1);
  CHECK(n.warnings.empty());
}

TEST_CASE("DSL 2-Kronecker with comments") {
  const auto req = parse_request("# two arrows\nvertices s t;\narrows a1: s->t,   a2: s->t;  # done\n");
  const auto n = normalize(req);
  CHECK(n.quiver.arrow_count_between(0, 1) == 2);
  CHECK(n.quiver.arrow(2).label == "a2");
}

TEST_CASE("ideal generator from JSON") {
  const auto req = parse_request(R"({"quiver":{"vertices":["a","b","c"],"arrows":[
      {"name":"a1","source":"a","target":"b"},{"name":"a2","source":"a","target":"b"},
      {"name":"g1","source":"b","target":"c"},{"name":"g2","source":"b","target":"c"}]},
      "ideal":{"generators":[{"terms":[{"coeff":"1","path":["a1","g2"]},{"coeff":"1","path":["a2","g1"]}]}]}})");
  const auto n = normalize(req);
  REQUIRE(n.ideal.has_value());
  REQUIRE(n.ideal->generators.size() == 1);
  const auto& g = n.ideal->generators[0];
  CHECK(g.coefficient(make_path(n.quiver, {1, 4})) == 1);
  CHECK(g.coefficient(make_path(n.quiver, {2, 3})) == 1);
  CHECK(g.terms().size() == 2);
}

TEST_CASE("DSL ideal with signs and rational coefficients") {
  const auto req = parse_request("vertices a b c; arrows x: a->b, y: b->c; ideal (1)x*y - (3/2) x * y;");
  const auto n = normalize(req);
  CHECK(n.ideal->generators[0].coefficient(make_path(n.quiver, {1, 2})) == Scalar(-1, 2));
}

TEST_CASE("parse errors name the location") {
  auto where = [](const std::string& text) {
    try {
      normalize(parse_request(text));
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("no error");
  };
  CHECK(where(R"({"quiver":{"vertices":["s","s"]}})") == "quiver.vertices[1]");
  CHECK(where(R"({"quiver":{"vertices":["s"],"arrows":[{"name":"a","source":"s","target":"x"}]}})") ==
        "quiver.arrows[0].target");
  CHECK(where("vertices s t;\narrows a: s->t;\nideal (1/0)a*a;") == "line 3");
  CHECK(where("vertices s t;\narrows a s->t;") == "line 2");
  CHECK(where("vertices s t") == "line 1");
  CHECK(where(R"({"quiver":)") == "json");
  CHECK(where("vertices a b; arrows x: a->b; ideal x*x;") == "ideal.generators[0].terms[0]");
  CHECK(where(R"({"schema":"other/2","quiver":{"vertices":["s"]}})") == "schema");
}

TEST_CASE("auto basepoint skips looped vertices") {
  const auto n = normalize(parse_request("vertices a b c; arrows l: a->a, x: a->b;"));
  CHECK(n.quiver.vertices()[0].label == "b");
  CHECK(n.vertex_order == std::vector<std::size_t>{1, 0, 2});
  // Relabeling puts x: a->b (now 1->0) after l: a->a (1->1) out of block order.
  REQUIRE(n.warnings.size() == 2);
  CHECK(n.warnings[0].find("basepoint b moved") != std::string::npos);
  CHECK(n.warnings[1].find("reordered") != std::string::npos);

  const auto all = normalize(parse_request("vertices a; arrows l: a->a, m: a->a;"));
  CHECK(all.quiver.vertices()[0].label == "a");
  REQUIRE(all.warnings.size() == 1);
  CHECK(all.warnings[0].find("loop") != std::string::npos);

  const auto fixed = normalize(parse_request("vertices a b; arrows x: a->b;"));
  CHECK(fixed.warnings.empty());
}

TEST_CASE("explicit basepoint") {
  AnalysisRequest req = parse_request("vertices a b c; arrows x: a->b;");
  req.options.basepoint = "c";
  const auto n = normalize(req);
  CHECK(n.quiver.vertices()[0].label == "c");
  req.options.basepoint = "zz";
  CHECK_THROWS_AS(normalize(req), ParseError);
}

TEST_CASE("round trip through JSON is the identity on normalized requests") {
  const auto n = normalize(parse_request(
      "vertices a b c; arrows y: b->a, x: a->b, l: a->a, z: b->a; ideal (2/3)x*y - (1)l*l, x*z;"));
  const auto text = to_json(n.request).dump();
  const auto again = normalize(parse_request(text));
  CHECK(again.request == n.request);
  CHECK(again.quiver == n.quiver);
}

TEST_CASE("reports are deterministic") {
  const auto req = parse_request("vertices s t; arrows a1: s->t, a2: s->t, b: t->s, g: t->t;");
  const auto first = run(Command::Analyze, req).report.dump();
  const auto second = run(Command::Analyze, req).report.dump();
  CHECK(first == second);
}

TEST_CASE("analyze report on the two-vertex example") {
  const auto req = parse_request("vertices s t; arrows a1: s->t, a2: s->t, b: t->s, g: t->t;");
  const auto out = run(Command::Analyze, req);
  CHECK(out.exit_code == kExitOk);
  const auto& r = out.report;
  CHECK(r["schema"] == "msa-atlas/1");
  CHECK(r["generators"]["count"] == 6);
  CHECK(r["components"].size() == 3);
  CHECK(r["components"][0]["dimension"] == 2);
  CHECK(r["components"][1]["dimension"] == 1);
  CHECK(r["components"][2]["dimension"] == 0);
  CHECK(r["irreducibility"]["irreducible"] == false);
  CHECK(r["irreducibility"]["component_count"] == 3);
  CHECK(r["oracle"][0]["enumerated_count"] == 10);
  CHECK(r["oracle"][0]["ok"] == true);
}

TEST_CASE("exit codes by error type") {
  CHECK(exit_code_for(ParseError("x", "y")) == kExitParse);
  CHECK(exit_code_for(BudgetError("x")) == kExitBudget);
  CHECK(exit_code_for(DomainError("x")) == kExitDomain);
}
