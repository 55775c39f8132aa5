#include <algorithm>

#include "doctest.h"
#include "msa/error.hpp"
#include "msa/variety.hpp"
#include "random_quivers.hpp"

using namespace msa;

namespace {

std::vector<std::string> generator_strings(const Quiver& q) {
  const VariableSet vars(q);
  std::vector<std::string> out;
  for (const auto& g : ideal_generators(q).all()) out.push_back(g.to_string(vars.labels()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("variable order puts vertices before arrows") {
  const VariableSet vars(testing::example_quiver());
  CHECK(vars.labels() == std::vector<std::string>{"t", "a1", "a2", "b", "g"});
  CHECK(vars.of_vertex(1) == 0);
  CHECK(vars.of_arrow(4) == 4);
  CHECK_THROWS_AS(vars.of_vertex(0), DomainError);
}

TEST_CASE("generators of the two-vertex example") {
  std::vector<std::string> expected{"t*g", "a1*b", "a2*b", "a1*g", "a2*g", "b*g"};
  std::sort(expected.begin(), expected.end());
  CHECK(generator_strings(testing::example_quiver()) == expected);
}

TEST_CASE("arrowless vertex relations") {
  const auto q = make_isolated(4);
  const auto gens = ideal_generators(q);
  CHECK(gens.x0.size() == 3 + 1);
  CHECK(gens.x_half.empty());
  CHECK(gens.x1.empty());
  CHECK(vertex_relation_sign(1, 2) == 1);
  CHECK(vertex_relation_sign(1, 3) == -1);
  CHECK(vertex_relation_sign(3, 1) == -1);
}

TEST_CASE("reversed arrows between non-basepoint vertices use the sorted pair") {
  const Quiver q({"a", "b", "c", "d"}, {{"x", 1, 3}, {"y", 3, 1}});
  const VariableSet vars(q);
  const auto gens = ideal_generators(q).x_half;
  const auto relation = (vars.x(vars.of_vertex(3)) - Scalar(-1) * vars.x(vars.of_vertex(1)));
  CHECK(std::count(gens.begin(), gens.end(), relation * vars.x(vars.of_arrow(1))) == 1);
  CHECK(std::count(gens.begin(), gens.end(), relation * vars.x(vars.of_arrow(2))) == 1);
}

TEST_CASE("components of the two-vertex example") {
  const auto q = testing::example_quiver();
  const auto comps = components(q);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].kind == ComponentDescriptor::Kind::SplitPair);
  CHECK(comps[0].dimension == 2);
  CHECK(comps[1].dimension == 1);
  CHECK(comps[2].kind == ComponentDescriptor::Kind::SplitLoop);
  CHECK(comps[2].dimension == 0);
  CHECK(msa_dimension(q) == 2);
  const auto verdict = is_irreducible(q);
  CHECK_FALSE(verdict.irreducible);
  CHECK(verdict.component_count == 3);
}

TEST_CASE("irreducible families") {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto k = is_irreducible(make_kronecker(m));
    CHECK(k.irreducible);
    CHECK(k.reason == IrreducibilityVerdict::Reason::Kronecker);
    CHECK(msa_dimension(make_kronecker(m)) == m);
    const auto l = is_irreducible(make_loop_quiver(m));
    CHECK(l.irreducible);
    CHECK(l.reason == IrreducibilityVerdict::Reason::Loop);
    CHECK(msa_dimension(make_loop_quiver(m)) == m - 1);
  }
  CHECK(is_irreducible(make_isolated(2)).reason == IrreducibilityVerdict::Reason::TwoIsolated);
  CHECK_FALSE(is_irreducible(make_isolated(3)).irreducible);
  CHECK_THROWS_AS(msa_dimension(make_isolated(1)), DomainError);
}

TEST_CASE("separable points carry the alternating sign") {
  const auto q = make_isolated(5);
  const VariableSet vars(q);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      const auto p = point_of(frame_separable(q, j, k)).normalized();
      for (std::size_t i = 1; i <= 4; ++i) {
        const Scalar expected = i == k ? Scalar(vertex_relation_sign(j, k)) : (i == j ? Scalar(1) : Scalar(0));
        CHECK(p.coords[vars.of_vertex(i)] == expected);
      }
    }
    // Pairing with the basepoint isolates v_k.
    const auto p = point_of(frame_separable(q, 0, k)).normalized();
    for (std::size_t i = 1; i <= 4; ++i) CHECK(p.coords[vars.of_vertex(i)] == Scalar(i == k ? 1 : 0));
  }
}

TEST_CASE("split frames") {
  const auto q = make_kronecker(2);
  SplitParams params;
  params.vertex_shift = Scalar(1, 2);
  params.arrow_shift[2] = Scalar(-3);
  const auto f = frame_split(q, 0, 1, 1, params);
  CHECK(f.rows() == 3);
  CHECK(f.cols() == 2);
  CHECK_NOTHROW(point_of(f));
  SplitParams missing;
  missing.vertex_shift = Scalar(0);
  CHECK_THROWS_AS(frame_split(q, 0, 1, 1, missing), DomainError);
  CHECK_THROWS_AS(frame_split(q, 1, 0, 1, params), DomainError);
  SplitParams loop_params;
  loop_params.vertex_shift = Scalar(1);
  CHECK_THROWS_AS(frame_split(make_loop_quiver(1), 0, 0, 1, loop_params), DomainError);
}

TEST_CASE("rank-deficient frames are rejected") {
  CHECK_THROWS_AS(point_of(Frame(3, 2)), DomainError);
}

TEST_CASE("vanishing on the two-vertex example") {
  const auto report = verify_vanishing(testing::example_quiver(), 20, 11);
  CHECK(report.generator_count == 6);
  CHECK(report.frame_count > 0);
  CHECK(report.violations.empty());
}

TEST_CASE("generators restrict to zero on their components") {
  const auto q = testing::four_vertex_quiver();
  for (const auto& c : components(q))
    for (const auto& g : ideal_generators(q).all()) CHECK(restrict_to_component(g, c).is_zero());
}

TEST_CASE("component dimensions agree with the rank computation") {
  const auto q = testing::four_vertex_quiver();
  const VariableSet vars(q);
  for (const auto& c : components(q)) CHECK(solution_dimension(c, vars.size()) == c.dimension);
}
