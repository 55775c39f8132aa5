#include "doctest.h"
#include "msa/error.hpp"
#include "msa/path_algebra.hpp"
#include "random_quivers.hpp"

using namespace msa;

namespace {

AlgebraElement path(const Quiver& q, std::vector<std::size_t> arrows, Scalar c = 1) {
  return AlgebraElement::of_path(make_path(q, std::move(arrows)), c);
}

// a1=1 a2=2 a3=3 b=4 g1=5 g2=6 in the four-vertex quiver.
IdealSpec ideal_i1(const Quiver& q, Scalar c) {
  return {{path(q, {1, 5}) - path(q, {1, 6}) - path(q, {2, 5}) + path(q, {2, 6}) + path(q, {3, 6}, c)}, {}};
}
IdealSpec ideal_i2(const Quiver& q) { return {{path(q, {1, 6}) + path(q, {2, 5}), path(q, {4, 5})}, {}}; }
IdealSpec ideal_i3(const Quiver& q) {
  return {{path(q, {1, 6}) + path(q, {2, 5}), path(q, {1, 5}) + path(q, {2, 6})}, {}};
}

}  // namespace

TEST_CASE("T2Q multiplication rules") {
  const auto q = testing::example_quiver();
  const auto s = AlgebraElement::vertex(0);
  const auto t = AlgebraElement::vertex(1);
  const auto a1 = AlgebraElement::arrow(q, 1);
  const auto b = AlgebraElement::arrow(q, 3);
  CHECK(t2_multiply(q, s, a1) == a1);
  CHECK(t2_multiply(q, a1, t) == a1);
  CHECK(t2_multiply(q, t, a1).is_zero());
  CHECK(t2_multiply(q, a1, b).is_zero());
  CHECK(t2_multiply(q, s, s) == s);
  CHECK(t2_multiply(q, AlgebraElement::one(q), a1) == a1);
  CHECK(multiply(q, a1, b) == path(q, {1, 3}));
  CHECK_THROWS_AS(t2_multiply(q, path(q, {1, 3}), s), DomainError);
  CHECK_THROWS_AS(make_path(q, {1, 1}), DomainError);
}

TEST_CASE("admissibility") {
  const auto q = testing::four_vertex_quiver();
  const auto v = is_admissible(ideal_i2(q), q);
  CHECK(v.kind == AdmissibilityVerdict::Kind::Admissible);
  CHECK(v.ell == 3);
  CHECK(is_admissible(ideal_i1(q, 3), q).ell == 3);

  const auto loop = make_loop_quiver(1);
  const IdealSpec none{};
  CHECK(is_admissible(none, loop, 6).kind == AdmissibilityVerdict::Kind::NoFiniteL);
  const IdealSpec square{{path(loop, {1, 1})}, {}};
  CHECK(is_admissible(square, loop).kind == AdmissibilityVerdict::Kind::Admissible);
  CHECK(is_admissible(square, loop).ell == 2);

  const IdealSpec short_gen{{AlgebraElement::arrow(loop, 1)}, {}};
  CHECK(is_admissible(short_gen, loop).kind == AdmissibilityVerdict::Kind::NotInJ2);
  const IdealSpec mixed{{path(loop, {1, 1}) + path(loop, {1, 1, 1})}, {}};
  CHECK_THROWS_AS(is_admissible(mixed, loop), DomainError);

  // x^2 - y^2 on the 2-loop quiver: J^3 lies in the ideal, J^2 does not.
  const auto two = make_loop_quiver(2);
  const IdealSpec comm{{path(two, {1, 1}) - path(two, {2, 2}), path(two, {1, 2}), path(two, {2, 1})}, {}};
  CHECK(is_admissible(comm, two).ell == 3);
}

TEST_CASE("monomial detection") {
  const auto q = testing::four_vertex_quiver();
  CHECK_FALSE(is_monomial(ideal_i2(q)));
  const IdealSpec paths{{path(q, {1, 5}), path(q, {4, 6})}, {}};
  CHECK(is_monomial(paths));
}

TEST_CASE("r2 generating sets of the four-vertex examples") {
  const auto q = testing::four_vertex_quiver();
  CHECK(r2_generating_set_check(ideal_i1(q, 3), q).ok);
  CHECK(r2_generating_set_check(ideal_i2(q), q).ok);
  const auto i3 = r2_generating_set_check(ideal_i3(q), q);
  CHECK_FALSE(i3.ok);
  CHECK(i3.reason.find("share type") != std::string::npos);
}

TEST_CASE("r2 element recognition") {
  const auto q = testing::four_vertex_quiver();
  CHECK(is_r2_element(path(q, {1, 5}) + path(q, {2, 6}), q).kind == R2ElementVerdict::Kind::R2);
  CHECK(is_r2_element(path(q, {1, 5}) + path(q, {4, 6}), q).kind == R2ElementVerdict::Kind::No);
  CHECK(is_r2_element(AlgebraElement{}, q).kind == R2ElementVerdict::Kind::Zero);
}

TEST_CASE("paths with distinct triples form an r2 set") {
  const Quiver q({"a", "b", "c"}, {{"x", 0, 1}, {"y", 1, 1}, {"z", 1, 2}});
  const IdealSpec paths{{path(q, {1, 2}), path(q, {1, 3}), path(q, {2, 3})}, {}};
  CHECK(r2_generating_set_check(paths, q).ok);
}

TEST_CASE("representation matrices of the four-vertex examples") {
  const auto q = testing::four_vertex_quiver();
  const auto lambda = representation_of(r2_generating_set_check(ideal_i1(q, 3), q).assignment, q);
  const auto& r2 = lambda.r2;
  const auto from_v1 = *r2.arrow_index(0, 2, 3);
  const auto from_v2 = *r2.arrow_index(1, 2, 3);
  ScalarMatrix expected(3, 2);
  expected(0, 0) = 1;
  expected(0, 1) = -1;
  expected(1, 0) = -1;
  expected(1, 1) = 1;
  expected(2, 1) = 3;
  CHECK(lambda.maps[from_v1] == expected);
  CHECK(lambda.maps[from_v2] == ScalarMatrix(1, 2));

  const auto mu = representation_of(r2_generating_set_check(ideal_i2(q), q).assignment, q);
  ScalarMatrix m1(3, 2);
  m1(0, 1) = 1;
  m1(1, 0) = 1;
  ScalarMatrix m2(1, 2);
  m2(0, 0) = 1;
  CHECK(mu.maps[from_v1] == m1);
  CHECK(mu.maps[from_v2] == m2);
}

TEST_CASE("declared types for zero generators") {
  const auto q = testing::four_vertex_quiver();
  IdealSpec spec{{AlgebraElement{}}, {{0, VertexTriple{0, 2, 3}}}};
  CHECK(r2_generating_set_check(spec, q).ok);
  spec.declared_types[0] = VertexTriple{0, 1, 2};
  CHECK_FALSE(r2_generating_set_check(spec, q).ok);
}
