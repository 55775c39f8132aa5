#include "doctest.h"
#include "msa/error.hpp"
#include "msa/matrix.hpp"
#include "msa/polynomial.hpp"
#include "msa/scalar.hpp"

using namespace msa;

TEST_CASE("rational parsing") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar(" 2/3 ") == Scalar(2, 3));
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("Bareiss determinant with row swaps") {
  ScalarMatrix m(3, 3);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = 5;
  CHECK(bareiss_determinant(m) == Scalar(-5));
  m(2, 2) = 0;
  CHECK(bareiss_determinant(m) == Scalar(0));
  CHECK(bareiss_determinant(ScalarMatrix(0, 0)) == Scalar(1));
  ScalarMatrix h(2, 2);
  h(0, 0) = Scalar(1, 2);
  h(0, 1) = Scalar(1, 3);
  h(1, 0) = Scalar(1, 3);
  h(1, 1) = Scalar(1, 4);
  CHECK(bareiss_determinant(h) == Scalar(1, 72));
}

TEST_CASE("rank and nullspace") {
  ScalarMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 1;
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + 2 * ns[0][1] == 0);
  CHECK(ns[0][2] == 0);
}

TEST_CASE("characteristic polynomial and rational roots") {
  ScalarMatrix g(2, 2);
  g(0, 0) = 2;
  g(0, 1) = -2;
  g(1, 0) = -2;
  g(1, 1) = 11;
  const auto cp = characteristic_polynomial(g);
  CHECK(cp == std::vector<Scalar>{18, -13, 1});
  CHECK(rational_roots(cp).empty());
  CHECK(rational_roots({-2, 1, 1}) == std::vector<Scalar>{-2, 1});
  CHECK(rational_roots({0, 0, 3}) == std::vector<Scalar>{0});
  Scalar r;
  CHECK(rational_sqrt(Scalar(9, 4), r));
  CHECK(r == Scalar(3, 2));
  CHECK_FALSE(rational_sqrt(Scalar(2), r));
}

TEST_CASE("polynomial arithmetic and printing") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto f = x * x * y - x * y * y;
  const std::vector<std::string> labels{"v1", "v2"};
  CHECK(f.to_string(labels) == "v1^2*v2 - v1*v2^2");
  CHECK(f.homogeneous_degree() == 3u);
  CHECK((f - f).is_zero());
  CHECK((Scalar(-2) * f).proportional_to(f));
  CHECK_FALSE((f + x * x * x).proportional_to(f));
  const std::vector<Scalar> pt{2, 3};
  CHECK(f.evaluate(pt) == Scalar(12 - 18));
  const std::vector<std::uint32_t> pt3{2, 0};
  CHECK(f.evaluate_mod(pt3, 3) == 0);
  CHECK(f.substitute(1, x) == Polynomial(2));
}
