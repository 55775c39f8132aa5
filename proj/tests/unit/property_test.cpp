#include <random>

#include "doctest.h"
#include "msa/ff_oracle.hpp"
#include "msa/orbits.hpp"
#include "msa/variety.hpp"
#include "random_quivers.hpp"
#include "structural_properties.hpp"

using namespace msa;

TEST_CASE("structural laws over random quivers") {
  std::mt19937_64 rng(20261015);
  for (int i = 0; i < 150; ++i) {
    const auto q = testing::random_quiver(rng, 5, 6);
    const auto violation = testing::structural_violation(q);
    INFO("quiver " << i << ": " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows");
    CHECK_MESSAGE(!violation, violation.value_or(""));
  }
}

TEST_CASE("generators vanish on every sampled frame and restrict to zero") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto q = testing::random_quiver(rng, 4, 5);
    CHECK(verify_vanishing(q, 3, static_cast<std::uint64_t>(i)).violations.empty());
    for (const auto& c : components(q))
      for (const auto& g : ideal_generators(q).all()) CHECK(restrict_to_component(g, c).is_zero());
  }
}

TEST_CASE("oracle invariants over random quivers") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const auto q = testing::random_quiver(rng, 4, 4);
    const auto report = cross_check(q, 2);
    const std::size_t n = q.vertex_count() + q.arrow_count() - 1;
    CHECK(report.candidate_count == (std::uint64_t{1} << n) - 1);
    CHECK(report.ok());
    for (const auto& p : report.points) {
      const auto lead = std::find_if(p.coords.begin(), p.coords.end(), [](Fq x) { return x != 0; });
      REQUIRE(lead != p.coords.end());
      CHECK(*lead == 1);
      CHECK(p.cls.kind != PointClass::Kind::Unclassified);
    }
  }
}

namespace {

// Chain v0 -> v1 -> ... with random multiplicities; its no-double-edge graph
// is a path, so only the pattern condition can fail.
R2Representation random_chain_rep(std::mt19937_64& rng, Quiver& q, bool monomial) {
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<int> entry(-3, 3);
  const std::size_t length = 3;
  std::vector<std::string> labels;
  std::vector<Quiver::ArrowSpec> arrows;
  for (std::size_t v = 0; v <= length; ++v) labels.push_back("v" + std::to_string(v));
  for (std::size_t v = 0; v < length; ++v) {
    const int m = mult(rng);
    for (int k = 0; k < m; ++k) arrows.push_back({"x" + std::to_string(v) + "_" + std::to_string(k), v, v + 1});
  }
  q = Quiver(labels, arrows);
  R2Representation rep;
  rep.r2 = r2_quiver(q);
  for (const auto& p : rep.r2.pairs) rep.dims.push_back(q.arrow_count_between(p.first, p.second));
  for (const auto& a : rep.r2.arrows) {
    ScalarMatrix m(rep.dims[a.source], rep.dims[a.target]);
    if (monomial) {
      std::vector<std::size_t> cols(m.cols());
      for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
      std::shuffle(cols.begin(), cols.end(), rng);
      for (std::size_t r = 0; r < std::min(m.rows(), m.cols()); ++r) m(r, cols[r]) = entry(rng);
    } else {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    }
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

ScalarMatrix random_signed_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  ScalarMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = (rng() & 1U) ? 1 : -1;
  return p;
}

}  // namespace

TEST_CASE("monomial-pattern representations pass with identity phi") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Quiver q;
    const auto rep = random_chain_rep(rng, q, true);
    CHECK(check_r2fop(q, rep, OrthogonalFamily::identity(rep)).pass);
  }
}

TEST_CASE("signed permutations preserve a passing certificate") {
  std::mt19937_64 rng(6);
  int passing = 0;
  for (int i = 0; i < 60; ++i) {
    Quiver q;
    const auto rep = random_chain_rep(rng, q, i % 2 == 0);
    const auto phi = search_orthogonal_phi(q, rep);
    if (!phi) continue;
    ++passing;
    REQUIRE(check_r2fop(q, rep, *phi).pass);
    OrthogonalFamily moved = *phi;
    for (auto& b : moved.blocks) b = random_signed_permutation(rng, b.rows()) * b;
    CHECK(check_r2fop(q, rep, moved).pass);
  }
  CHECK(passing >= 30);
}

TEST_CASE("yes verdicts always revalidate") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const auto q = testing::random_quiver(rng, 4, 5);
    // I = J^2 is always admissible.
    IdealSpec ideal;
    for (const auto& p : paths_of_length(q, 2)) ideal.generators.push_back(AlgebraElement::of_path(p));
    const auto v = finite_orbit_check(q, ideal);
    CHECK(v.yes());
    CHECK(revalidate(v, q, ideal));
  }
}
