#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "msa/orbits.hpp"
#include "msa/quiver.hpp"
#include "msa/variety.hpp"

namespace msa::testing {

/// Returns a description of the first structural law the quiver violates:
/// automorphism dimension formulas, S_Q group axioms, orbit partitions,
/// the r2-quiver Schur property, generator degrees, component dimensions
/// and no-containment between components.
inline std::optional<std::string> structural_violation(const Quiver& q) {
  const auto report = orbit_classes(q);
  if (report.aut_dims.inn_star_dim != q.arrow_count()) return "inn_star_dim differs from |Q_1|";
  std::size_t g_dim = 0;
  for (const auto& [u, v] : v2_pairs(q)) g_dim += q.arrow_count_between(u, v) * q.arrow_count_between(u, v);
  if (report.aut_dims.g_dim != g_dim) return "g_dim differs from the sum of d(u,v)^2";

  const auto group = quiver_symmetries(q);
  if (report.aut_dims.sq_order != group.size()) return "sq_order differs from |S_Q|";
  std::vector<VertexId> id(q.vertex_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  if (group.empty() || group.front().permutation != id) return "S_Q does not start with the identity";
  auto member = [&](const QuiverSymmetry& s) { return std::find(group.begin(), group.end(), s) != group.end(); };
  for (const auto& a : group) {
    for (VertexId u = 0; u < q.vertex_count(); ++u)
      for (VertexId v = 0; v < q.vertex_count(); ++v)
        if (q.arrow_count_between(u, v) != q.arrow_count_between(a(u), a(v))) return "a symmetry changes d(u,v)";
    if (!member(a.inverse())) return "S_Q is not closed under inverses";
    for (const auto& b : group)
      if (!member(a.compose(b))) return "S_Q is not closed under composition";
  }

  auto partition_ok = [&](const std::vector<PairOrbit>& orbits, std::vector<VertexPair> universe) {
    std::set<VertexPair> seen;
    for (const auto& o : orbits) {
      if (group.size() % o.members.size() != 0) return false;
      if (o.representative != *std::min_element(o.members.begin(), o.members.end())) return false;
      for (const auto& m : o.members)
        if (!seen.insert(m).second) return false;
    }
    return seen == std::set<VertexPair>(universe.begin(), universe.end());
  };
  std::vector<VertexPair> unordered;
  for (VertexId s = 0; s < q.vertex_count(); ++s)
    for (VertexId t = s + 1; t < q.vertex_count(); ++t) unordered.push_back({s, t});
  if (!partition_ok(report.split_orbit_classes, v2_pairs(q))) return "V^2 orbits do not partition V^2(Q)";
  if (!partition_ok(report.separable_orbit_classes, unordered)) return "pair orbits do not partition the pairs";

  if (!r2_quiver(q).quiver.is_schur()) return "r2-quiver is not Schur";

  const auto gens = ideal_generators(q);
  for (const auto& g : gens.x0)
    if (g.homogeneous_degree() != 3u) return "vertex relation is not a cubic form";
  for (const auto& g : gens.x_half)
    if (g.homogeneous_degree() != 2u) return "mixed generator is not a quadric";
  for (const auto& g : gens.x1)
    if (g.homogeneous_degree() != 2u) return "arrow generator is not a quadric";

  const VariableSet vars(q);
  const auto comps = components(q);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (solution_dimension(comps[i], vars.size()) != comps[i].dimension) return "component dimension mismatch";
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i != j && component_contains(comps[i], comps[j], vars.size())) return "one component contains another";
    }
  }
  return std::nullopt;
}

}  // namespace msa::testing
