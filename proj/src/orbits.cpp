#include "msa/orbits.hpp"

#include <sstream>

#include "msa/error.hpp"

namespace msa {

OrbitReport orbit_classes(const Quiver& q, std::size_t vertex_cap) {
  const auto group = quiver_symmetries(q, vertex_cap);
  auto orbits = sq_orbits(q, group);
  OrbitReport report{std::move(orbits.v2), std::move(orbits.unordered_pairs), {}};
  report.aut_dims.inn_star_dim = q.arrow_count();
  for (const auto& [u, v] : v2_pairs(q)) {
    const std::size_t d = q.arrow_count_between(u, v);
    report.aut_dims.g_dim += d * d;
  }
  report.aut_dims.sq_order = group.size();
  return report;
}

OrthogonalFamily OrthogonalFamily::identity(const R2Representation& rep) {
  OrthogonalFamily phi;
  for (auto d : rep.dims) phi.blocks.push_back(ScalarMatrix::identity(d));
  return phi;
}

bool is_monomial_pattern(const ScalarMatrix& m) {
  std::vector<bool> column_used(m.cols(), false);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool row_used = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c))) continue;
      if (row_used || column_used[c]) return false;
      row_used = true;
      column_used[c] = true;
    }
  }
  return true;
}

namespace {

std::string pair_label(const Quiver& q, VertexPair p) {
  return "(" + q.vertices()[p.first].label + "," + q.vertices()[p.second].label + ")";
}

void require_shapes(const R2Representation& rep, const OrthogonalFamily& phi) {
  if (phi.blocks.size() != rep.dims.size()) throw DomainError("orthogonal family has the wrong number of blocks");
  for (std::size_t i = 0; i < rep.dims.size(); ++i) {
    if (phi.blocks[i].rows() != rep.dims[i] || phi.blocks[i].cols() != rep.dims[i]) {
      throw DomainError("orthogonal block has the wrong size");
    }
  }
  if (rep.maps.size() != rep.r2.arrows.size()) throw DomainError("representation does not cover the r2-quiver");
}

// Pattern condition only; orthogonality and the forest are checked apart.
bool patterns_pass(const R2Representation& rep, const OrthogonalFamily& phi, std::size_t* failing = nullptr) {
  for (std::size_t i = 0; i < rep.maps.size(); ++i) {
    const auto& a = rep.r2.arrows[i];
    const ScalarMatrix w = phi.blocks[a.source] * rep.maps[i] * phi.blocks[a.target].transpose();
    if (!is_monomial_pattern(w)) {
      if (failing) *failing = i;
      return false;
    }
  }
  return true;
}

}  // namespace

R2fopVerdict check_r2fop(const Quiver& q, const R2Representation& rep, const OrthogonalFamily& phi) {
  require_shapes(rep, phi);
  if (!no_double_edge_graph(q).is_forest()) {
    return {false, "no-double-edge graph is not a forest without self-edges"};
  }
  for (std::size_t i = 0; i < phi.blocks.size(); ++i) {
    const auto& b = phi.blocks[i];
    if (!(b * b.transpose() == ScalarMatrix::identity(b.rows()))) {
      return {false, "phi block " + pair_label(q, rep.r2.pairs[i]) + " is not orthogonal"};
    }
  }
  std::size_t failing = 0;
  if (!patterns_pass(rep, phi, &failing)) {
    const auto& a = rep.r2.arrows[failing];
    return {false, "W" + pair_label(q, {a.u, a.v}) + "->" + pair_label(q, {a.v, a.w}) +
                       " has two nonzero entries in a row or column"};
  }
  return {true, {}};
}

R2fopVerdict check_r2fop(const Quiver& q, const R2Assignment& assignment, const OrthogonalFamily& phi) {
  return check_r2fop(q, representation_of(assignment, q), phi);
}

std::optional<ScalarMatrix> rational_orthonormal_eigenbasis(const ScalarMatrix& gram) {
  const std::size_t n = gram.rows();
  if (n != gram.cols()) throw DomainError("Gram matrix must be square");
  if (!(gram == gram.transpose())) return std::nullopt;
  const auto roots = rational_roots(characteristic_polynomial(gram));
  std::vector<std::vector<Scalar>> basis;
  for (const auto& lambda : roots) {
    ScalarMatrix shifted = gram;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    std::vector<std::vector<Scalar>> space;
    for (auto v : nullspace(shifted)) {
      for (const auto& u : space) {
        Scalar dot = 0, norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
          dot += v[i] * u[i];
          norm += u[i] * u[i];
        }
        const Scalar ratio = dot / norm;
        for (std::size_t i = 0; i < n; ++i) v[i] -= ratio * u[i];
      }
      space.push_back(std::move(v));
    }
    for (auto& v : space) {
      Scalar norm = 0, root;
      for (const auto& x : v) norm += x * x;
      if (!rational_sqrt(norm, root)) return std::nullopt;
      for (auto& x : v) x /= root;
      basis.push_back(std::move(v));
    }
  }
  if (basis.size() != n) return std::nullopt;  // irrational part of the spectrum
  ScalarMatrix phi(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) phi(r, c) = basis[r][c];
  return phi;
}

std::optional<OrthogonalFamily> search_orthogonal_phi(const Quiver& q, const R2Representation& rep,
                                                      std::size_t budget) {
  if (!no_double_edge_graph(q).is_forest()) return std::nullopt;
  const OrthogonalFamily identity = OrthogonalFamily::identity(rep);
  require_shapes(rep, identity);
  if (patterns_pass(rep, identity)) return identity;

  // Candidate blocks per pair, identity first, duplicates removed.
  std::vector<std::vector<ScalarMatrix>> candidates(rep.dims.size());
  for (std::size_t i = 0; i < rep.dims.size(); ++i) candidates[i].push_back(identity.blocks[i]);
  auto offer = [&](std::size_t pair, const ScalarMatrix& gram) {
    if (gram.rows() == 0) return;
    auto phi = rational_orthonormal_eigenbasis(gram);
    if (!phi) return;
    for (const auto& existing : candidates[pair])
      if (existing == *phi) return;
    candidates[pair].push_back(std::move(*phi));
  };
  for (std::size_t i = 0; i < rep.maps.size(); ++i) {
    const auto& v = rep.maps[i];
    offer(rep.r2.arrows[i].source, v * v.transpose());
    offer(rep.r2.arrows[i].target, v.transpose() * v);
  }

  // Odometer over the product, first coordinate fastest; fixed order.
  std::vector<std::size_t> choice(candidates.size(), 0);
  OrthogonalFamily family = identity;
  for (std::size_t tried = 0; tried < budget; ++tried) {
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == candidates[pos].size()) choice[pos++] = 0;
    if (pos == choice.size()) return std::nullopt;
    for (std::size_t i = 0; i < choice.size(); ++i) family.blocks[i] = candidates[i][choice[i]];
    if (patterns_pass(rep, family)) return family;
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> schur_failure(const Quiver& q) {
  for (const auto& p : v2_pairs(q)) {
    const std::size_t d = q.arrow_count_between(p.first, p.second);
    if (d > 1) return "quiver is not Schur: d" + pair_label(q, p) + " = " + std::to_string(d);
  }
  return std::nullopt;
}

}  // namespace

FiniteOrbitVerdict finite_orbit_check(const Quiver& q, const IdealSpec& ideal,
                                      const std::optional<OrthogonalFamily>& phi_hint, std::size_t degree_cap) {
  const auto admissible = is_admissible(ideal, q, degree_cap);
  if (admissible.kind != AdmissibilityVerdict::Kind::Admissible) {
    throw DomainError("ideal is not admissible: " + admissible.detail);
  }
  FiniteOrbitVerdict verdict;
  verdict.ell = admissible.ell;
  const auto schur = schur_failure(q);
  if (!schur) {
    verdict.kind = FiniteOrbitVerdict::Kind::Schur;
    return verdict;
  }
  verdict.reasons.push_back(*schur);
  if (is_monomial(ideal)) {
    verdict.kind = FiniteOrbitVerdict::Kind::Monomial;
    verdict.reasons.clear();
    return verdict;
  }
  verdict.reasons.push_back("ideal is not generated by paths");
  const auto r2 = r2_generating_set_check(ideal, q);
  if (!r2.ok) {
    verdict.reasons.push_back("generating set is not an r2 set: " + r2.reason);
    return verdict;
  }
  auto rep = representation_of(r2.assignment, q);
  std::optional<OrthogonalFamily> phi;
  if (phi_hint) {
    const auto hinted = check_r2fop(q, rep, *phi_hint);
    if (hinted.pass) phi = phi_hint;
    else verdict.reasons.push_back("supplied phi fails: " + hinted.reason);
  }
  if (!phi) phi = search_orthogonal_phi(q, rep);
  if (!phi) {
    if (!no_double_edge_graph(q).is_forest()) {
      verdict.reasons.push_back("no-double-edge graph is not a forest without self-edges");
    } else {
      verdict.reasons.push_back("no rational orthogonal family makes every W monomial (search is incomplete)");
    }
    return verdict;
  }
  verdict.kind = FiniteOrbitVerdict::Kind::R2FOP;
  verdict.reasons.clear();
  verdict.phi = std::move(phi);
  verdict.rep = std::move(rep);
  return verdict;
}

bool revalidate(const FiniteOrbitVerdict& verdict, const Quiver& q, const IdealSpec& ideal) {
  switch (verdict.kind) {
    case FiniteOrbitVerdict::Kind::Schur:
      return q.is_schur();
    case FiniteOrbitVerdict::Kind::Monomial:
      return is_monomial(ideal) &&
             is_admissible(ideal, q).kind == AdmissibilityVerdict::Kind::Admissible;
    case FiniteOrbitVerdict::Kind::R2FOP: {
      if (!verdict.phi) return false;
      const auto r2 = r2_generating_set_check(ideal, q);
      return r2.ok && check_r2fop(q, r2.assignment, *verdict.phi).pass;
    }
    case FiniteOrbitVerdict::Kind::Unknown:
      return false;
  }
  return false;
}

std::string to_string(FiniteOrbitVerdict::Kind kind) {
  switch (kind) {
    case FiniteOrbitVerdict::Kind::Schur: return "Schur";
    case FiniteOrbitVerdict::Kind::Monomial: return "Monomial";
    case FiniteOrbitVerdict::Kind::R2FOP: return "R2FOP";
    case FiniteOrbitVerdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace msa
