#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msa/matrix.hpp"
#include "msa/path_algebra.hpp"
#include "msa/quiver.hpp"

namespace msa {

struct AutDims {
  std::size_t inn_star_dim = 0;  // |Q_1|
  std::size_t g_dim = 0;         // sum of d(u,v)^2 over V^2(Q)
  std::size_t sq_order = 0;      // |S_Q|
};

/// Aut-orbits on msa(Q): split classes correspond to S_Q-orbits on V^2(Q),
/// separable classes to S_Q-orbits on unordered pairs of distinct vertices.
struct OrbitReport {
  std::vector<PairOrbit> split_orbit_classes;
  std::vector<PairOrbit> separable_orbit_classes;
  AutDims aut_dims;
};

OrbitReport orbit_classes(const Quiver& q, std::size_t vertex_cap = kDefaultSymmetryCap);

/// One d(u,v) x d(u,v) matrix per entry of V^2(Q), in r2-quiver pair order.
struct OrthogonalFamily {
  std::vector<ScalarMatrix> blocks;

  static OrthogonalFamily identity(const R2Representation& rep);
};

struct R2fopVerdict {
  bool pass = false;
  std::string reason;  // empty on pass
};

/// Checks the forest hypothesis, exact orthogonality of every block and the
/// monomial pattern of phi_uv * V(a) * phi_vw^T for every r2-arrow a.
/// Throws DomainError on shape mismatches.
R2fopVerdict check_r2fop(const Quiver& q, const R2Representation& rep, const OrthogonalFamily& phi);
R2fopVerdict check_r2fop(const Quiver& q, const R2Assignment& assignment, const OrthogonalFamily& phi);

/// At most one nonzero entry in every row and every column.
bool is_monomial_pattern(const ScalarMatrix& m);

/// Rows form an orthonormal basis of eigenvectors of the symmetric matrix
/// `gram`, when its spectrum is rational and every eigenvector normalizes
/// over Q. Eigenspaces are orthogonalized by Gram-Schmidt.
std::optional<ScalarMatrix> rational_orthonormal_eigenbasis(const ScalarMatrix& gram);

inline constexpr std::size_t kPhiSearchBudget = 4096;

/// Sound but incomplete: tries the identity family first, then per-block
/// eigenbases of V V^T and V^T V over every r2-arrow touching the block.
/// Signed permutations are not enumerated separately because they never
/// change a monomial pattern. nullopt means no certificate was found.
std::optional<OrthogonalFamily> search_orthogonal_phi(const Quiver& q, const R2Representation& rep,
                                                      std::size_t budget = kPhiSearchBudget);

struct FiniteOrbitVerdict {
  enum class Kind { Schur, Monomial, R2FOP, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<OrthogonalFamily> phi;        // R2FOP only
  std::optional<R2Representation> rep;        // R2FOP only
  std::vector<std::string> reasons;           // Unknown only
  std::size_t ell = 0;                        // least l with J^l in I

  bool yes() const noexcept { return kind != Kind::Unknown; }
};

/// Throws DomainError when the ideal is not admissible.
FiniteOrbitVerdict finite_orbit_check(const Quiver& q, const IdealSpec& ideal,
                                      const std::optional<OrthogonalFamily>& phi_hint = std::nullopt,
                                      std::size_t degree_cap = kDefaultDegreeCap);

/// Recomputes the witness of a Yes verdict from scratch.
bool revalidate(const FiniteOrbitVerdict& verdict, const Quiver& q, const IdealSpec& ideal);

std::string to_string(FiniteOrbitVerdict::Kind kind);

}  // namespace msa
