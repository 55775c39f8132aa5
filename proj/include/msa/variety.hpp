#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msa/matrix.hpp"
#include "msa/polynomial.hpp"
#include "msa/quiver.hpp"
#include "msa/scalar.hpp"

namespace msa {

enum class VarKind { Vertex, Arrow };

/// A coordinate of the ambient projective space: a vertex other than the
/// basepoint (index >= 1) or an arrow (1-based index).
struct PolyVar {
  VarKind kind;
  std::size_t index;
  auto operator<=>(const PolyVar&) const = default;
};

/// Variables v_1 < ... < v_{n0} < a_1 < ... < a_{n1} of the homogeneous
/// coordinate ring, with their display labels.
class VariableSet {
 public:
  explicit VariableSet(const Quiver& q);

  std::size_t size() const noexcept { return vars_.size(); }
  std::size_t vertex_var_count() const noexcept { return vertex_vars_; }
  const PolyVar& var(std::size_t ordinal) const { return vars_.at(ordinal); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::size_t of_vertex(VertexId v) const;  // v >= 1
  std::size_t of_arrow(std::size_t arrow_index) const;

  Polynomial x(std::size_t ordinal) const { return Polynomial::variable(size(), ordinal); }

 private:
  std::size_t vertex_vars_ = 0;
  std::vector<PolyVar> vars_;
  std::vector<std::string> labels_;
};

/// Generators of the vanishing ideal, grouped as cubic vertex relations,
/// mixed vertex-arrow quadrics and arrow-arrow quadrics.
struct GeneratorSet {
  std::vector<Polynomial> x0;
  std::vector<Polynomial> x_half;
  std::vector<Polynomial> x1;

  std::vector<Polynomial> all() const;
  std::size_t size() const noexcept { return x0.size() + x_half.size() + x1.size(); }
};

GeneratorSet ideal_generators(const Quiver& q);

/// The sign (-1)^{k-j-1} relating v_j and v_k coordinates of points where
/// both vertices are merged or joined by arrows. Symmetric in (j, k).
int vertex_relation_sign(std::size_t j, std::size_t k);

struct ComponentDescriptor {
  enum class Kind { Separable, SplitPair, SplitLoop };
  Kind kind;
  VertexPair vertices;                      // {s,t} for Separable, (s,t) otherwise
  std::size_t dimension;
  std::vector<std::size_t> allowed_vars;    // ordinals; all others vanish
  std::vector<Polynomial> linear_constraints;
};

/// Irreducible components: separable points first, then one split component
/// per element of V^2(Q) in lexicographic order.
std::vector<ComponentDescriptor> components(const Quiver& q);

/// Equations cutting out the component's linear span inside k^N: one unit
/// row per vanishing variable plus the linear constraints.
ScalarMatrix component_equations(const ComponentDescriptor& c, std::size_t num_vars);

/// Projective dimension of the component's solution space, by rank.
std::size_t solution_dimension(const ComponentDescriptor& c, std::size_t num_vars);

/// True when the solution space of `inner` lies inside that of `outer`.
bool component_contains(const ComponentDescriptor& outer, const ComponentDescriptor& inner,
                        std::size_t num_vars);

/// Restriction of f to the component: vanishing variables set to zero and
/// each linear constraint solved for its leading variable.
Polynomial restrict_to_component(const Polynomial& f, const ComponentDescriptor& c);

/// Throws DomainError("empty variety") for the single arrowless vertex.
std::size_t msa_dimension(const Quiver& q);

struct IrreducibilityVerdict {
  enum class Reason { Kronecker, Loop, TwoIsolated, None };
  bool irreducible;
  Reason reason;
  std::size_t m = 0;                // arrow count for Kronecker / Loop
  std::size_t component_count = 0;
};

IrreducibilityVerdict is_irreducible(const Quiver& q);

/// N x (N-1) matrix whose columns span L(A); rows follow VariableSet order.
using Frame = ScalarMatrix;

/// Frame of the separable subalgebra merging v_j and v_k, 0 <= j < k.
Frame frame_separable(const Quiver& q, std::size_t j, std::size_t k);

/// Parameters of the split family: v_j + c*a_p, v_k - c*a_p and
/// a_i + c_i*a_p for each non-pivot arrow a_i of the block.
struct SplitParams {
  std::optional<Scalar> vertex_shift;  // required unless j == k, where it must be 0
  std::map<std::size_t, Scalar> arrow_shift;
};

Frame frame_split(const Quiver& q, std::size_t j, std::size_t k, std::size_t pivot_arrow,
                  const SplitParams& params);

/// Determinant of F with the row of `row` deleted (rows in order, columns in
/// frame order, no cofactor sign).
Scalar minor(const Frame& f, std::size_t row);

struct ProjectivePoint {
  std::vector<Scalar> coords;

  /// Scaled so the first nonzero coordinate is 1.
  ProjectivePoint normalized() const;
  bool same_point(const ProjectivePoint& other) const;
};

/// All maximal minors; throws DomainError for a rank-deficient frame.
ProjectivePoint point_of(const Frame& f);

struct VanishingViolation {
  std::string generator;
  std::string frame;
  std::vector<Scalar> point;
  Scalar value;
};

struct VanishingReport {
  std::size_t generator_count = 0;
  std::size_t frame_count = 0;
  std::size_t evaluations = 0;
  std::vector<VanishingViolation> violations;
};

/// Evaluates every generator at every separable frame and at split frames
/// for all blocks and pivots: zero parameters plus `samples` seeded random
/// rational parameter sets.
VanishingReport verify_vanishing(const Quiver& q, std::size_t samples, std::uint64_t seed);

}  // namespace msa
