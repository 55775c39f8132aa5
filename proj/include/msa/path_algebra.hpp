#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msa/matrix.hpp"
#include "msa/quiver.hpp"
#include "msa/scalar.hpp"

namespace msa {

/// A path of Q. Trivial paths carry their vertex in `start`; otherwise
/// `start` is the source of the first arrow. Arrow indices are 1-based.
struct Path {
  VertexId start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }

  // Shorter paths first, so degree slices are contiguous in ordered maps.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    return a.start <=> b.start;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(VertexId v);
/// Validates that consecutive arrows compose; throws DomainError otherwise.
Path make_path(const Quiver& q, std::vector<std::size_t> arrows);
VertexId end_vertex(const Quiver& q, const Path& p);

/// All paths of the given length, in Path order.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t length);

/// Finite linear combination of paths with exact coefficients; zero
/// coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement of_path(Path p, const Scalar& coeff = Scalar(1));
  static AlgebraElement vertex(VertexId v) { return of_path(trivial_path(v)); }
  static AlgebraElement arrow(const Quiver& q, std::size_t index);
  /// 1 = sum of all vertex idempotents.
  static AlgebraElement one(const Quiver& q);

  void add_term(const Path& p, const Scalar& coeff);
  const std::map<Path, Scalar>& terms() const noexcept { return terms_; }
  Scalar coefficient(const Path& p) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t min_length() const;
  std::size_t max_length() const;
  /// Common path length of every term; nullopt for zero or mixed lengths.
  std::optional<std::size_t> homogeneous_degree() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::map<Path, Scalar> terms_;
};

/// Product in kQ: concatenation when the end of a meets the start of b.
AlgebraElement multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b);

/// Product in T_2Q = kQ/J^2. Inputs must be supported on paths of length
/// at most 1; throws DomainError otherwise.
AlgebraElement t2_multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b);

std::string to_string(const Quiver& q, const AlgebraElement& x);

/// Vertex triple u -> v -> w naming an r2-arrow (u,v) -> (v,w).
struct VertexTriple {
  VertexId u;
  VertexId v;
  VertexId w;
  auto operator<=>(const VertexTriple&) const = default;
};

struct IdealSpec {
  std::vector<AlgebraElement> generators;
  /// generator position -> declared r2 type, used for zero generators.
  std::map<std::size_t, VertexTriple> declared_types;
};

struct AdmissibilityVerdict {
  enum class Kind { Admissible, NotInJ2, NoFiniteL };
  Kind kind;
  std::size_t ell = 0;  // least l for Admissible, the cap for NoFiniteL
  std::string detail;
};

inline constexpr std::size_t kDefaultDegreeCap = 12;

/// Decides J^2 >= I >= J^l for path-length-homogeneous generators by
/// computing degree slices of I. Throws DomainError for heterogeneous
/// generators and BudgetError if a slice has too many paths to handle.
AdmissibilityVerdict is_admissible(const IdealSpec& ideal, const Quiver& q,
                                   std::size_t degree_cap = kDefaultDegreeCap);

bool is_monomial(const IdealSpec& ideal);

struct R2ElementVerdict {
  enum class Kind { R2, Zero, No };
  Kind kind;
  VertexTriple type{};  // meaningful for R2
};

R2ElementVerdict is_r2_element(const AlgebraElement& x, const Quiver& q);

/// One r2-element per arrow of the r2-quiver; elements[i] belongs to
/// r2.arrows[i]. Unassigned arrows hold zero.
struct R2Assignment {
  R2Quiver r2;
  std::vector<AlgebraElement> elements;
};

struct R2Check {
  bool ok = false;
  std::string reason;  // empty when ok
  R2Assignment assignment;
};

/// Validates the given generating set only; it does not search for another
/// generating set of the same ideal.
R2Check r2_generating_set_check(const std::vector<AlgebraElement>& generators, const Quiver& q);
R2Check r2_generating_set_check(const IdealSpec& ideal, const Quiver& q);

/// Representation V_lambda of the r2-quiver. Row vectors, matrices act on
/// the right: maps[i] is d(u,v) x d(v,w) for r2.arrows[i] = (u,v) -> (v,w).
struct R2Representation {
  R2Quiver r2;
  std::vector<std::size_t> dims;  // per r2.pairs entry
  std::vector<ScalarMatrix> maps;
};

R2Representation representation_of(const R2Assignment& assignment, const Quiver& q);

}  // namespace msa
