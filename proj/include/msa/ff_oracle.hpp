#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "msa/prime_field.hpp"
#include "msa/quiver.hpp"

namespace msa {

inline constexpr std::uint32_t kMaxOracleChar = 13;
inline constexpr std::size_t kMaxAlgebraDim = 12;      // dim T_2Q = |Q_0| + |Q_1|
inline constexpr std::size_t kMaxSymbolicVars = 10;    // ambient P^{N-1}
inline constexpr std::uint64_t kMaxCandidates = 50'000'000;

struct PointClass {
  enum class Kind { Separable, Split, Unclassified };
  Kind kind = Kind::Unclassified;
  VertexPair pair{};  // {j,k} with j < k for Separable, (u,v) for Split

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

/// Minor-coordinate vector over F_q, first nonzero coordinate 1. Ordered and
/// compared by coordinates only.
struct FqPoint {
  std::vector<Fq> coords;
  PointClass cls;

  friend bool operator==(const FqPoint& a, const FqPoint& b) { return a.coords == b.coords; }
  friend auto operator<=>(const FqPoint& a, const FqPoint& b) { return a.coords <=> b.coords; }
};

/// Every unital codimension-1 subalgebra of T_2Q over F_q, as a sorted list
/// of points. `candidates` receives the number of hyperplanes containing 1.
/// Throws BudgetError outside the caps.
std::vector<FqPoint> enumerate_maximal_subalgebras(const Quiver& q, std::uint32_t p,
                                                   std::uint64_t* candidates = nullptr);

/// Points of the projective space over F_p where every ideal generator
/// vanishes, sorted.
std::vector<FqPoint> symbolic_points(const Quiver& q, std::uint32_t p);

/// Inclusion-exclusion over the components' linear spans, ranks over F_p.
std::uint64_t predicted_count(const Quiver& q, std::uint32_t p);

PointClass classify_point(const std::vector<Fq>& coords, const Quiver& q, std::uint32_t p);

std::string to_string(const PointClass& cls, const Quiver& q);

struct ComponentTally {
  std::size_t component = 0;  // index into components(q)
  std::uint64_t predicted = 0;
  std::uint64_t observed = 0;
};

struct OracleWitness {
  std::string kind;  // "not-symbolic", "not-enumerated", "unclassified", "off-components", "count"
  std::vector<Fq> coords;
  std::string detail;
};

struct OracleReport {
  std::uint32_t q = 0;
  std::uint64_t candidate_count = 0;
  std::uint64_t enumerated_count = 0;
  std::uint64_t symbolic_count = 0;
  std::uint64_t predicted_count = 0;
  std::vector<ComponentTally> per_component;
  std::vector<FqPoint> points;  // enumerated, classified
  std::vector<OracleWitness> witnesses;

  bool ok() const noexcept { return witnesses.empty(); }
};

OracleReport cross_check(const Quiver& q, std::uint32_t p);

}  // namespace msa
