#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace msa {

using VertexId = std::size_t;

struct Vertex {
  std::size_t index;  // position in the total order; v_0 is the basepoint
  std::string label;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arrow {
  std::size_t index;  // 1-based position in the total order
  VertexId source;
  VertexId target;
  std::string label;

  bool is_loop() const noexcept { return source == target; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Ordered vertex pair (u, v). Also used for unordered pairs, stored with
/// first < second.
struct VertexPair {
  VertexId first;
  VertexId second;
  auto operator<=>(const VertexPair&) const = default;
};

/// A finite quiver with totally ordered vertices and arrows. The arrow order
/// satisfies the interval condition: arrows sharing (source, target) are
/// consecutive. Immutable after construction.
class Quiver {
 public:
  struct ArrowSpec {
    std::string label;
    VertexId source;
    VertexId target;
  };

  Quiver() = default;

  /// Throws DomainError on dangling endpoints, duplicate labels or when the
  /// arrow order breaks the interval condition.
  Quiver(std::vector<std::string> vertex_labels, std::vector<ArrowSpec> arrows);

  /// Stable-sorts arrows by (source, target) before construction. When
  /// `order` is given it receives, for each new arrow position, the position
  /// of that arrow in `arrows`.
  static Quiver with_sorted_arrows(std::vector<std::string> vertex_labels,
                                   std::vector<ArrowSpec> arrows,
                                   std::vector<std::size_t>* order = nullptr);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  /// Arrow by its 1-based index.
  const Arrow& arrow(std::size_t index) const;

  /// d(u,v) = |uQ_1v|.
  std::size_t arrow_count_between(VertexId u, VertexId v) const;

  /// uQ_1v, a contiguous slice of arrows().
  std::span<const Arrow> arrows_between(VertexId u, VertexId v) const;

  std::optional<VertexId> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& label) const;

  bool has_loop(VertexId v) const { return arrow_count_between(v, v) > 0; }

  /// At most one arrow between every ordered pair of vertices.
  bool is_schur() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> block_begin_;  // n*n, 0-based offset into arrows_
  std::vector<std::size_t> block_size_;   // n*n
};

Quiver make_kronecker(std::size_t m);
Quiver make_loop_quiver(std::size_t m);
Quiver make_isolated(std::size_t n);

/// V^2(Q): pairs with at least one arrow u -> v, lexicographic order.
std::vector<VertexPair> v2_pairs(const Quiver& q);

struct UndirectedGraph {
  std::size_t node_count = 0;
  std::set<VertexPair> edges;  // first <= second; a loop is {u, u}

  /// Acyclic and free of self-edges.
  bool is_forest() const;
};

UndirectedGraph no_double_edge_graph(const Quiver& q);

/// A vertex permutation preserving every arrow count |uQ_1v|.
struct QuiverSymmetry {
  std::vector<VertexId> permutation;

  VertexId operator()(VertexId v) const { return permutation[v]; }
  QuiverSymmetry compose(const QuiverSymmetry& inner) const;  // this o inner
  QuiverSymmetry inverse() const;
  friend bool operator==(const QuiverSymmetry&, const QuiverSymmetry&) = default;
};

inline constexpr std::size_t kDefaultSymmetryCap = 9;

/// The full group S_Q, identity first, by exhaustive backtracking with
/// degree pruning. Throws BudgetError above `vertex_cap` vertices.
std::vector<QuiverSymmetry> quiver_symmetries(const Quiver& q,
                                              std::size_t vertex_cap = kDefaultSymmetryCap);

/// Induced action on arrows: the l-th arrow of uQ_1v goes to the l-th arrow
/// of sigma(u)Q_1sigma(v). Indices are 1-based.
std::size_t act_on_arrow(const Quiver& q, const QuiverSymmetry& sigma, std::size_t arrow_index);

struct PairOrbit {
  VertexPair representative;  // lexicographically minimal member
  std::vector<VertexPair> members;
};

struct SymmetryOrbits {
  std::vector<PairOrbit> v2;              // orbits on V^2(Q)
  std::vector<PairOrbit> unordered_pairs; // orbits on {s,t}, s != t
};

SymmetryOrbits sq_orbits(const Quiver& q, const std::vector<QuiverSymmetry>& group);
SymmetryOrbits sq_orbits(const Quiver& q, std::size_t vertex_cap = kDefaultSymmetryCap);

/// An arrow (u,v) -> (v,w) of the r2-quiver.
struct R2Arrow {
  VertexId u;
  VertexId v;
  VertexId w;
  std::size_t source;  // index into R2Quiver::pairs
  std::size_t target;
  auto operator<=>(const R2Arrow&) const = default;
};

/// The r2-quiver: vertices V^2(Q), one arrow (u,v) -> (v,w) per composable
/// pair. Vertex i of `quiver` is `pairs[i]`; arrow i+1 is `arrows[i]`.
struct R2Quiver {
  Quiver quiver;
  std::vector<VertexPair> pairs;
  std::vector<R2Arrow> arrows;

  std::optional<std::size_t> pair_index(VertexPair p) const;
  std::optional<std::size_t> arrow_index(VertexId u, VertexId v, VertexId w) const;
};

R2Quiver r2_quiver(const Quiver& q);

}  // namespace msa
