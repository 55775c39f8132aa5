#include "msa/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "msa/error.hpp"

namespace msa {

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<ArrowSpec> arrows) {
  const std::size_t n = vertex_labels.size();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(vertex_labels[i]).second) {
      throw DomainError("duplicate vertex label '" + vertex_labels[i] + "'");
    }
    vertices_.push_back({i, std::move(vertex_labels[i])});
  }
  block_begin_.assign(n * n, 0);
  block_size_.assign(n * n, 0);
  std::vector<bool> closed(n * n, false);
  std::size_t previous_block = n * n;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    auto& spec = arrows[i];
    if (spec.source >= n || spec.target >= n) {
      throw DomainError("arrow '" + spec.label + "' has a dangling endpoint");
    }
    if (seen.count(spec.label)) {
      throw DomainError("duplicate label '" + spec.label + "'");
    }
    seen.insert(spec.label);
    const std::size_t block = spec.source * n + spec.target;
    if (block != previous_block) {
      if (closed[block]) {
        throw DomainError("arrows " + vertices_[spec.source].label + "->" +
                          vertices_[spec.target].label + " do not form an interval");
      }
      if (previous_block < n * n) closed[previous_block] = true;
      block_begin_[block] = i;
      previous_block = block;
    }
    ++block_size_[block];
    arrows_.push_back({i + 1, spec.source, spec.target, std::move(spec.label)});
  }
}

Quiver Quiver::with_sorted_arrows(std::vector<std::string> vertex_labels,
                                  std::vector<ArrowSpec> arrows,
                                  std::vector<std::size_t>* order) {
  std::vector<std::size_t> perm(arrows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(arrows[a].source, arrows[a].target) <
           std::pair(arrows[b].source, arrows[b].target);
  });
  std::vector<ArrowSpec> sorted;
  sorted.reserve(arrows.size());
  for (auto i : perm) sorted.push_back(arrows[i]);
  if (order) *order = perm;
  return Quiver(std::move(vertex_labels), std::move(sorted));
}

const Arrow& Quiver::arrow(std::size_t index) const {
  if (index == 0 || index > arrows_.size()) throw DomainError("arrow index out of range");
  return arrows_[index - 1];
}

std::size_t Quiver::arrow_count_between(VertexId u, VertexId v) const {
  const std::size_t n = vertices_.size();
  if (u >= n || v >= n) throw DomainError("vertex index out of range");
  return block_size_[u * n + v];
}

std::span<const Arrow> Quiver::arrows_between(VertexId u, VertexId v) const {
  const std::size_t count = arrow_count_between(u, v);
  if (count == 0) return {};
  return std::span<const Arrow>(arrows_).subspan(block_begin_[u * vertices_.size() + v], count);
}

std::optional<VertexId> Quiver::find_vertex(const std::string& label) const {
  for (const auto& v : vertices_)
    if (v.label == label) return v.index;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const {
  for (const auto& a : arrows_)
    if (a.label == label) return a.index;
  return std::nullopt;
}

bool Quiver::is_schur() const {
  return std::all_of(block_size_.begin(), block_size_.end(), [](std::size_t s) { return s <= 1; });
}

Quiver make_kronecker(std::size_t m) {
  std::vector<Quiver::ArrowSpec> arrows;
  for (std::size_t i = 1; i <= m; ++i) arrows.push_back({"a" + std::to_string(i), 0, 1});
  return Quiver({"s", "t"}, std::move(arrows));
}

Quiver make_loop_quiver(std::size_t m) {
  std::vector<Quiver::ArrowSpec> arrows;
  for (std::size_t i = 1; i <= m; ++i) arrows.push_back({"a" + std::to_string(i), 0, 0});
  return Quiver({"v"}, std::move(arrows));
}

Quiver make_isolated(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Quiver(std::move(labels), {});
}

std::vector<VertexPair> v2_pairs(const Quiver& q) {
  std::vector<VertexPair> out;
  for (VertexId u = 0; u < q.vertex_count(); ++u)
    for (VertexId v = 0; v < q.vertex_count(); ++v)
      if (q.arrow_count_between(u, v) > 0) out.push_back({u, v});
  return out;
}

bool UndirectedGraph::is_forest() const {
  std::vector<std::size_t> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (e.first == e.second) return false;
    const auto a = find(e.first);
    const auto b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

UndirectedGraph no_double_edge_graph(const Quiver& q) {
  UndirectedGraph g;
  g.node_count = q.vertex_count();
  for (const auto& a : q.arrows()) {
    g.edges.insert({std::min(a.source, a.target), std::max(a.source, a.target)});
  }
  return g;
}

QuiverSymmetry QuiverSymmetry::compose(const QuiverSymmetry& inner) const {
  QuiverSymmetry out{std::vector<VertexId>(permutation.size())};
  for (std::size_t i = 0; i < permutation.size(); ++i) out.permutation[i] = permutation[inner.permutation[i]];
  return out;
}

QuiverSymmetry QuiverSymmetry::inverse() const {
  QuiverSymmetry out{std::vector<VertexId>(permutation.size())};
  for (std::size_t i = 0; i < permutation.size(); ++i) out.permutation[permutation[i]] = i;
  return out;
}

namespace {

struct DegreeSignature {
  std::size_t out_degree;
  std::size_t in_degree;
  std::size_t loops;
  bool operator==(const DegreeSignature&) const = default;
};

class SymmetrySearch {
 public:
  explicit SymmetrySearch(const Quiver& q) : q_(q), n_(q.vertex_count()) {
    for (VertexId v = 0; v < n_; ++v) {
      DegreeSignature sig{0, 0, q.arrow_count_between(v, v)};
      for (VertexId w = 0; w < n_; ++w) {
        sig.out_degree += q.arrow_count_between(v, w);
        sig.in_degree += q.arrow_count_between(w, v);
      }
      signature_.push_back(sig);
    }
  }

  std::vector<QuiverSymmetry> run() {
    image_.assign(n_, 0);
    used_.assign(n_, false);
    extend(0);
    return std::move(found_);
  }

 private:
  // Vertices 0..depth-1 are assigned; try every image for vertex `depth` in
  // increasing order so the identity is found first.
  void extend(std::size_t depth) {
    if (depth == n_) {
      found_.push_back({image_});
      return;
    }
    for (VertexId candidate = 0; candidate < n_; ++candidate) {
      if (used_[candidate] || !(signature_[depth] == signature_[candidate])) continue;
      image_[depth] = candidate;
      if (!consistent(depth)) continue;
      used_[candidate] = true;
      extend(depth + 1);
      used_[candidate] = false;
    }
  }

  bool consistent(std::size_t depth) const {
    for (std::size_t other = 0; other <= depth; ++other) {
      if (q_.arrow_count_between(depth, other) != q_.arrow_count_between(image_[depth], image_[other]) ||
          q_.arrow_count_between(other, depth) != q_.arrow_count_between(image_[other], image_[depth])) {
        return false;
      }
    }
    return true;
  }

  const Quiver& q_;
  std::size_t n_;
  std::vector<DegreeSignature> signature_;
  std::vector<VertexId> image_;
  std::vector<bool> used_;
  std::vector<QuiverSymmetry> found_;
};

std::vector<PairOrbit> orbits_of(std::vector<VertexPair> elements,
                                 const std::vector<QuiverSymmetry>& group, bool unordered) {
  std::sort(elements.begin(), elements.end());
  std::set<VertexPair> assigned;
  std::vector<PairOrbit> orbits;
  for (const auto& start : elements) {
    if (assigned.count(start)) continue;
    std::set<VertexPair> members;
    for (const auto& sigma : group) {
      VertexPair image{sigma(start.first), sigma(start.second)};
      if (unordered && image.first > image.second) std::swap(image.first, image.second);
      members.insert(image);
    }
    assigned.insert(members.begin(), members.end());
    PairOrbit orbit{*members.begin(), {members.begin(), members.end()}};
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

std::vector<QuiverSymmetry> quiver_symmetries(const Quiver& q, std::size_t vertex_cap) {
  if (q.vertex_count() > vertex_cap) {
    throw BudgetError("symmetry search over " + std::to_string(q.vertex_count()) +
                      " vertices exceeds the cap of " + std::to_string(vertex_cap));
  }
  return SymmetrySearch(q).run();
}

std::size_t act_on_arrow(const Quiver& q, const QuiverSymmetry& sigma, std::size_t arrow_index) {
  const Arrow& a = q.arrow(arrow_index);
  const auto from = q.arrows_between(a.source, a.target);
  const auto to = q.arrows_between(sigma(a.source), sigma(a.target));
  if (to.size() != from.size()) throw DomainError("permutation is not a quiver symmetry");
  return to[arrow_index - from.front().index].index;
}

SymmetryOrbits sq_orbits(const Quiver& q, const std::vector<QuiverSymmetry>& group) {
  SymmetryOrbits out;
  out.v2 = orbits_of(v2_pairs(q), group, false);
  std::vector<VertexPair> pairs;
  for (VertexId s = 0; s < q.vertex_count(); ++s)
    for (VertexId t = s + 1; t < q.vertex_count(); ++t) pairs.push_back({s, t});
  out.unordered_pairs = orbits_of(std::move(pairs), group, true);
  return out;
}

SymmetryOrbits sq_orbits(const Quiver& q, std::size_t vertex_cap) {
  return sq_orbits(q, quiver_symmetries(q, vertex_cap));
}

std::optional<std::size_t> R2Quiver::pair_index(VertexPair p) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

std::optional<std::size_t> R2Quiver::arrow_index(VertexId u, VertexId v, VertexId w) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].u == u && arrows[i].v == v && arrows[i].w == w) return i;
  return std::nullopt;
}

R2Quiver r2_quiver(const Quiver& q) {
  R2Quiver out;
  out.pairs = v2_pairs(q);
  std::vector<std::string> labels;
  auto label_of = [&](const VertexPair& p) {
    return "(" + q.vertices()[p.first].label + "," + q.vertices()[p.second].label + ")";
  };
  for (const auto& p : out.pairs) labels.push_back(label_of(p));
  // Composability: (u,v) -> (v',w) exists iff v == v'.
  std::vector<Quiver::ArrowSpec> specs;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    for (std::size_t j = 0; j < out.pairs.size(); ++j) {
      if (out.pairs[i].second != out.pairs[j].first) continue;
      out.arrows.push_back({out.pairs[i].first, out.pairs[i].second, out.pairs[j].second, i, j});
      specs.push_back({label_of(out.pairs[i]) + "->" + label_of(out.pairs[j]), i, j});
    }
  }
  out.quiver = Quiver(std::move(labels), std::move(specs));
  return out;
}

}  // namespace msa
