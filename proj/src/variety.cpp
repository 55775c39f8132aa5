#include "msa/variety.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "msa/error.hpp"

namespace msa {

VariableSet::VariableSet(const Quiver& q) {
  for (const auto& v : q.vertices()) {
    if (v.index == 0) continue;
    vars_.push_back({VarKind::Vertex, v.index});
    labels_.push_back(v.label);
  }
  vertex_vars_ = vars_.size();
  for (const auto& a : q.arrows()) {
    vars_.push_back({VarKind::Arrow, a.index});
    labels_.push_back(a.label);
  }
}

std::size_t VariableSet::of_vertex(VertexId v) const {
  if (v == 0 || v > vertex_vars_) throw DomainError("vertex has no coordinate variable");
  return v - 1;
}

std::size_t VariableSet::of_arrow(std::size_t arrow_index) const {
  if (arrow_index == 0 || vertex_vars_ + arrow_index > vars_.size()) {
    throw DomainError("arrow index out of range");
  }
  return vertex_vars_ + arrow_index - 1;
}

std::vector<Polynomial> GeneratorSet::all() const {
  std::vector<Polynomial> out(x0);
  out.insert(out.end(), x_half.begin(), x_half.end());
  out.insert(out.end(), x1.begin(), x1.end());
  return out;
}

int vertex_relation_sign(std::size_t j, std::size_t k) {
  const std::size_t gap = j < k ? k - j : j - k;
  return (gap - 1) % 2 == 0 ? 1 : -1;
}

GeneratorSet ideal_generators(const Quiver& q) {
  const VariableSet vars(q);
  const std::size_t n0 = vars.vertex_var_count();
  GeneratorSet out;
  auto v = [&](std::size_t i) { return vars.x(vars.of_vertex(i)); };
  auto a = [&](std::size_t i) { return vars.x(vars.of_arrow(i)); };

  for (std::size_t i = 1; i <= n0; ++i) {
    for (std::size_t j = i + 1; j <= n0; ++j) {
      out.x0.push_back(v(i) * v(i) * v(j) - Scalar(vertex_relation_sign(i, j)) * (v(i) * v(j) * v(j)));
    }
  }
  for (std::size_t i = 1; i <= n0; ++i)
    for (std::size_t j = i + 1; j <= n0; ++j)
      for (std::size_t k = j + 1; k <= n0; ++k) out.x0.push_back(v(i) * v(j) * v(k));

  // Arrows against non-incident vertices.
  for (const auto& arrow : q.arrows()) {
    for (std::size_t j = 1; j <= n0; ++j) {
      if (j == arrow.source || j == arrow.target) continue;
      out.x_half.push_back(a(arrow.index) * v(j));
    }
  }
  // Arrows between two non-basepoint vertices, either direction, via the
  // index-sorted pair.
  for (const auto& arrow : q.arrows()) {
    if (arrow.is_loop() || arrow.source == 0 || arrow.target == 0) continue;
    const std::size_t j = std::min(arrow.source, arrow.target);
    const std::size_t k = std::max(arrow.source, arrow.target);
    out.x_half.push_back((v(k) - Scalar(vertex_relation_sign(j, k)) * v(j)) * a(arrow.index));
  }
  for (const auto& arrow : q.arrows()) {
    if (arrow.is_loop() && arrow.source != 0) out.x_half.push_back(v(arrow.source) * a(arrow.index));
  }

  for (const auto& first : q.arrows()) {
    for (const auto& second : q.arrows()) {
      if (second.index <= first.index) continue;
      if (first.source == second.source && first.target == second.target) continue;
      out.x1.push_back(a(first.index) * a(second.index));
    }
  }
  return out;
}

namespace {

// Allowed vertex variables and the merge relation for a vertex pair.
void add_vertex_part(const VariableSet& vars, VertexPair pair, ComponentDescriptor& c) {
  const auto [s, t] = pair;
  const std::size_t j = std::min(s, t);
  const std::size_t k = std::max(s, t);
  if (j >= 1) c.allowed_vars.push_back(vars.of_vertex(j));
  if (k >= 1 && k != j) c.allowed_vars.push_back(vars.of_vertex(k));
  if (j >= 1 && k != j) {
    c.linear_constraints.push_back(vars.x(vars.of_vertex(j)) -
                                   Scalar(vertex_relation_sign(j, k)) * vars.x(vars.of_vertex(k)));
  }
}

}  // namespace

std::vector<ComponentDescriptor> components(const Quiver& q) {
  const VariableSet vars(q);
  std::vector<ComponentDescriptor> out;
  for (VertexId s = 0; s < q.vertex_count(); ++s) {
    for (VertexId t = s + 1; t < q.vertex_count(); ++t) {
      if (q.arrow_count_between(s, t) + q.arrow_count_between(t, s) > 0) continue;
      ComponentDescriptor c{ComponentDescriptor::Kind::Separable, {s, t}, 0, {}, {}};
      add_vertex_part(vars, {s, t}, c);
      out.push_back(std::move(c));
    }
  }
  for (const auto& pair : v2_pairs(q)) {
    const std::size_t d = q.arrow_count_between(pair.first, pair.second);
    ComponentDescriptor c;
    c.vertices = pair;
    if (pair.first != pair.second) {
      c.kind = ComponentDescriptor::Kind::SplitPair;
      c.dimension = d;
      add_vertex_part(vars, pair, c);
    } else {
      c.kind = ComponentDescriptor::Kind::SplitLoop;
      c.dimension = d - 1;
    }
    for (const auto& a : q.arrows_between(pair.first, pair.second)) c.allowed_vars.push_back(vars.of_arrow(a.index));
    std::sort(c.allowed_vars.begin(), c.allowed_vars.end());
    out.push_back(std::move(c));
  }
  return out;
}

ScalarMatrix component_equations(const ComponentDescriptor& c, std::size_t num_vars) {
  std::vector<bool> allowed(num_vars, false);
  for (auto i : c.allowed_vars) allowed.at(i) = true;
  const std::size_t zeroed = static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), false));
  ScalarMatrix m(zeroed + c.linear_constraints.size(), num_vars);
  std::size_t row = 0;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (!allowed[i]) m(row++, i) = 1;
  }
  for (const auto& f : c.linear_constraints) {
    if (f.homogeneous_degree() != 1u) throw DomainError("component constraint is not linear");
    for (const auto& [e, coeff] : f.terms()) {
      const auto var = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1u) - e.begin());
      m(row, var) = coeff;
    }
    ++row;
  }
  return m;
}

std::size_t solution_dimension(const ComponentDescriptor& c, std::size_t num_vars) {
  const std::size_t r = rank(component_equations(c, num_vars));
  if (r >= num_vars) throw DomainError("component has an empty solution space");
  return num_vars - r - 1;
}

bool component_contains(const ComponentDescriptor& outer, const ComponentDescriptor& inner,
                        std::size_t num_vars) {
  const ScalarMatrix a = component_equations(inner, num_vars);
  const ScalarMatrix b = component_equations(outer, num_vars);
  ScalarMatrix stacked(a.rows() + b.rows(), num_vars);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < num_vars; ++c) stacked(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < num_vars; ++c) stacked(a.rows() + r, c) = b(r, c);
  return rank(stacked) == rank(a);
}

Polynomial restrict_to_component(const Polynomial& f, const ComponentDescriptor& c) {
  const std::size_t n = f.num_vars();
  Polynomial out = f;
  const Polynomial zero(n);
  std::vector<bool> allowed(n, false);
  for (auto i : c.allowed_vars) allowed.at(i) = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!allowed[i]) out = out.substitute(i, zero);
  for (const auto& constraint : c.linear_constraints) {
    // Solve for the leading variable (terms are stored largest first).
    const auto& [lead_exp, lead_coeff] = *constraint.terms().begin();
    const auto var = static_cast<std::size_t>(std::find(lead_exp.begin(), lead_exp.end(), 1u) - lead_exp.begin());
    Polynomial rest = constraint;
    rest.add_term(lead_exp, -lead_coeff);
    out = out.substitute(var, Scalar(-1) / lead_coeff * rest);
  }
  return out;
}

std::size_t msa_dimension(const Quiver& q) {
  if (q.vertex_count() + q.arrow_count() < 2) throw DomainError("empty variety");
  std::size_t best = 0;
  for (const auto& c : components(q)) best = std::max(best, c.dimension);
  return best;
}

IrreducibilityVerdict is_irreducible(const Quiver& q) {
  if (q.vertex_count() + q.arrow_count() < 2) throw DomainError("empty variety");
  const std::size_t count = components(q).size();
  IrreducibilityVerdict verdict{count == 1, IrreducibilityVerdict::Reason::None, 0, count};
  if (!verdict.irreducible) return verdict;
  if (q.vertex_count() == 1) {
    verdict.reason = IrreducibilityVerdict::Reason::Loop;
    verdict.m = q.arrow_count();
  } else if (q.arrow_count() == 0) {
    verdict.reason = IrreducibilityVerdict::Reason::TwoIsolated;
  } else {
    verdict.reason = IrreducibilityVerdict::Reason::Kronecker;
    verdict.m = q.arrow_count();
  }
  return verdict;
}

Frame frame_separable(const Quiver& q, std::size_t j, std::size_t k) {
  if (!(j < k && k < q.vertex_count())) throw DomainError("frame_separable needs 0 <= j < k <= n0");
  const VariableSet vars(q);
  const std::size_t n = vars.size();
  Frame f(n, n - 1);
  std::size_t col = 0;
  for (std::size_t i = 1; i < q.vertex_count(); ++i) {
    if (i == k) continue;
    f(vars.of_vertex(i), col) = 1;
    if (i == j) f(vars.of_vertex(k), col) = 1;
    ++col;
  }
  for (const auto& a : q.arrows()) f(vars.of_arrow(a.index), col++) = 1;
  return f;
}

Frame frame_split(const Quiver& q, std::size_t j, std::size_t k, std::size_t pivot_arrow,
                  const SplitParams& params) {
  if (j >= q.vertex_count() || k >= q.vertex_count() || q.arrow_count_between(j, k) == 0) {
    throw DomainError("frame_split needs (v_j, v_k) in V^2(Q)");
  }
  const auto block = q.arrows_between(j, k);
  const auto in_block = [&](std::size_t index) {
    return index >= block.front().index && index <= block.back().index;
  };
  if (!in_block(pivot_arrow)) throw DomainError("pivot arrow is not in the block v_j Q_1 v_k");
  Scalar shift = 0;
  if (j == k) {
    if (params.vertex_shift && !is_zero(*params.vertex_shift)) {
      throw DomainError("vertex shift must be zero for a loop block");
    }
  } else {
    if (!params.vertex_shift) throw DomainError("missing vertex shift parameter");
    shift = *params.vertex_shift;
  }

  const VariableSet vars(q);
  const std::size_t n = vars.size();
  const std::size_t pivot_row = vars.of_arrow(pivot_arrow);
  Frame f(n, n - 1);
  std::size_t col = 0;
  // Vertex elements; the one carrying v_0 is dropped since L maps the sum of
  // all vertex elements (= 1) to zero.
  for (std::size_t w = 1; w < q.vertex_count(); ++w) {
    f(vars.of_vertex(w), col) = 1;
    if (j != k && w == j) f(pivot_row, col) = shift;
    if (j != k && w == k) f(pivot_row, col) = -shift;
    ++col;
  }
  for (const auto& a : q.arrows()) {
    if (a.index == pivot_arrow) continue;
    f(vars.of_arrow(a.index), col) = 1;
    if (in_block(a.index)) {
      const auto it = params.arrow_shift.find(a.index);
      if (it == params.arrow_shift.end()) throw DomainError("missing shift parameter for arrow " + a.label);
      f(pivot_row, col) = it->second;
    }
    ++col;
  }
  return f;
}

Scalar minor(const Frame& f, std::size_t row) {
  if (row >= f.rows() || f.cols() + 1 != f.rows()) throw DomainError("minor needs an N x (N-1) frame");
  return bareiss_determinant(f.without_row(row));
}

ProjectivePoint ProjectivePoint::normalized() const {
  ProjectivePoint out{coords};
  const auto lead = std::find_if(coords.begin(), coords.end(), [](const Scalar& c) { return !is_zero(c); });
  if (lead == coords.end()) throw DomainError("zero vector is not a projective point");
  const Scalar inv = 1 / *lead;
  for (auto& c : out.coords) c *= inv;
  return out;
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
  return coords.size() == other.coords.size() && normalized().coords == other.normalized().coords;
}

ProjectivePoint point_of(const Frame& f) {
  ProjectivePoint p;
  bool nonzero = false;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    p.coords.push_back(minor(f, r));
    nonzero = nonzero || !is_zero(p.coords.back());
  }
  if (!nonzero) throw DomainError("rank-deficient frame");
  return p;
}

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 8);
  auto draw = [&] {
    const int v = dist(rng);
    return v >= 0 ? v + 1 : v;  // [-9,9] without 0
  };
  const int num = draw();
  const int den = draw();
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

std::string describe_split(const Quiver& q, std::size_t j, std::size_t k, std::size_t pivot,
                           const SplitParams& params) {
  std::ostringstream os;
  os << "split(" << q.vertices()[j].label << "," << q.vertices()[k].label << "; pivot "
     << q.arrow(pivot).label;
  if (params.vertex_shift) os << "; c=" << params.vertex_shift->get_str();
  for (const auto& [a, c] : params.arrow_shift) os << "; " << q.arrow(a).label << "=" << c.get_str();
  os << ")";
  return os.str();
}

}  // namespace

VanishingReport verify_vanishing(const Quiver& q, std::size_t samples, std::uint64_t seed) {
  VanishingReport report;
  if (q.vertex_count() + q.arrow_count() < 2) return report;
  const VariableSet vars(q);
  const auto generators = ideal_generators(q).all();
  report.generator_count = generators.size();
  std::mt19937_64 rng(seed);

  auto check = [&](const Frame& f, const std::string& description) {
    ++report.frame_count;
    const auto point = point_of(f);
    for (const auto& g : generators) {
      ++report.evaluations;
      const Scalar value = g.evaluate(point.coords);
      if (!is_zero(value)) {
        report.violations.push_back({g.to_string(vars.labels()), description, point.coords, value});
      }
    }
  };

  for (std::size_t k = 1; k < q.vertex_count(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      check(frame_separable(q, j, k),
            "separable(" + q.vertices()[j].label + "," + q.vertices()[k].label + ")");
    }
  }
  for (const auto& [j, k] : v2_pairs(q)) {
    const auto block = q.arrows_between(j, k);
    for (const auto& pivot : block) {
      for (std::size_t sample = 0; sample <= samples; ++sample) {
        SplitParams params;
        const bool zero = sample == 0;
        if (j != k) params.vertex_shift = zero ? Scalar(0) : random_rational(rng);
        for (const auto& a : block) {
          if (a.index != pivot.index) params.arrow_shift[a.index] = zero ? Scalar(0) : random_rational(rng);
        }
        check(frame_split(q, j, k, pivot.index, params), describe_split(q, j, k, pivot.index, params));
      }
    }
  }
  return report;
}

}  // namespace msa
