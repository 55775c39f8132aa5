#include "msa/path_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "msa/error.hpp"

namespace msa {

Path trivial_path(VertexId v) { return Path{v, {}}; }

Path make_path(const Quiver& q, std::vector<std::size_t> arrows) {
  if (arrows.empty()) throw DomainError("make_path needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source) {
      throw DomainError("arrows " + q.arrow(arrows[i]).label + " and " + q.arrow(arrows[i + 1]).label +
                        " do not compose");
    }
  }
  const VertexId start = q.arrow(arrows.front()).source;
  return Path{start, std::move(arrows)};
}

VertexId end_vertex(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.start : q.arrow(p.arrows.back()).target;
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length) {
  std::vector<Path> current;
  for (VertexId v = 0; v < q.vertex_count(); ++v) current.push_back(trivial_path(v));
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const auto& p : current) {
      const VertexId end = end_vertex(q, p);
      for (const auto& a : q.arrows()) {
        if (a.source != end) continue;
        Path extended = p;
        if (extended.arrows.empty()) extended.start = a.source;
        extended.arrows.push_back(a.index);
        next.push_back(std::move(extended));
      }
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

AlgebraElement AlgebraElement::of_path(Path p, const Scalar& coeff) {
  AlgebraElement x;
  x.add_term(p, coeff);
  return x;
}

AlgebraElement AlgebraElement::arrow(const Quiver& q, std::size_t index) {
  return of_path(make_path(q, {index}));
}

AlgebraElement AlgebraElement::one(const Quiver& q) {
  AlgebraElement x;
  for (VertexId v = 0; v < q.vertex_count(); ++v) x.add_term(trivial_path(v), 1);
  return x;
}

void AlgebraElement::add_term(const Path& p, const Scalar& coeff) {
  if (msa::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (msa::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar AlgebraElement::coefficient(const Path& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::size_t AlgebraElement::min_length() const {
  return terms_.empty() ? 0 : terms_.begin()->first.length();
}

std::size_t AlgebraElement::max_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

std::optional<std::size_t> AlgebraElement::homogeneous_degree() const {
  if (terms_.empty() || min_length() != max_length()) return std::nullopt;
  return min_length();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
  for (const auto& [p, c] : b.terms_) a.add_term(p, -c);
  return a;
}

AlgebraElement operator*(const Scalar& c, AlgebraElement a) {
  if (is_zero(c)) return {};
  for (auto& [p, coeff] : a.terms_) coeff *= c;
  return a;
}

AlgebraElement multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [pa, ca] : a.terms()) {
    const VertexId end = end_vertex(q, pa);
    for (const auto& [pb, cb] : b.terms()) {
      if (pb.start != end) continue;
      Path joined = pa.arrows.empty() ? pb : pa;
      if (!pa.arrows.empty()) joined.arrows.insert(joined.arrows.end(), pb.arrows.begin(), pb.arrows.end());
      out.add_term(joined, ca * cb);
    }
  }
  return out;
}

AlgebraElement t2_multiply(const Quiver& q, const AlgebraElement& a, const AlgebraElement& b) {
  if (a.max_length() > 1 || b.max_length() > 1) {
    throw DomainError("t2_multiply expects elements of length at most 1");
  }
  AlgebraElement product = multiply(q, a, b);
  AlgebraElement truncated;
  for (const auto& [p, c] : product.terms())
    if (p.length() <= 1) truncated.add_term(p, c);
  return truncated;
}

std::string to_string(const Quiver& q, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    Scalar magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (magnitude != 1) out += msa::to_string(magnitude) + "*";
    if (p.arrows.empty()) {
      out += q.vertices()[p.start].label;
    } else {
      for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += "*";
        out += q.arrow(p.arrows[i]).label;
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kSlicePathLimit = 200000;

/// Incremental sparse row echelon form over the rationals.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Scalar>;

  // Returns true when the row was independent of everything inserted so far.
  bool insert(Row row) {
    while (!row.empty()) {
      const auto [lead, coeff] = *row.begin();
      const auto pivot = rows_.find(lead);
      if (pivot == rows_.end()) {
        const Scalar inv = 1 / coeff;
        for (auto& [k, v] : row) v *= inv;
        rows_.emplace(lead, std::move(row));
        return true;
      }
      for (const auto& [k, v] : pivot->second) {
        auto& slot = row[k];
        slot -= coeff * v;
        if (is_zero(slot)) row.erase(k);
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, Row> rows_;
};

bool slice_is_full(const IdealSpec& ideal, const Quiver& q, std::size_t degree) {
  const auto basis = paths_of_length(q, degree);
  if (basis.empty()) return true;
  if (basis.size() > kSlicePathLimit) {
    throw BudgetError("degree " + std::to_string(degree) + " has " + std::to_string(basis.size()) +
                      " paths, beyond the admissibility check limit");
  }
  std::map<Path, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);

  SparseEchelon echelon;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    const std::size_t e = *g.homogeneous_degree();
    if (e > degree) continue;
    for (std::size_t left = 0; left <= degree - e; ++left) {
      const auto lefts = paths_of_length(q, left);
      const auto rights = paths_of_length(q, degree - e - left);
      for (const auto& a : lefts) {
        const auto ag = multiply(q, AlgebraElement::of_path(a), g);
        if (ag.is_zero()) continue;
        for (const auto& b : rights) {
          const auto agb = multiply(q, ag, AlgebraElement::of_path(b));
          if (agb.is_zero()) continue;
          SparseEchelon::Row row;
          for (const auto& [p, c] : agb.terms()) row.emplace(position.at(p), c);
          echelon.insert(std::move(row));
          if (echelon.rank() == basis.size()) return true;
        }
      }
    }
  }
  return echelon.rank() == basis.size();
}

}  // namespace

AdmissibilityVerdict is_admissible(const IdealSpec& ideal, const Quiver& q, std::size_t degree_cap) {
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const auto& g = ideal.generators[i];
    if (g.is_zero()) continue;
    if (g.min_length() < 2) {
      return {AdmissibilityVerdict::Kind::NotInJ2, 0,
              "generator " + std::to_string(i) + " (" + to_string(q, g) + ") has a term of length < 2"};
    }
    if (!g.homogeneous_degree()) {
      throw DomainError("generator " + std::to_string(i) + " (" + to_string(q, g) +
                        ") is not homogeneous in path length");
    }
  }
  for (std::size_t degree = 2; degree <= degree_cap; ++degree) {
    if (!slice_is_full(ideal, q, degree)) continue;
    // Full slices propagate: J^{d+1} = J^d J is inside I once J^d is.
    if (degree < degree_cap && !slice_is_full(ideal, q, degree + 1)) {
      throw std::logic_error("degree slice lost fullness at degree " + std::to_string(degree + 1));
    }
    return {AdmissibilityVerdict::Kind::Admissible, degree, {}};
  }
  return {AdmissibilityVerdict::Kind::NoFiniteL, degree_cap,
          "no degree up to " + std::to_string(degree_cap) + " has every path in the ideal"};
}

bool is_monomial(const IdealSpec& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [](const AlgebraElement& g) { return g.terms().size() <= 1; });
}

R2ElementVerdict is_r2_element(const AlgebraElement& x, const Quiver& q) {
  if (x.is_zero()) return {R2ElementVerdict::Kind::Zero, {}};
  std::optional<VertexTriple> type;
  for (const auto& [p, c] : x.terms()) {
    if (p.length() != 2) return {R2ElementVerdict::Kind::No, {}};
    const VertexTriple t{q.arrow(p.arrows[0]).source, q.arrow(p.arrows[0]).target, q.arrow(p.arrows[1]).target};
    if (type && *type != t) return {R2ElementVerdict::Kind::No, {}};
    type = t;
  }
  return {R2ElementVerdict::Kind::R2, *type};
}

namespace {

std::string triple_label(const Quiver& q, const VertexTriple& t) {
  const auto& v = q.vertices();
  return "(" + v[t.u].label + "," + v[t.v].label + ")->(" + v[t.v].label + "," + v[t.w].label + ")";
}

R2Check check_generators(const std::vector<AlgebraElement>& generators,
                         const std::map<std::size_t, VertexTriple>& declared, const Quiver& q) {
  R2Check out;
  out.assignment.r2 = r2_quiver(q);
  const auto& r2 = out.assignment.r2;
  out.assignment.elements.assign(r2.arrows.size(), AlgebraElement{});
  std::vector<std::optional<std::size_t>> owner(r2.arrows.size());

  auto fail = [&](std::string reason) {
    out.ok = false;
    out.reason = std::move(reason);
    out.assignment.elements.assign(r2.arrows.size(), AlgebraElement{});
    return out;
  };

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto verdict = is_r2_element(generators[i], q);
    const auto tag = declared.find(i);
    if (verdict.kind == R2ElementVerdict::Kind::No) {
      return fail("generator " + std::to_string(i) + " (" + to_string(q, generators[i]) +
                  ") is not an r2-element");
    }
    if (verdict.kind == R2ElementVerdict::Kind::Zero) {
      // Zero has every type; a declared tag only needs to name a real r2-arrow.
      if (tag != declared.end() && !r2.arrow_index(tag->second.u, tag->second.v, tag->second.w)) {
        return fail("generator " + std::to_string(i) + " declares a type that is not an r2-arrow");
      }
      continue;
    }
    if (tag != declared.end() && tag->second != verdict.type) {
      return fail("generator " + std::to_string(i) + " declared type " + triple_label(q, tag->second) +
                  " but has type " + triple_label(q, verdict.type));
    }
    const auto index = *r2.arrow_index(verdict.type.u, verdict.type.v, verdict.type.w);
    if (owner[index]) {
      return fail("generators " + std::to_string(*owner[index]) + " and " + std::to_string(i) +
                  " share type " + triple_label(q, verdict.type));
    }
    owner[index] = i;
    out.assignment.elements[index] = generators[i];
  }
  out.ok = true;
  return out;
}

}  // namespace

R2Check r2_generating_set_check(const std::vector<AlgebraElement>& generators, const Quiver& q) {
  return check_generators(generators, {}, q);
}

R2Check r2_generating_set_check(const IdealSpec& ideal, const Quiver& q) {
  return check_generators(ideal.generators, ideal.declared_types, q);
}

R2Representation representation_of(const R2Assignment& assignment, const Quiver& q) {
  const auto& r2 = assignment.r2;
  if (assignment.elements.size() != r2.arrows.size()) {
    throw DomainError("assignment does not cover the r2-quiver");
  }
  R2Representation rep;
  rep.r2 = r2;
  for (const auto& p : r2.pairs) rep.dims.push_back(q.arrow_count_between(p.first, p.second));
  for (std::size_t i = 0; i < r2.arrows.size(); ++i) {
    const auto& a = r2.arrows[i];
    const auto rows = q.arrows_between(a.u, a.v);
    const auto cols = q.arrows_between(a.v, a.w);
    ScalarMatrix m(rows.size(), cols.size());
    const auto& element = assignment.elements[i];
    const auto verdict = is_r2_element(element, q);
    if (verdict.kind == R2ElementVerdict::Kind::No ||
        (verdict.kind == R2ElementVerdict::Kind::R2 && verdict.type != VertexTriple{a.u, a.v, a.w})) {
      throw DomainError("assigned element does not have the type of its r2-arrow");
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        m(r, c) = element.coefficient(Path{a.u, {rows[r].index, cols[c].index}});
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

}  // namespace msa
