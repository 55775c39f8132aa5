#include "msa/ff_oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "msa/error.hpp"
#include "msa/variety.hpp"

namespace msa {

namespace {

void check_caps(const Quiver& q, std::uint32_t p) {
  if (p > kMaxOracleChar) throw BudgetError("field size " + std::to_string(p) + " exceeds the cap " +
                                            std::to_string(kMaxOracleChar));
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (q.vertex_count() + q.arrow_count() > kMaxAlgebraDim) {
    throw BudgetError("dim T_2Q = " + std::to_string(q.vertex_count() + q.arrow_count()) + " exceeds the cap " +
                      std::to_string(kMaxAlgebraDim));
  }
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

// Calls visit(v) for every vector of F_p^n whose first nonzero entry, at
// position `lead`, equals 1.
void for_each_in_stratum(std::size_t n, std::size_t lead, std::uint32_t p,
                         const std::function<void(const std::vector<Fq>&)>& visit) {
  std::vector<Fq> v(n, 0);
  v[lead] = 1;
  while (true) {
    visit(v);
    bool advanced = false;
    for (std::size_t pos = n; pos > lead + 1 && !advanced;) {
      --pos;
      if (++v[pos] < p) advanced = true;
      else v[pos] = 0;
    }
    if (!advanced) return;
  }
}

// Runs one worker per leading-coordinate stratum and merges sorted output.
std::vector<FqPoint> per_stratum(std::size_t n, std::uint32_t p,
                                 const std::function<void(const std::vector<Fq>&, std::vector<FqPoint>&)>& step) {
  std::vector<std::vector<FqPoint>> found(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> workers;
  for (std::size_t lead = 0; lead < n; ++lead) {
    workers.emplace_back([&, lead] {
      try {
        for_each_in_stratum(n, lead, p, [&](const std::vector<Fq>& v) { step(v, found[lead]); });
      } catch (...) {
        errors[lead] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<FqPoint> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Structure constants of T_2Q on the basis v_0, ..., v_{n0}, a_1, ..., a_{n1}:
// product[i][j] is the index of e_i e_j, or -1 for zero.
std::vector<std::vector<int>> product_table(const Quiver& q) {
  const std::size_t nv = q.vertex_count();
  const std::size_t n = nv + q.arrow_count();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (std::size_t v = 0; v < nv; ++v) table[v][v] = static_cast<int>(v);
  for (const auto& a : q.arrows()) {
    const auto idx = static_cast<int>(nv + a.index - 1);
    table[a.source][nv + a.index - 1] = idx;
    table[nv + a.index - 1][a.target] = idx;
  }
  return table;
}

std::vector<std::vector<Fq>> equations_mod(const ComponentDescriptor& c, std::size_t n, const PrimeField& f) {
  const auto m = component_equations(c, n);
  std::vector<std::vector<Fq>> rows(m.rows(), std::vector<Fq>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = f.reduce(m(r, j));
  return rows;
}

std::size_t rank_of_rows(const std::vector<std::vector<Fq>>& rows, std::size_t n, const PrimeField& f) {
  FqMatrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) m(r, j) = rows[r][j];
  return f.rank(std::move(m));
}

bool satisfies(const std::vector<std::vector<Fq>>& rows, const std::vector<Fq>& x, const PrimeField& f) {
  for (const auto& row : rows) {
    Fq dot = 0;
    for (std::size_t j = 0; j < x.size(); ++j) dot = f.add(dot, f.mul(row[j], x[j]));
    if (dot != 0) return false;
  }
  return true;
}

std::string coords_text(const std::vector<Fq>& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ":" : "") + std::to_string(x[i]);
  return out + "]";
}

}  // namespace

std::vector<FqPoint> enumerate_maximal_subalgebras(const Quiver& q, std::uint32_t p, std::uint64_t* candidates) {
  check_caps(q, p);
  const PrimeField f(p);
  const std::size_t nv = q.vertex_count();
  const std::size_t n = nv + q.arrow_count() - 1;  // coordinates of V = T_2Q / k v_0
  if (n == 0) throw DomainError("empty variety");
  if (ipow(p, n) > kMaxCandidates) throw BudgetError("too many candidate hyperplanes");
  if (candidates) *candidates = (ipow(p, n) - 1) / (p - 1);
  const auto table = product_table(q);

  return per_stratum(n, p, [&](const std::vector<Fq>& g, std::vector<FqPoint>& out) {
    // Functional on T_2Q vanishing on 1: g on V, the basepoint fixed by g(1) = 0.
    std::vector<Fq> fn(n + 1);
    Fq vertex_sum = 0;
    for (std::size_t t = 0; t < n; ++t) {
      fn[t + 1] = g[t];
      if (t + 1 < nv) vertex_sum = f.add(vertex_sum, g[t]);
    }
    fn[0] = f.neg(vertex_sum);
    const std::size_t lead = static_cast<std::size_t>(std::find(g.begin(), g.end(), 1u) - g.begin());
    const std::size_t pivot = lead + 1;  // fn[pivot] == 1
    auto m = [&](std::size_t i, std::size_t j) -> Fq {
      const int k = table[i][j];
      return k < 0 ? 0 : fn[static_cast<std::size_t>(k)];
    };
    // ker fn has basis e_i - fn_i e_pivot; closure means fn kills their products.
    const Fq m_pp = m(pivot, pivot);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == pivot) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == pivot) continue;
        Fq value = m(i, j);
        value = f.sub(value, f.mul(fn[j], m(i, pivot)));
        value = f.sub(value, f.mul(fn[i], m(pivot, j)));
        value = f.add(value, f.mul(f.mul(fn[i], fn[j]), m_pp));
        if (value != 0) return;
      }
    }
    // L(A) = ker g on V; frame columns e_t - g_t e_lead.
    FqMatrix frame(n, n - 1);
    for (std::size_t t = 0, col = 0; t < n; ++t) {
      if (t == lead) continue;
      frame(t, col) = 1;
      frame(lead, col) = f.neg(g[t]);
      ++col;
    }
    FqPoint point;
    for (std::size_t r = 0; r < n; ++r) point.coords.push_back(f.determinant(frame.without_row(r)));
    if (!f.normalize(point.coords)) throw DomainError("rank-deficient frame over F_q");
    out.push_back(std::move(point));
  });
}

std::vector<FqPoint> symbolic_points(const Quiver& q, std::uint32_t p) {
  check_caps(q, p);
  const VariableSet vars(q);
  const std::size_t n = vars.size();
  if (n == 0) throw DomainError("empty variety");
  if (n > kMaxSymbolicVars) {
    throw BudgetError("projective enumeration over " + std::to_string(n) + " coordinates exceeds the cap " +
                      std::to_string(kMaxSymbolicVars));
  }
  if (ipow(p, n) > kMaxCandidates) throw BudgetError("too many projective points");
  const auto generators = ideal_generators(q).all();
  return per_stratum(n, p, [&](const std::vector<Fq>& x, std::vector<FqPoint>& out) {
    for (const auto& g : generators)
      if (g.evaluate_mod(x, p) != 0) return;
    out.push_back({x, {}});
  });
}

std::uint64_t predicted_count(const Quiver& q, std::uint32_t p) {
  const PrimeField f(p);
  const VariableSet vars(q);
  const std::size_t n = vars.size();
  std::vector<std::vector<std::vector<Fq>>> eqs;
  for (const auto& c : components(q)) eqs.push_back(equations_mod(c, n, f));

  std::int64_t total = 0;
  std::vector<std::vector<Fq>> stacked;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int depth) {
    for (std::size_t i = start; i < eqs.size(); ++i) {
      const std::size_t before = stacked.size();
      stacked.insert(stacked.end(), eqs[i].begin(), eqs[i].end());
      const std::size_t dim = n - rank_of_rows(stacked, n, f);
      if (dim > 0) {
        const auto count = static_cast<std::int64_t>(projective_point_count(p, static_cast<std::int64_t>(dim) - 1));
        total += (depth % 2 == 0) ? count : -count;
        dfs(i + 1, depth + 1);
      }
      stacked.resize(before);
    }
  };
  dfs(0, 0);
  return static_cast<std::uint64_t>(total);
}

PointClass classify_point(const std::vector<Fq>& coords, const Quiver& q, std::uint32_t p) {
  const PrimeField f(p);
  const VariableSet vars(q);
  if (coords.size() != vars.size()) throw DomainError("point has the wrong number of coordinates");
  std::set<VertexPair> blocks;
  for (const auto& a : q.arrows())
    if (coords[vars.of_arrow(a.index)] != 0) blocks.insert({a.source, a.target});
  std::vector<VertexId> support;
  for (VertexId v = 1; v < q.vertex_count(); ++v)
    if (coords[vars.of_vertex(v)] != 0) support.push_back(v);

  if (blocks.empty()) {
    if (support.size() == 1) return {PointClass::Kind::Separable, {0, support[0]}};
    if (support.size() == 2) {
      const auto [j, k] = std::pair{support[0], support[1]};
      const Fq expected = f.mul(f.from_int(vertex_relation_sign(j, k)), coords[vars.of_vertex(k)]);
      if (coords[vars.of_vertex(j)] == expected) return {PointClass::Kind::Separable, {j, k}};
    }
    return {};
  }
  if (blocks.size() != 1) return {};
  const VertexPair pair = *blocks.begin();
  for (const auto& c : components(q)) {
    if (c.kind == ComponentDescriptor::Kind::Separable || !(c.vertices == pair)) continue;
    if (satisfies(equations_mod(c, vars.size(), f), coords, f)) return {PointClass::Kind::Split, pair};
  }
  return {};
}

std::string to_string(const PointClass& cls, const Quiver& q) {
  const auto& v = q.vertices();
  switch (cls.kind) {
    case PointClass::Kind::Separable:
      return "Separable{" + v[cls.pair.first].label + "," + v[cls.pair.second].label + "}";
    case PointClass::Kind::Split:
      return "Split(" + v[cls.pair.first].label + "," + v[cls.pair.second].label + ")";
    case PointClass::Kind::Unclassified:
      break;
  }
  return "Unclassified";
}

OracleReport cross_check(const Quiver& q, std::uint32_t p) {
  const PrimeField f(p);
  const VariableSet vars(q);
  const std::size_t n = vars.size();
  OracleReport report;
  report.q = p;
  auto enumerated = enumerate_maximal_subalgebras(q, p, &report.candidate_count);
  const auto symbolic = symbolic_points(q, p);
  report.enumerated_count = enumerated.size();
  report.symbolic_count = symbolic.size();
  report.predicted_count = predicted_count(q, p);

  const auto generators = ideal_generators(q).all();
  std::vector<FqPoint> only_enumerated;
  std::vector<FqPoint> only_symbolic;
  std::set_difference(enumerated.begin(), enumerated.end(), symbolic.begin(), symbolic.end(),
                      std::back_inserter(only_enumerated));
  std::set_difference(symbolic.begin(), symbolic.end(), enumerated.begin(), enumerated.end(),
                      std::back_inserter(only_symbolic));
  for (const auto& pt : only_enumerated) {
    std::string detail = "closed hyperplane outside V(X)";
    for (const auto& g : generators) {
      if (g.evaluate_mod(pt.coords, p) != 0) {
        detail = "generator " + g.to_string(vars.labels()) + " does not vanish";
        break;
      }
    }
    report.witnesses.push_back({"not-symbolic", pt.coords, detail});
  }
  for (const auto& pt : only_symbolic) {
    report.witnesses.push_back({"not-enumerated", pt.coords, "point of V(X) with no closed hyperplane"});
  }
  if (std::adjacent_find(enumerated.begin(), enumerated.end()) != enumerated.end()) {
    report.witnesses.push_back({"count", {}, "two subalgebras share a point"});
  }

  const auto comps = components(q);
  std::vector<std::vector<std::vector<Fq>>> eqs;
  for (const auto& c : comps) {
    eqs.push_back(equations_mod(c, n, f));
    const std::size_t dim = n - rank_of_rows(eqs.back(), n, f);
    report.per_component.push_back(
        {report.per_component.size(), projective_point_count(p, static_cast<std::int64_t>(dim) - 1), 0});
  }
  for (auto& pt : enumerated) {
    pt.cls = classify_point(pt.coords, q, p);
    if (pt.cls.kind == PointClass::Kind::Unclassified) {
      report.witnesses.push_back({"unclassified", pt.coords, "no subalgebra type matches " + coords_text(pt.coords)});
    }
    bool covered = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (satisfies(eqs[i], pt.coords, f)) {
        ++report.per_component[i].observed;
        covered = true;
      }
    }
    if (!covered) report.witnesses.push_back({"off-components", pt.coords, "point lies on no component"});
  }
  for (const auto& tally : report.per_component) {
    if (tally.observed != tally.predicted) {
      report.witnesses.push_back({"count", {},
                                  "component " + std::to_string(tally.component) + ": predicted " +
                                      std::to_string(tally.predicted) + ", observed " +
                                      std::to_string(tally.observed)});
    }
  }
  if (report.enumerated_count != report.symbolic_count || report.enumerated_count != report.predicted_count) {
    report.witnesses.push_back({"count", {},
                                "enumerated " + std::to_string(report.enumerated_count) + ", symbolic " +
                                    std::to_string(report.symbolic_count) + ", predicted " +
                                    std::to_string(report.predicted_count)});
  }
  report.points = std::move(enumerated);
  return report;
}

}  // namespace msa
