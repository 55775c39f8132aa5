#include "msa/report.hpp"

#include <sstream>

#include "msa/error.hpp"
#include "msa/ff_oracle.hpp"
#include "msa/orbits.hpp"
#include "msa/variety.hpp"

namespace msa {

using nlohmann::ordered_json;

namespace {

struct Context {
  const NormalizedInput& input;
  std::ostringstream text;
  ordered_json report;
  int exit_code = kExitOk;

  const Quiver& q() const { return input.quiver; }
  const std::string& label(VertexId v) const { return q().vertices()[v].label; }
  ordered_json pair(VertexPair p) const { return ordered_json::array({label(p.first), label(p.second)}); }
  std::string pair_text(VertexPair p) const { return "(" + label(p.first) + "," + label(p.second) + ")"; }
};

ordered_json matrix_json(const ScalarMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string component_kind(ComponentDescriptor::Kind k) {
  switch (k) {
    case ComponentDescriptor::Kind::Separable: return "Separable";
    case ComponentDescriptor::Kind::SplitPair: return "SplitPair";
    case ComponentDescriptor::Kind::SplitLoop: return "SplitLoop";
  }
  return "";
}

std::string reason_text(IrreducibilityVerdict::Reason r) {
  switch (r) {
    case IrreducibilityVerdict::Reason::Kronecker: return "Kronecker";
    case IrreducibilityVerdict::Reason::Loop: return "Loop";
    case IrreducibilityVerdict::Reason::TwoIsolated: return "TwoIsolated";
    case IrreducibilityVerdict::Reason::None: return "None";
  }
  return "";
}

bool empty_variety(const Quiver& q) { return q.vertex_count() + q.arrow_count() < 2; }

void quiver_section(Context& ctx) {
  const auto& in = ctx.input;
  ordered_json arrows = ordered_json::array();
  for (const auto& a : ctx.q().arrows()) {
    arrows.push_back({{"index", a.index}, {"name", a.label}, {"source", ctx.label(a.source)},
                      {"target", ctx.label(a.target)}});
  }
  ctx.report["quiver"] = {{"vertices", in.request.vertices},
                          {"basepoint", ctx.label(0)},
                          {"arrows", arrows},
                          {"input_vertex_order", in.vertex_order},
                          {"input_arrow_order", in.arrow_order}};
  ctx.text << "quiver: " << ctx.q().vertex_count() << " vertices, " << ctx.q().arrow_count()
           << " arrows, basepoint " << ctx.label(0) << "\n";
}

void ideal_section(Context& ctx) {
  const VariableSet vars(ctx.q());
  const auto gens = ideal_generators(ctx.q());
  auto dump = [&](const std::vector<Polynomial>& ps) {
    ordered_json out = ordered_json::array();
    for (const auto& p : ps) out.push_back(p.to_string(vars.labels()));
    return out;
  };
  ctx.report["generators"] = {{"variables", vars.labels()},
                              {"count", gens.size()},
                              {"x0", dump(gens.x0)},
                              {"x_half", dump(gens.x_half)},
                              {"x1", dump(gens.x1)}};
  ctx.text << "generators (" << gens.size() << "):\n";
  for (const auto& p : gens.all()) ctx.text << "  " << p.to_string(vars.labels()) << "\n";
}

void components_section(Context& ctx) {
  if (empty_variety(ctx.q())) {
    ctx.report["components"] = ordered_json::array();
    ctx.report["empty_variety"] = true;
    ctx.text << "variety is empty: the only subalgebra of codimension 1 would be 0\n";
    return;
  }
  const VariableSet vars(ctx.q());
  const auto comps = components(ctx.q());
  ordered_json list = ordered_json::array();
  ctx.text << "components (" << comps.size() << "):\n";
  for (const auto& c : comps) {
    ordered_json allowed = ordered_json::array();
    for (auto i : c.allowed_vars) allowed.push_back(vars.labels()[i]);
    ordered_json constraints = ordered_json::array();
    for (const auto& f : c.linear_constraints) constraints.push_back(f.to_string(vars.labels()));
    list.push_back({{"kind", component_kind(c.kind)},
                    {"vertices", ctx.pair(c.vertices)},
                    {"dimension", c.dimension},
                    {"coordinates", allowed},
                    {"constraints", constraints}});
    ctx.text << "  " << component_kind(c.kind) << ctx.pair_text(c.vertices) << " dim " << c.dimension << "\n";
  }
  ctx.report["components"] = list;
  const auto dim = msa_dimension(ctx.q());
  const auto irr = is_irreducible(ctx.q());
  ctx.report["dimension"] = dim;
  ctx.report["irreducibility"] = {{"irreducible", irr.irreducible},
                                  {"reason", reason_text(irr.reason)},
                                  {"m", irr.m},
                                  {"component_count", irr.component_count}};
  ctx.text << "dimension: " << dim << "\n";
  if (irr.irreducible) {
    ctx.text << "irreducible: yes (" << reason_text(irr.reason) << (irr.m ? " m=" + std::to_string(irr.m) : "")
             << ")\n";
  } else {
    ctx.text << "irreducible: no, Reducible(" << irr.component_count << ")\n";
  }

  const auto& o = ctx.input.request.options;
  const auto vanishing = verify_vanishing(ctx.q(), o.samples, o.seed);
  ordered_json violations = ordered_json::array();
  for (const auto& v : vanishing.violations) {
    ordered_json point = ordered_json::array();
    for (const auto& x : v.point) point.push_back(to_string(x));
    violations.push_back({{"generator", v.generator}, {"frame", v.frame}, {"point", point},
                          {"value", to_string(v.value)}});
  }
  ctx.report["vanishing"] = {{"samples", o.samples},
                             {"seed", o.seed},
                             {"frames", vanishing.frame_count},
                             {"evaluations", vanishing.evaluations},
                             {"violations", violations}};
  ctx.text << "vanishing check: " << vanishing.frame_count << " frames, " << vanishing.violations.size()
           << " violations\n";
  if (!vanishing.violations.empty()) ctx.exit_code = kExitMismatch;
}

void orbits_section(Context& ctx) {
  const auto report = orbit_classes(ctx.q());
  auto dump = [&](const std::vector<PairOrbit>& orbits) {
    ordered_json out = ordered_json::array();
    for (const auto& o : orbits) {
      ordered_json members = ordered_json::array();
      for (const auto& m : o.members) members.push_back(ctx.pair(m));
      out.push_back({{"representative", ctx.pair(o.representative)}, {"members", members}});
    }
    return out;
  };
  ctx.report["orbits"] = {{"split_orbit_classes", dump(report.split_orbit_classes)},
                          {"separable_orbit_classes", dump(report.separable_orbit_classes)},
                          {"aut_dims",
                           {{"inn_star_dim", report.aut_dims.inn_star_dim},
                            {"g_dim", report.aut_dims.g_dim},
                            {"sq_order", report.aut_dims.sq_order}}}};
  ctx.text << "orbits: " << report.split_orbit_classes.size() << " split classes, "
           << report.separable_orbit_classes.size() << " separable classes\n";
  for (const auto& o : report.split_orbit_classes) {
    ctx.text << "  split " << ctx.pair_text(o.representative) << " (" << o.members.size() << " members)\n";
  }
  for (const auto& o : report.separable_orbit_classes) {
    ctx.text << "  separable {" << ctx.label(o.representative.first) << "," << ctx.label(o.representative.second)
             << "} (" << o.members.size() << " members)\n";
  }
  ctx.text << "aut dims: inn* " << report.aut_dims.inn_star_dim << ", G " << report.aut_dims.g_dim << ", |S_Q| "
           << report.aut_dims.sq_order << "\n";
}

void finite_orbit_section(Context& ctx, std::vector<std::string>& warnings) {
  IdealSpec ideal;
  if (ctx.input.ideal) {
    ideal = *ctx.input.ideal;
  } else {
    // Without an ideal the algebra is T_2Q itself: I = J^2.
    for (const auto& p : paths_of_length(ctx.q(), 2)) ideal.generators.push_back(AlgebraElement::of_path(p));
    warnings.push_back("no ideal given; finite-orbit criteria use I = J^2");
  }
  const auto verdict = finite_orbit_check(ctx.q(), ideal, std::nullopt, ctx.input.request.options.degree_cap);
  ordered_json out = {{"verdict", verdict.yes() ? "Yes" : "Unknown"},
                      {"witness", verdict.yes() ? ordered_json(to_string(verdict.kind)) : ordered_json(nullptr)},
                      {"ell", verdict.ell},
                      {"revalidated", verdict.yes() && revalidate(verdict, ctx.q(), ideal)},
                      {"reasons", verdict.reasons}};
  if (verdict.kind == FiniteOrbitVerdict::Kind::R2FOP) {
    const auto& rep = *verdict.rep;
    ordered_json phi = ordered_json::array();
    for (std::size_t i = 0; i < rep.r2.pairs.size(); ++i) {
      phi.push_back({{"pair", ctx.pair(rep.r2.pairs[i])}, {"matrix", matrix_json(verdict.phi->blocks[i])}});
    }
    ordered_json maps = ordered_json::array();
    for (std::size_t i = 0; i < rep.r2.arrows.size(); ++i) {
      const auto& a = rep.r2.arrows[i];
      maps.push_back({{"source", ctx.pair({a.u, a.v})}, {"target", ctx.pair({a.v, a.w})},
                      {"matrix", matrix_json(rep.maps[i])}});
    }
    out["phi"] = phi;
    out["representation"] = maps;
    out["phi_is_identity"] = verdict.phi->blocks == OrthogonalFamily::identity(rep).blocks;
  }
  if (verdict.kind == FiniteOrbitVerdict::Kind::R2FOP || verdict.kind == FiniteOrbitVerdict::Kind::Unknown) {
    warnings.push_back("r2-quiver arrows join (u,v) to (v,w) exactly when the pairs compose");
  }
  ctx.report["finite_orbit"] = out;
  ctx.text << "finite orbits: " << (verdict.yes() ? "Yes(" + to_string(verdict.kind) + ")" : "Unknown");
  if (verdict.kind == FiniteOrbitVerdict::Kind::R2FOP) {
    ctx.text << (out["phi_is_identity"].get<bool>() ? " with identity phi" : " with rational orthogonal phi");
  }
  ctx.text << "\n";
  for (const auto& r : verdict.reasons) ctx.text << "  " << r << "\n";
}

void oracle_section(Context& ctx) {
  const VariableSet vars(ctx.q());
  ordered_json all = ordered_json::array();
  for (const auto p : ctx.input.request.options.oracle_chars) {
    const auto r = cross_check(ctx.q(), p);
    ordered_json tallies = ordered_json::array();
    for (const auto& t : r.per_component) {
      tallies.push_back({{"component", t.component}, {"predicted", t.predicted}, {"observed", t.observed}});
    }
    ordered_json points = ordered_json::array();
    for (const auto& pt : r.points) points.push_back({{"coords", pt.coords}, {"class", to_string(pt.cls, ctx.q())}});
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : r.witnesses) witnesses.push_back({{"kind", w.kind}, {"coords", w.coords}, {"detail", w.detail}});
    all.push_back({{"q", p},
                   {"candidates", r.candidate_count},
                   {"enumerated_count", r.enumerated_count},
                   {"symbolic_count", r.symbolic_count},
                   {"predicted_count", r.predicted_count},
                   {"per_component", tallies},
                   {"points", points},
                   {"witnesses", witnesses},
                   {"ok", r.ok()}});
    ctx.text << "oracle F_" << p << ": enumerated " << r.enumerated_count << ", symbolic " << r.symbolic_count
             << ", predicted " << r.predicted_count << (r.ok() ? ", agree\n" : ", MISMATCH\n");
    for (const auto& w : r.witnesses) ctx.text << "  " << w.kind << ": " << w.detail << "\n";
    if (!r.ok()) ctx.exit_code = kExitMismatch;
  }
  ctx.report["oracle"] = all;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Ideal: return "ideal";
    case Command::Components: return "components";
    case Command::Orbits: return "orbits";
    case Command::FiniteOrbit: return "finite-orbit";
    case Command::Oracle: return "oracle";
    case Command::Analyze: return "analyze";
  }
  return "";
}

RunOutcome run(Command command, const AnalysisRequest& request) {
  const NormalizedInput input = normalize(request);
  Context ctx{input, {}, {}, kExitOk};
  std::vector<std::string> warnings = input.warnings;
  ctx.report["schema"] = kSchemaVersion;
  ctx.report["command"] = to_string(command);
  quiver_section(ctx);
  const bool all = command == Command::Analyze;
  if (all || command == Command::Ideal) ideal_section(ctx);
  if (all || command == Command::Components) components_section(ctx);
  if (all || command == Command::Orbits) orbits_section(ctx);
  if (all || command == Command::FiniteOrbit) finite_orbit_section(ctx, warnings);
  if (all || command == Command::Oracle) oracle_section(ctx);
  ctx.report["warnings"] = warnings;
  for (const auto& w : warnings) ctx.text << "warning: " << w << "\n";
  return {std::move(ctx.report), ctx.text.str(), ctx.exit_code};
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const BudgetError*>(&e)) return kExitBudget;
  return kExitDomain;
}

}  // namespace msa
