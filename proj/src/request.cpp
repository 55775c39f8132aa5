#include "msa/request.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "msa/error.hpp"

namespace msa {

using nlohmann::ordered_json;

namespace {

// ---- JSON ----

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string as_string(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

std::uint64_t as_uint(const ordered_json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Scalar as_scalar(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  return parse_scalar(as_string(v, where), where);
}

GeneratorInput parse_generator(const ordered_json& g, const std::string& where) {
  GeneratorInput out;
  const auto& terms = require(g, "terms", where);
  if (!terms.is_array()) throw ParseError(where + ".terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    TermInput t;
    t.coeff = as_scalar(require(terms[i], "coeff", at), at + ".coeff");
    const auto& path = require(terms[i], "path", at);
    if (!path.is_array() || path.empty()) throw ParseError(at + ".path", "expected a non-empty array of arrow names");
    for (std::size_t k = 0; k < path.size(); ++k) {
      t.path.push_back(as_string(path[k], at + ".path[" + std::to_string(k) + "]"));
    }
    out.terms.push_back(std::move(t));
  }
  if (g.contains("type")) {
    const auto& type = g.at("type");
    if (!type.is_array() || type.size() != 3) throw ParseError(where + ".type", "expected three vertex labels");
    out.type = std::array<std::string, 3>{as_string(type[0], where + ".type[0]"),
                                          as_string(type[1], where + ".type[1]"),
                                          as_string(type[2], where + ".type[2]")};
  }
  return out;
}

// ---- DSL ----

struct Statement {
  std::size_t line;
  std::string text;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Statement> statements(std::string_view text) {
  std::vector<Statement> out;
  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 1;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      comment = false;
      current += ' ';
      continue;
    }
    if (comment) continue;
    if (c == '#') {
      comment = true;
      continue;
    }
    if (c == ';') {
      if (!trim(current).empty()) out.push_back({start_line, trim(current)});
      current.clear();
      start_line = line;
      continue;
    }
    if (trim(current).empty() && !std::isspace(static_cast<unsigned char>(c))) start_line = line;
    current += c;
  }
  if (!trim(current).empty()) throw ParseError("line " + std::to_string(start_line), "statement is missing ';'");
  return out;
}

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && std::string_view("+-*(),;:#").find(c) == std::string_view::npos;
}

GeneratorInput parse_dsl_generator(const std::string& text, const std::string& where) {
  GeneratorInput g;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto label = [&] {
    skip();
    const std::size_t b = i;
    while (i < text.size() && is_label_char(text[i])) ++i;
    if (b == i) throw ParseError(where, "expected an arrow name in '" + text + "'");
    return text.substr(b, i - b);
  };
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError(where, "expected '+' or '-' between terms in '" + text + "'");
    }
    TermInput term;
    term.coeff = sign;
    if (i < text.size() && text[i] == '(') {
      const auto close = text.find(')', i);
      if (close == std::string::npos) throw ParseError(where, "unbalanced '(' in '" + text + "'");
      term.coeff *= parse_scalar(text.substr(i + 1, close - i - 1), where);
      i = close + 1;
    }
    term.path.push_back(label());
    skip();
    while (i < text.size() && text[i] == '*') {
      ++i;
      term.path.push_back(label());
      skip();
    }
    g.terms.push_back(std::move(term));
    first = false;
  }
  if (g.terms.empty()) throw ParseError(where, "empty generator");
  return g;
}

}  // namespace

AnalysisRequest parse_json_request(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  if (!doc.is_object()) throw ParseError("json", "top level must be an object");
  if (doc.contains("schema") && doc.at("schema") != kSchemaVersion) {
    throw ParseError("schema", std::string("unsupported schema, expected ") + kSchemaVersion);
  }
  AnalysisRequest req;
  const auto& quiver = require(doc, "quiver", "");
  const auto& vertices = require(quiver, "vertices", "quiver");
  if (!vertices.is_array()) throw ParseError("quiver.vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    req.vertices.push_back(as_string(vertices[i], "quiver.vertices[" + std::to_string(i) + "]"));
  }
  if (quiver.contains("arrows")) {
    const auto& arrows = quiver.at("arrows");
    if (!arrows.is_array()) throw ParseError("quiver.arrows", "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string at = "quiver.arrows[" + std::to_string(i) + "]";
      req.arrows.push_back({as_string(require(arrows[i], "name", at), at + ".name"),
                            as_string(require(arrows[i], "source", at), at + ".source"),
                            as_string(require(arrows[i], "target", at), at + ".target")});
    }
  }
  if (doc.contains("ideal") && !doc.at("ideal").is_null()) {
    const auto& gens = require(doc.at("ideal"), "generators", "ideal");
    if (!gens.is_array()) throw ParseError("ideal.generators", "expected an array");
    req.ideal.emplace();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      req.ideal->push_back(parse_generator(gens[i], "ideal.generators[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("options")) {
    const auto& o = doc.at("options");
    if (!o.is_object()) throw ParseError("options", "expected an object");
    if (o.contains("basepoint") && !o.at("basepoint").is_null()) {
      const auto label = as_string(o.at("basepoint"), "options.basepoint");
      if (label != "auto") req.options.basepoint = label;
    }
    if (o.contains("seed")) req.options.seed = as_uint(o.at("seed"), "options.seed");
    if (o.contains("samples")) req.options.samples = as_uint(o.at("samples"), "options.samples");
    if (o.contains("degree_cap")) req.options.degree_cap = as_uint(o.at("degree_cap"), "options.degree_cap");
    if (o.contains("oracle_chars")) {
      const auto& chars = o.at("oracle_chars");
      if (!chars.is_array()) throw ParseError("options.oracle_chars", "expected an array");
      req.options.oracle_chars.clear();
      for (std::size_t i = 0; i < chars.size(); ++i) {
        req.options.oracle_chars.push_back(
            static_cast<std::uint32_t>(as_uint(chars[i], "options.oracle_chars[" + std::to_string(i) + "]")));
      }
    }
  }
  return req;
}

AnalysisRequest parse_dsl_request(std::string_view text) {
  AnalysisRequest req;
  bool seen_vertices = false;
  for (const auto& st : statements(text)) {
    const std::string where = "line " + std::to_string(st.line);
    const auto space = std::find_if(st.text.begin(), st.text.end(),
                                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    const std::string keyword(st.text.begin(), space);
    const std::string rest = trim(std::string(space, st.text.end()));
    if (keyword == "vertices") {
      if (seen_vertices) throw ParseError(where, "vertices declared twice");
      seen_vertices = true;
      req.vertices = words(rest);
    } else if (keyword == "arrows") {
      if (rest.empty()) continue;
      for (const auto& item : split(rest, ',')) {
        const auto colon = item.find(':');
        const auto arrow = item.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
          throw ParseError(where, "expected 'name: source->target', got '" + item + "'");
        }
        ArrowInput a{trim(item.substr(0, colon)), trim(item.substr(colon + 1, arrow - colon - 1)),
                     trim(item.substr(arrow + 2))};
        if (a.name.empty() || a.source.empty() || a.target.empty()) {
          throw ParseError(where, "incomplete arrow '" + item + "'");
        }
        req.arrows.push_back(std::move(a));
      }
    } else if (keyword == "ideal") {
      if (!req.ideal) req.ideal.emplace();
      if (rest.empty()) continue;
      for (const auto& item : split(rest, ',')) req.ideal->push_back(parse_dsl_generator(item, where));
    } else {
      throw ParseError(where, "unknown statement '" + keyword + "'");
    }
  }
  if (!seen_vertices) throw ParseError("line 1", "missing 'vertices' statement");
  return req;
}

AnalysisRequest parse_request(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return parse_json_request(text);
  return parse_dsl_request(text);
}

ordered_json to_json(const AnalysisRequest& request) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  ordered_json arrows = ordered_json::array();
  for (const auto& a : request.arrows) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  doc["quiver"] = {{"vertices", request.vertices}, {"arrows", arrows}};
  if (request.ideal) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : *request.ideal) {
      ordered_json terms = ordered_json::array();
      for (const auto& t : g.terms) terms.push_back({{"coeff", to_string(t.coeff)}, {"path", t.path}});
      ordered_json gen = {{"terms", terms}};
      if (g.type) gen["type"] = *g.type;
      gens.push_back(std::move(gen));
    }
    doc["ideal"] = {{"generators", gens}};
  }
  const auto& o = request.options;
  doc["options"] = {{"basepoint", o.basepoint ? ordered_json(*o.basepoint) : ordered_json("auto")},
                    {"seed", o.seed},
                    {"samples", o.samples},
                    {"oracle_chars", o.oracle_chars},
                    {"degree_cap", o.degree_cap}};
  return doc;
}

NormalizedInput normalize(const AnalysisRequest& request) {
  NormalizedInput out;
  std::map<std::string, std::size_t> vertex_pos;
  std::set<std::string> names;
  for (std::size_t i = 0; i < request.vertices.size(); ++i) {
    const auto& label = request.vertices[i];
    if (!names.insert(label).second) throw ParseError("quiver.vertices[" + std::to_string(i) + "]", "duplicate label '" + label + "'");
    vertex_pos[label] = i;
  }
  if (request.vertices.empty()) throw ParseError("quiver.vertices", "a quiver needs at least one vertex");
  std::vector<bool> looped(request.vertices.size(), false);
  for (std::size_t i = 0; i < request.arrows.size(); ++i) {
    const auto& a = request.arrows[i];
    const std::string at = "quiver.arrows[" + std::to_string(i) + "]";
    if (!names.insert(a.name).second) throw ParseError(at + ".name", "duplicate label '" + a.name + "'");
    if (!vertex_pos.contains(a.source)) throw ParseError(at + ".source", "unknown vertex '" + a.source + "'");
    if (!vertex_pos.contains(a.target)) throw ParseError(at + ".target", "unknown vertex '" + a.target + "'");
    if (a.source == a.target) looped[vertex_pos[a.source]] = true;
  }

  std::size_t base = 0;
  if (request.options.basepoint) {
    const auto it = vertex_pos.find(*request.options.basepoint);
    if (it == vertex_pos.end()) {
      throw ParseError("options.basepoint", "unknown vertex '" + *request.options.basepoint + "'");
    }
    base = it->second;
    if (looped[base]) out.warnings.push_back("basepoint " + it->first + " carries a loop");
  } else {
    const auto free = std::find(looped.begin(), looped.end(), false);
    if (free == looped.end()) {
      out.warnings.push_back("every vertex carries a loop; basepoint " + request.vertices[0] + " carries a loop");
    } else {
      base = static_cast<std::size_t>(free - looped.begin());
    }
  }
  if (base != 0) {
    out.warnings.push_back("basepoint " + request.vertices[base] + " moved to the front; vertex indices relabeled");
  }
  out.vertex_order.push_back(base);
  for (std::size_t i = 0; i < request.vertices.size(); ++i)
    if (i != base) out.vertex_order.push_back(i);

  out.request.options = request.options;
  out.request.options.basepoint = request.vertices[base];
  std::map<std::string, VertexId> index_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.vertex_order.size(); ++i) {
    labels.push_back(request.vertices[out.vertex_order[i]]);
    index_of[labels.back()] = i;
  }
  out.request.vertices = labels;

  std::vector<Quiver::ArrowSpec> specs;
  for (const auto& a : request.arrows) specs.push_back({a.name, index_of.at(a.source), index_of.at(a.target)});
  out.quiver = Quiver::with_sorted_arrows(labels, specs, &out.arrow_order);
  for (auto pos : out.arrow_order) out.request.arrows.push_back(request.arrows[pos]);
  bool reordered = false;
  for (std::size_t i = 0; i < out.arrow_order.size(); ++i) reordered = reordered || out.arrow_order[i] != i;
  if (reordered) out.warnings.push_back("arrows reordered into (source,target) blocks");

  if (request.ideal) {
    out.request.ideal = request.ideal;
    IdealSpec spec;
    for (std::size_t i = 0; i < request.ideal->size(); ++i) {
      const auto& g = (*request.ideal)[i];
      const std::string at = "ideal.generators[" + std::to_string(i) + "]";
      AlgebraElement x;
      for (std::size_t t = 0; t < g.terms.size(); ++t) {
        std::vector<std::size_t> arrows;
        for (const auto& name : g.terms[t].path) {
          const auto idx = out.quiver.find_arrow(name);
          if (!idx) throw ParseError(at + ".terms[" + std::to_string(t) + "]", "unknown arrow '" + name + "'");
          arrows.push_back(*idx);
        }
        try {
          x.add_term(make_path(out.quiver, arrows), g.terms[t].coeff);
        } catch (const DomainError& e) {
          throw ParseError(at + ".terms[" + std::to_string(t) + "]", e.what());
        }
      }
      if (g.type) {
        VertexTriple triple{};
        VertexId* slots[3] = {&triple.u, &triple.v, &triple.w};
        for (std::size_t k = 0; k < 3; ++k) {
          const auto it = index_of.find((*g.type)[k]);
          if (it == index_of.end()) throw ParseError(at + ".type", "unknown vertex '" + (*g.type)[k] + "'");
          *slots[k] = it->second;
        }
        spec.declared_types[i] = triple;
      }
      spec.generators.push_back(std::move(x));
    }
    out.ideal = std::move(spec);
  }
  return out;
}

}  // namespace msa
