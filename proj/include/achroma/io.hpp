#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "achroma/bounds.hpp"
#include "achroma/coloring.hpp"
#include "achroma/constructions.hpp"
#include "achroma/decompositions.hpp"
#include "achroma/embedding.hpp"
#include "achroma/girth.hpp"
#include "achroma/graph.hpp"
#include "achroma/planarity.hpp"
#include "achroma/verification.hpp"

namespace achroma {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json label_to_json(const VertexLabel& l) {
  return json{{"family", std::string(family_tag(l.family))}, {"index", l.index}};
}

inline json graph_to_json(const Graph& g, const Coloring* c = nullptr, const RotationSystem* rs = nullptr) {
  json doc;
  doc["schema"] = kSchemaVersion;
  json vs = json::array();
  for (const auto& l : g.labels()) vs.push_back(label_to_json(l));
  doc["vertices"] = vs;
  json es = json::array();
  for (auto [a, b] : g.edges()) es.push_back({a, b});
  doc["edges"] = es;
  if (c) {
    json col = json::object();
    for (std::size_t v = 0; v < c->size(); ++v) col[std::to_string(v)] = (*c)[static_cast<VertexId>(v)];
    doc["coloring"] = col;
  }
  if (rs) doc["rotation"] = rs->rotation;
  return doc;
}

struct GraphDocument {
  Graph graph;
  std::optional<Coloring> coloring;
  std::optional<RotationSystem> rotation;
  json raw;
};

inline GraphDocument graph_from_json(const json& doc) {
  auto fail = [](const std::string& what) { return Error(ErrorCode::ParseError, what); };
  if (!doc.is_object()) throw fail("document is not an object");
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion) throw fail("unsupported schema version");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw fail("missing vertices array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw fail("missing edges array");
  std::vector<VertexLabel> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("family") || !v.contains("index")) throw fail("bad vertex entry");
    if (!v["family"].is_string() || !v["index"].is_number_integer()) throw fail("bad vertex entry");
    auto f = parse_family(v["family"].get<std::string>());
    if (!f) throw fail("unknown family " + v["family"].get<std::string>());
    int idx = v["index"].get<int>();
    if (idx < 0) throw fail("negative vertex index");
    labels.push_back({*f, idx});
  }
  std::vector<Edge> es;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw fail("bad edge entry");
    es.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  GraphDocument out;
  out.graph = Graph::from_ids(labels, es);
  if (doc.contains("coloring")) {
    const auto& col = doc["coloring"];
    if (!col.is_object()) throw fail("coloring must be an object");
    std::vector<int> colors(out.graph.n(), -1);
    for (auto it = col.begin(); it != col.end(); ++it) {
      std::size_t pos = 0;
      long v = -1;
      try {
        v = std::stol(it.key(), &pos);
      } catch (const std::exception&) {
        throw fail("bad coloring key " + it.key());
      }
      if (pos != it.key().size() || v < 0 || v >= static_cast<long>(colors.size()))
        throw Error(ErrorCode::DomainMismatch, "coloring key " + it.key() + " outside vertex range");
      if (!it.value().is_number_integer()) throw fail("color must be an integer");
      colors[v] = it.value().get<int>();
    }
    for (int c : colors)
      if (c < 0) throw Error(ErrorCode::DomainMismatch, "coloring does not cover every vertex");
    out.coloring = Coloring(colors);
  }
  if (doc.contains("rotation")) {
    RotationSystem rs;
    try {
      rs.rotation = doc["rotation"].get<std::vector<std::vector<VertexId>>>();
    } catch (const json::exception&) {
      throw fail("bad rotation entry");
    }
    out.rotation = std::move(rs);
  }
  out.raw = doc;
  return out;
}

// Class bound that a construction of this kind saturates.
inline std::optional<long> kind_bound(ConstructionKind kind, std::size_t n, int euler_genus = 0) {
  const auto nn = static_cast<long long>(n);
  switch (kind) {
    case ConstructionKind::planar_optimal: return eq3_bound(nn);
    case ConstructionKind::outerplanar_optimal: return eq4_bound(nn);
    case ConstructionKind::girth4_optimal:
    case ConstructionKind::k2_bipartite: return eq5_bound(nn);
    case ConstructionKind::surface: return surface_bound(nn, euler_genus);
    case ConstructionKind::padded: return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<ConstructionKind> parse_construction_kind(const std::string& s) {
  for (auto k : {ConstructionKind::planar_optimal, ConstructionKind::outerplanar_optimal,
                 ConstructionKind::girth4_optimal, ConstructionKind::padded, ConstructionKind::k2_bipartite,
                 ConstructionKind::surface})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

inline std::optional<std::string> class_of(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::planar_optimal: return "planar";
    case ConstructionKind::outerplanar_optimal: return "outerplanar";
    case ConstructionKind::girth4_optimal:
    case ConstructionKind::k2_bipartite: return "girth4";
    default: return std::nullopt;
  }
}

inline std::optional<long> construction_bound(const ColoredConstruction& c) {
  auto kind = c.kind == ConstructionKind::padded ? c.base_kind : c.kind;
  if (kind == ConstructionKind::padded) return std::nullopt;
  return kind_bound(kind, c.graph.n(), c.surface ? c.surface->euler_genus() : 0);
}

inline json construction_to_json(const ColoredConstruction& c) {
  auto doc = graph_to_json(c.graph, &c.coloring, c.rotation ? &*c.rotation : nullptr);
  doc["kind"] = std::string(to_string(c.kind));
  doc["base_kind"] = std::string(to_string(c.base_kind));
  doc["t"] = c.t;
  json labels = json::array();
  for (const auto& l : c.color_labels) labels.push_back(l.name());
  doc["color_labels"] = labels;
  doc["claimed_psi"] = c.claimed_psi;
  if (c.claimed_psi_s) doc["claimed_psi_s"] = *c.claimed_psi_s;
  if (auto cls = class_of(c.base_kind)) doc["class"] = *cls;
  if (c.surface) {
    doc["surface"] = {{"orientable", c.surface->orientable},
                      {"handles", c.surface->handles},
                      {"crosscaps", c.surface->crosscaps},
                      {"euler_genus", c.surface->euler_genus()},
                      {"phi", c.surface->phi()}};
  }
  json v;
  v["proper"] = is_proper(c.graph, c.coloring);
  v["complete"] = is_complete(c.graph, c.coloring);
  v["k"] = c.coloring.k();
  v["n"] = c.graph.n();
  v["m"] = c.graph.m();
  auto b = construction_bound(c);
  v["bound"] = b ? json(*b) : json(nullptr);
  doc["verification"] = v;
  return doc;
}

inline json decomposition_to_json(const Decomposition& d) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = std::string(to_string(d.kind));
  doc["t"] = d.t;
  doc["with_z"] = d.with_z;
  doc["host"] = graph_to_json(d.host);
  json parts = json::array();
  for (const auto& p : d.parts) parts.push_back(graph_to_json(p.graph, nullptr, p.rotation ? &*p.rotation : nullptr));
  doc["parts"] = parts;
  return doc;
}

inline json audit_to_json(const AuditReport& r) {
  json doc;
  doc["kind"] = std::string(to_string(r.kind));
  doc["host_n"] = r.host_n;
  doc["disjoint"] = r.disjoint;
  doc["covers"] = r.covers;
  doc["part_count"] = r.part_count;
  doc["lower_bound"] = r.lower_bound;
  doc["count_ok"] = r.count_ok;
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"size", p.size},
                     {"expected_size", p.expected_size},
                     {"size_ok", p.size_ok},
                     {"certificate_ok", p.certificate_ok},
                     {"oracle_ok", p.oracle_ok},
                     {"class_ok", p.class_ok}});
  doc["parts"] = parts;
  doc["failures"] = r.failures;
  doc["passed"] = r.passed();
  return doc;
}

// Recomputes every property a document claims; checks maps check name -> verdict.
struct DocumentVerification {
  std::map<std::string, bool> checks;
  json block;

  bool passed() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& [name, ok] : checks)
      if (!ok) out.push_back(name);
    return out;
  }
};

inline DocumentVerification verify_document(const json& doc, bool require_coloring) {
  DocumentVerification out;
  GraphDocument gd;
  try {
    gd = graph_from_json(doc);
  } catch (const Error& e) {
    out.checks["schema"] = false;
    out.block["error"] = e.what();
    return out;
  }
  out.checks["schema"] = true;
  const auto& g = gd.graph;
  out.block["n"] = g.n();
  out.block["m"] = g.m();
  out.block["bounds"] = {{"eq2", eq2_bound(static_cast<long long>(g.m()))}};

  if (require_coloring && !gd.coloring) out.checks["coloring-present"] = false;
  if (gd.coloring) {
    bool proper = is_proper(g, *gd.coloring);
    bool complete = is_complete(g, *gd.coloring);
    out.block["proper"] = proper;
    out.block["complete"] = complete;
    out.block["k"] = gd.coloring->k();
    if (require_coloring) {
      out.checks["proper"] = proper;
      out.checks["complete"] = complete;
    }
    if (complete) out.checks["eq2"] = static_cast<long>(gd.coloring->k()) <= eq2_bound(static_cast<long long>(g.m()));
  }

  std::optional<ConstructionKind> kind;
  if (doc.contains("base_kind") && doc["base_kind"].is_string()) kind = parse_construction_kind(doc["base_kind"]);
  int eps = 0;
  if (doc.contains("surface") && doc["surface"].contains("euler_genus")) eps = doc["surface"]["euler_genus"].get<int>();
  std::optional<long> bound;
  const bool padded = doc.value("kind", "") == "padded";
  if (kind) bound = kind_bound(*kind, g.n(), eps);
  out.block["bound"] = bound ? json(*bound) : json(nullptr);

  if (doc.contains("verification") && doc["verification"].is_object()) {
    for (auto it = doc["verification"].begin(); it != doc["verification"].end(); ++it) {
      const auto& key = it.key();
      if (!out.block.contains(key)) {
        out.checks["claim:" + key] = false;
        continue;
      }
      out.checks["claim:" + key] = out.block[key] == it.value();
    }
    if (out.block.contains("proper")) out.checks["proper"] = out.block["proper"].get<bool>();
    if (out.block.contains("complete")) out.checks["complete"] = out.block["complete"].get<bool>();
    if (bound && gd.coloring) {
      const long k = static_cast<long>(gd.coloring->k());
      const bool saturates = !padded && (*kind == ConstructionKind::planar_optimal ||
                                         *kind == ConstructionKind::outerplanar_optimal ||
                                         *kind == ConstructionKind::girth4_optimal);
      if (saturates) out.checks["k=bound"] = k == *bound;
      else out.checks["k<=bound"] = k <= *bound;
    }
  }

  std::string cls = doc.contains("class") && doc["class"].is_string() ? doc["class"].get<std::string>() : "";
  if (gd.rotation) {
    bool ok = cls == "outerplanar" ? certifies_outerplanar(g, *gd.rotation) : certifies_planar(g, *gd.rotation);
    out.checks["certificate"] = ok;
  }
  if (cls == "planar") {
    out.checks["planar"] = is_planar(g).planar;
  } else if (cls == "outerplanar") {
    out.checks["outerplanar"] = is_outerplanar(g);
  } else if (cls == "girth4") {
    out.checks["planar"] = is_planar(g).planar;
    out.checks["girth>=4"] = girth(g) >= 4 && !has_triangle(g);
  }
  out.block["checks"] = out.checks;
  out.block["passed"] = out.passed();
  return out;
}

// DOT export: node ids "<family><index>", integer color as attribute "colorid".
inline std::string to_dot(const Graph& g, const Coloring* c = nullptr, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) {
    os << "  " << g.label(v).name();
    if (c) os << " [colorid=" << (*c)[v] << "]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << g.label(a).name() << " -- " << g.label(b).name() << ";\n";
  os << "}\n";
  return os.str();
}

namespace detail {

struct DotToken {
  enum Kind { id, punct, edgeop, end } kind;
  std::string text;
};

inline std::vector<DotToken> dot_tokens(const std::string& src) {
  std::vector<DotToken> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::ParseError, "dot: " + what + " at offset " + std::to_string(i));
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (src.compare(i, 2, "//") == 0 || c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (src.compare(i, 2, "/*") == 0) {
      auto e = src.find("*/", i + 2);
      if (e == std::string::npos) throw fail("unterminated comment");
      i = e + 2;
    } else if (src.compare(i, 2, "--") == 0) {
      out.push_back({DotToken::edgeop, "--"});
      i += 2;
    } else if (src.compare(i, 2, "->") == 0) {
      throw fail("directed edge in undirected graph");
    } else if (std::string_view("{}[]=;,").find(c) != std::string_view::npos) {
      out.push_back({DotToken::punct, std::string(1, c)});
      ++i;
    } else if (c == '"') {
      std::string s;
      ++i;
      while (i < src.size() && src[i] != '"') {
        if (src[i] == '\\' && i + 1 < src.size()) ++i;
        s += src[i++];
      }
      if (i >= src.size()) throw fail("unterminated string");
      ++i;
      out.push_back({DotToken::id, s});
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::string s;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' || src[i] == '.' ||
                                (src[i] == '-' && s.empty())))
        s += src[i++];
      out.push_back({DotToken::id, s});
    } else {
      throw fail(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({DotToken::end, ""});
  return out;
}

inline std::optional<VertexLabel> parse_label_name(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t p = 0;
  Family f = Family::plain;
  if (std::isalpha(static_cast<unsigned char>(s[0]))) {
    auto pf = parse_family(s.substr(0, 1));
    if (!pf || *pf == Family::plain) return std::nullopt;
    f = *pf;
    p = 1;
  }
  if (p >= s.size()) return std::nullopt;
  for (std::size_t q = p; q < s.size(); ++q)
    if (!std::isdigit(static_cast<unsigned char>(s[q]))) return std::nullopt;
  if (s.size() - p > 9) return std::nullopt;
  return VertexLabel{f, std::stoi(s.substr(p))};
}

}  // namespace detail

// Reads the undirected subset of DOT that to_dot writes: node and edge statements,
// attribute lists, graph-level attributes ignored. Color comes from "colorid".
inline GraphDocument graph_from_dot(const std::string& src) {
  using detail::DotToken;
  auto toks = detail::dot_tokens(src);
  std::size_t p = 0;
  auto fail = [](const std::string& what) { return Error(ErrorCode::ParseError, "dot: " + what); };
  auto peek = [&]() -> const DotToken& { return toks[p]; };
  auto is = [&](DotToken::Kind k, const std::string& t = "") {
    return peek().kind == k && (t.empty() || peek().text == t);
  };
  auto expect = [&](DotToken::Kind k, const std::string& t = "") {
    if (!is(k, t)) throw fail("expected '" + t + "' near '" + peek().text + "'");
    return toks[p++].text;
  };

  if (is(DotToken::id, "strict")) ++p;
  if (!is(DotToken::id, "graph")) throw fail("expected 'graph'");
  ++p;
  if (is(DotToken::id)) ++p;
  expect(DotToken::punct, "{");

  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::map<std::string, int> colors;
  std::vector<std::pair<int, int>> edges;
  auto node = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };
  auto attrs = [&]() {
    std::map<std::string, std::string> out;
    while (is(DotToken::punct, "[")) {
      ++p;
      while (!is(DotToken::punct, "]")) {
        auto key = expect(DotToken::id);
        expect(DotToken::punct, "=");
        out[key] = expect(DotToken::id);
        if (is(DotToken::punct, ",") || is(DotToken::punct, ";")) ++p;
      }
      ++p;
    }
    return out;
  };

  while (!is(DotToken::punct, "}")) {
    if (is(DotToken::end)) throw fail("unexpected end of input");
    if (is(DotToken::punct, ";")) {
      ++p;
      continue;
    }
    auto first = expect(DotToken::id);
    if ((first == "graph" || first == "node" || first == "edge") && is(DotToken::punct, "[")) {
      attrs();
      continue;
    }
    if (is(DotToken::punct, "=")) {
      ++p;
      expect(DotToken::id);
      continue;
    }
    std::vector<int> chain{node(first)};
    while (is(DotToken::edgeop)) {
      ++p;
      chain.push_back(node(expect(DotToken::id)));
    }
    auto a = attrs();
    if (chain.size() == 1) {
      if (auto it = a.find("colorid"); it != a.end()) {
        try {
          colors[first] = std::stoi(it->second);
        } catch (const std::exception&) {
          throw fail("bad colorid");
        }
      }
    }
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) edges.emplace_back(chain[j], chain[j + 1]);
  }
  ++p;
  if (!is(DotToken::end)) throw fail("trailing input after graph");

  std::vector<VertexLabel> labels;
  bool named = true;
  for (const auto& s : names) {
    auto l = detail::parse_label_name(s);
    if (!l) {
      named = false;
      break;
    }
    labels.push_back(*l);
  }
  if (!named) {
    labels.clear();
    for (int i = 0; i < static_cast<int>(names.size()); ++i) labels.push_back(plain(i));
  }
  GraphDocument out;
  out.graph = Graph::from_ids(labels, edges);
  if (!colors.empty()) {
    if (colors.size() != names.size()) throw Error(ErrorCode::DomainMismatch, "dot: colorid missing on some node");
    std::vector<int> c(names.size());
    for (std::size_t v = 0; v < names.size(); ++v) c[v] = colors[names[v]];
    out.coloring = Coloring(c);
  }
  return out;
}

}  // namespace achroma
