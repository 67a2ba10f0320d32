#include <gtest/gtest.h>

#include <map>
#include <regex>

#include "achroma/generators.hpp"
#include "achroma/io.hpp"
#include "achroma/platonic.hpp"

using namespace achroma;

namespace {

// Minimal checker for the undirected DOT grammar:
//   graph     : [strict] graph [ID] '{' stmt_list '}'
//   stmt      : ID [attr_list] | ID ('--' ID)+ [attr_list] | (graph|node|edge) attr_list | ID '=' ID
//   attr_list : '[' (ID '=' ID [,;])* ']'
//   ID        : [A-Za-z_][A-Za-z0-9_]* | -?(.[0-9]+ | [0-9]+(.[0-9]*)?) | "..."
class DotGrammar {
 public:
  explicit DotGrammar(const std::string& s) {
    static const std::regex tok(
        R"re(\s*("(?:[^"\\]|\\.)*"|[A-Za-z_][A-Za-z0-9_]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?)|--|[{}\[\]=;,]))re");
    auto it = s.cbegin();
    std::smatch m;
    while (std::regex_search(it, s.cend(), m, tok, std::regex_constants::match_continuous)) {
      toks_.push_back(m[1]);
      it = m[0].second;
    }
    rest_ = std::string(it, s.cend());
  }

  bool valid() {
    if (rest_.find_first_not_of(" \t\r\n") != std::string::npos) return false;
    eat("strict");
    if (!eat("graph")) return false;
    id();
    if (!eat("{")) return false;
    while (p_ < toks_.size() && toks_[p_] != "}") {
      if (!stmt()) return false;
      eat(";");
    }
    return eat("}") && p_ == toks_.size();
  }

 private:
  bool eat(const std::string& t) {
    if (p_ < toks_.size() && toks_[p_] == t) {
      ++p_;
      return true;
    }
    return false;
  }

  bool id() {
    if (p_ >= toks_.size()) return false;
    const auto& t = toks_[p_];
    if (t == "{" || t == "}" || t == "[" || t == "]" || t == "=" || t == ";" || t == "," || t == "--") return false;
    ++p_;
    return true;
  }

  bool attr_list() {
    while (eat("[")) {
      while (!eat("]")) {
        if (!id() || !eat("=") || !id()) return false;
        if (!eat(",")) eat(";");
      }
    }
    return true;
  }

  bool stmt() {
    if (p_ < toks_.size() && (toks_[p_] == "graph" || toks_[p_] == "node" || toks_[p_] == "edge")) {
      ++p_;
      return p_ < toks_.size() && toks_[p_] == "[" && attr_list();
    }
    if (!id()) return false;
    if (eat("=")) return id();
    while (eat("--"))
      if (!id()) return false;
    return attr_list();
  }

  std::vector<std::string> toks_;
  std::string rest_;
  std::size_t p_ = 0;
};

std::vector<ColoredConstruction> all_constructions(int max_t) {
  std::vector<ColoredConstruction> out;
  for (int t = 1; t <= max_t; ++t) {
    out.push_back(build_planar_optimal(t));
    out.push_back(build_outerplanar_optimal(t));
    out.push_back(build_girth4_optimal(t));
    out.push_back(pad(build_girth4_optimal(t), build_girth4_optimal(t).graph.n() + 3));
    for (int h = 0; h <= t; ++h) out.push_back(build_surface_graph(t, SurfaceSpec::with_handles(h)));
    for (int c = 1; c <= 2 * t; ++c) out.push_back(build_surface_graph(t, SurfaceSpec::with_crosscaps(c)));
  }
  for (int n = 4; n <= 9; ++n) out.push_back(build_k2_bipartite(n));
  return out;
}

// Recolors the far end of an edge whose color class has another member, so the
// coloring stays surjective but becomes improper.
void break_properness(json& doc) {
  std::map<int, int> size;
  for (auto& [k, c] : doc["coloring"].items()) ++size[c.get<int>()];
  for (const auto& e : doc["edges"]) {
    auto a = std::to_string(e[0].get<int>()), b = std::to_string(e[1].get<int>());
    if (size[doc["coloring"][b].get<int>()] > 1) {
      doc["coloring"][b] = doc["coloring"][a];
      return;
    }
  }
}

}  // namespace

TEST(Json, GraphRoundTrip) {
  auto g = build_graph({{Family::u, 1}, {Family::v, 2}, {Family::z, 0}},
                       {{{Family::u, 1}, {Family::v, 2}}, {{Family::v, 2}, {Family::z, 0}}});
  Coloring c({0, 1, 0});
  auto doc = graph_to_json(g, &c);
  EXPECT_EQ(doc["schema"], 1);
  auto back = graph_from_json(json::parse(doc.dump()));
  EXPECT_EQ(back.graph.labels(), g.labels());
  EXPECT_EQ(back.graph.edges(), g.edges());
  ASSERT_TRUE(back.coloring.has_value());
  EXPECT_EQ(*back.coloring, c);
}

TEST(Json, ConstructionRoundTripVerifies) {
  for (const auto& c : all_constructions(4)) {
    SCOPED_TRACE(std::string(to_string(c.kind)) + " t=" + std::to_string(c.t) + " n=" + std::to_string(c.graph.n()));
    auto text = construction_to_json(c).dump(2);
    auto doc = json::parse(text);
    auto v = verify_document(doc, true);
    EXPECT_TRUE(v.passed()) << (v.failed().empty() ? "" : v.failed()[0]);
    auto back = graph_from_json(doc);
    EXPECT_EQ(back.graph.edges(), c.graph.edges());
    EXPECT_EQ(*back.coloring, c.coloring);
    if (c.rotation) EXPECT_EQ(back.rotation->rotation, c.rotation->rotation);
  }
}

TEST(Json, VerificationBlock) {
  auto doc = construction_to_json(build_planar_optimal(1));
  const auto& v = doc["verification"];
  EXPECT_EQ(v["n"], 10);
  EXPECT_EQ(v["k"], 7);
  EXPECT_EQ(v["m"], 21);
  EXPECT_EQ(v["bound"], 7);
  EXPECT_EQ(v["proper"], true);
  EXPECT_EQ(v["complete"], true);
  EXPECT_EQ(doc["class"], "planar");
}

TEST(Json, OutputIsDeterministic) {
  auto a = construction_to_json(build_outerplanar_optimal(3)).dump(2);
  auto b = construction_to_json(build_outerplanar_optimal(3)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_LT(a.find("\"base_kind\""), a.find("\"vertices\""));
}

TEST(Json, CorruptedColoringNamesCheck) {
  auto doc = construction_to_json(build_planar_optimal(1));
  break_properness(doc);
  auto v = verify_document(doc, true);
  EXPECT_FALSE(v.passed());
  EXPECT_FALSE(v.checks.at("proper"));
  EXPECT_FALSE(v.checks.at("claim:proper"));
}

TEST(Json, DroppedEdgeBreaksCompleteness) {
  auto doc = construction_to_json(build_girth4_optimal(2));
  doc["edges"].erase(doc["edges"].begin());
  doc.erase("rotation");
  auto v = verify_document(doc, true);
  EXPECT_FALSE(v.checks.at("complete"));
  EXPECT_FALSE(v.checks.at("claim:m"));
}

TEST(Json, TamperedRotationFailsCertificate) {
  auto doc = construction_to_json(build_outerplanar_optimal(2));
  auto& r = doc["rotation"];
  std::size_t hub = 0;
  for (std::size_t v = 0; v < r.size(); ++v)
    if (r[v].size() > r[hub].size()) hub = v;
  std::swap(r[hub][0], r[hub][1]);
  auto v = verify_document(doc, true);
  EXPECT_FALSE(v.checks.at("certificate"));
}

TEST(Json, SchemaErrors) {
  EXPECT_FALSE(verify_document(json::array(), false).checks.at("schema"));
  EXPECT_FALSE(verify_document(json{{"schema", 2}, {"vertices", json::array()}, {"edges", json::array()}}, false)
                   .checks.at("schema"));
  auto bad_family = json::parse(R"({"schema":1,"vertices":[{"family":"q","index":1}],"edges":[]})");
  EXPECT_THROW(graph_from_json(bad_family), Error);
  auto loop = json::parse(R"({"schema":1,"vertices":[{"family":"u","index":1}],"edges":[[0,0]]})");
  try {
    graph_from_json(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LoopEdge);
  }
  auto partial = json::parse(
      R"({"schema":1,"vertices":[{"family":"u","index":1},{"family":"u","index":2}],"edges":[[0,1]],"coloring":{"0":0}})");
  try {
    graph_from_json(partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainMismatch);
  }
}

TEST(Json, RequireColoringFlag) {
  auto doc = graph_to_json(cycle_graph(5));
  EXPECT_TRUE(verify_document(doc, false).passed());
  EXPECT_FALSE(verify_document(doc, true).passed());
}

TEST(Dot, WriterOutputIsGrammatical) {
  for (const auto& c : all_constructions(2)) {
    auto dot = to_dot(c.graph, &c.coloring);
    EXPECT_TRUE(DotGrammar(dot).valid()) << dot.substr(0, 200);
  }
  for (const auto& e : platonic_table()) EXPECT_TRUE(DotGrammar(to_dot(e.graph, nullptr, e.name)).valid());
  EXPECT_FALSE(DotGrammar("graph { a -- }").valid());
  EXPECT_FALSE(DotGrammar("graph G { a -- b ").valid());
}

TEST(Dot, RoundTrip) {
  for (const auto& c : all_constructions(2)) {
    auto back = graph_from_dot(to_dot(c.graph, &c.coloring));
    EXPECT_EQ(back.graph.labels(), c.graph.labels());
    EXPECT_EQ(back.graph.edges(), c.graph.edges());
    ASSERT_TRUE(back.coloring.has_value());
    EXPECT_EQ(*back.coloring, c.coloring);
  }
  auto d = planar_decompose(1, false);
  auto back = graph_from_dot(to_dot(d.parts[0].graph));
  EXPECT_EQ(back.graph.labels(), d.parts[0].graph.labels());
  EXPECT_FALSE(back.coloring.has_value());
}

TEST(Dot, ForeignNamesBecomePlain) {
  auto gd = graph_from_dot("graph { alpha -- beta -- gamma; // path\n gamma [shape=box]; }");
  EXPECT_EQ(gd.graph.n(), 3u);
  EXPECT_EQ(gd.graph.m(), 2u);
  EXPECT_EQ(gd.graph.label(2), plain(2));
}

TEST(Dot, Errors) {
  EXPECT_THROW(graph_from_dot("digraph { a -> b }"), Error);
  EXPECT_THROW(graph_from_dot("graph { a -- a }"), Error);
  EXPECT_THROW(graph_from_dot("graph { a -- b"), Error);
  EXPECT_THROW(graph_from_dot("graph { a [colorid=0]; b }"), Error);
}
