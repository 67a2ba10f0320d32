#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "achroma/achroma.hpp"

namespace fs = std::filesystem;
using namespace achroma;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, failed = 1, usage = 2 };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

struct RunManifest {
  std::vector<std::string> argv;
  json inputs = json::array();
  json verdicts = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  json to_json(int exit_code) const {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return json{{"tool", "achroma"}, {"version", kVersion}, {"argv", argv},       {"inputs", inputs},
                {"verdicts", verdicts}, {"elapsed_ms", ms},   {"exit_code", exit_code}};
  }
};

RunManifest manifest;

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  auto bytes = os.str();
  manifest.inputs.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
  return bytes;
}

bool looks_like_dot(const std::string& path, const std::string& bytes) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot") return true;
  auto p = bytes.find_first_not_of(" \t\r\n");
  return p != std::string::npos && bytes[p] != '{';
}

GraphDocument load_graph(const std::string& path) {
  auto bytes = read_input(path);
  if (looks_like_dot(path, bytes)) return graph_from_dot(bytes);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return graph_from_json(doc);
}

void report_failures(const std::vector<std::string>& names) {
  std::cerr << "achroma: failed check";
  if (names.size() > 1) std::cerr << "s";
  std::cerr << ":";
  for (const auto& n : names) std::cerr << " " << n;
  std::cerr << "\n";
}

const char* yn(bool b) { return b ? "true" : "false"; }

// construct

struct ConstructOpts {
  std::string kind = "planar";
  int t = 1;
  std::optional<int> n;
  std::optional<int> handles;
  std::optional<int> crosscaps;
  std::string format = "text";
};

ColoredConstruction build_construction(const ConstructOpts& o) {
  ColoredConstruction c;
  if (o.kind == "planar") c = build_planar_optimal(o.t);
  else if (o.kind == "outerplanar") c = build_outerplanar_optimal(o.t);
  else if (o.kind == "girth4") c = build_girth4_optimal(o.t);
  else if (o.kind == "k2") {
    if (!o.n) throw UsageError("--kind k2 needs --n");
    return build_k2_bipartite(*o.n);
  } else if (o.kind == "surface") {
    if (o.handles && o.crosscaps) throw UsageError("--handles and --crosscaps are exclusive");
    auto s = o.crosscaps ? SurfaceSpec::with_crosscaps(*o.crosscaps) : SurfaceSpec::with_handles(o.handles.value_or(0));
    c = build_surface_graph(o.t, s);
  }
  if (o.n && o.kind != "surface") {
    if (*o.n < 0) throw UsageError("--n must be non-negative");
    c = pad(c, static_cast<std::size_t>(*o.n));
  }
  return c;
}

int run_construct(const ConstructOpts& o) {
  auto c = build_construction(o);
  auto doc = construction_to_json(c);
  auto check = verify_document(doc, true);
  manifest.verdicts = check.block["checks"];
  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "dot") {
    std::cout << to_dot(c.graph, &c.coloring);
  } else {
    const auto& v = doc["verification"];
    std::cout << "kind: " << to_string(c.kind);
    if (c.kind == ConstructionKind::padded) std::cout << " (" << to_string(c.base_kind) << ")";
    std::cout << "\n";
    if (c.t > 0) std::cout << "t: " << c.t << "\n";
    if (c.surface)
      std::cout << "surface: " << (c.surface->orientable ? "orientable" : "non-orientable")
                << " euler_genus=" << c.surface->euler_genus() << " phi=" << c.surface->phi() << "\n";
    std::cout << "n: " << c.graph.n() << "\nm: " << c.graph.m() << "\nk: " << c.coloring.k() << "\n";
    std::cout << "proper: " << v["proper"] << "\ncomplete: " << v["complete"] << "\nbound: " << v["bound"] << "\n";
  }
  if (!check.passed()) {
    report_failures(check.failed());
    return failed;
  }
  return ok;
}

// decompose

Decomposition make_decomposition(const std::string& kind, int t, bool with_z) {
  if (kind == "planar") return planar_decompose(t, with_z);
  if (with_z) throw UsageError("--with-z applies to planar only");
  if (kind == "outerplanar") return outerplanar_decompose(t);
  return girth4_decompose(t);
}

int run_decompose(const std::string& kind, int t, bool with_z, const std::string& format, const std::string& out_dir) {
  auto d = make_decomposition(kind, t, with_z);
  auto audit = audit_decomposition(d);
  auto audit_doc = audit_to_json(audit);
  manifest.verdicts = audit_doc;

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    json index = json::array();
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
      const auto& p = d.parts[i];
      auto name = "part" + std::to_string(i + 1) + (format == "dot" ? ".dot" : ".json");
      std::ofstream f(fs::path(out_dir) / name);
      if (format == "dot") f << to_dot(p.graph, nullptr, "part" + std::to_string(i + 1));
      else f << graph_to_json(p.graph, nullptr, p.rotation ? &*p.rotation : nullptr).dump(2) << "\n";
      index.push_back({{"file", name}, {"size", p.graph.m()}});
    }
    std::ofstream mf(fs::path(out_dir) / "manifest.json");
    mf << json{{"kind", std::string(to_string(d.kind))}, {"t", t}, {"with_z", with_z}, {"parts", index},
               {"audit", audit_doc}}
              .dump(2)
       << "\n";
  }

  if (format == "json") {
    auto doc = decomposition_to_json(d);
    doc["audit"] = audit_doc;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "dot") {
    for (std::size_t i = 0; i < d.parts.size(); ++i)
      std::cout << to_dot(d.parts[i].graph, nullptr, "part" + std::to_string(i + 1));
  } else {
    std::cout << "kind: " << to_string(d.kind) << (d.with_z ? " (with z)" : "") << "\nt: " << t
              << "\nhost n: " << audit.host_n << "\nparts: " << audit.part_count << " (lower bound "
              << audit.lower_bound << ")\n";
    for (std::size_t i = 0; i < audit.parts.size(); ++i) {
      const auto& p = audit.parts[i];
      std::cout << "  part " << i + 1 << ": size " << p.size << "/" << p.expected_size
                << " certificate=" << yn(p.certificate_ok) << " oracle=" << yn(p.oracle_ok)
                << " class=" << yn(p.class_ok) << "\n";
    }
    std::cout << "disjoint: " << yn(audit.disjoint) << "\ncovers: " << yn(audit.covers)
              << "\npassed: " << yn(audit.passed()) << "\n";
  }
  if (!audit.passed()) {
    report_failures(audit.failures);
    return failed;
  }
  return ok;
}

// verify

int run_verify(const std::string& input, bool coloring, const std::string& format) {
  auto bytes = read_input(input);
  DocumentVerification v;
  if (looks_like_dot(input, bytes)) {
    json doc;
    try {
      auto gd = graph_from_dot(bytes);
      doc = graph_to_json(gd.graph, gd.coloring ? &*gd.coloring : nullptr);
    } catch (const Error& e) {
      doc = json{{"error", e.what()}};
    }
    v = verify_document(doc, coloring);
  } else {
    json doc;
    try {
      doc = json::parse(bytes);
    } catch (const json::exception& e) {
      doc = json{{"error", e.what()}};
    }
    v = verify_document(doc, coloring);
  }
  manifest.verdicts = v.block.value("checks", json::object());
  if (format == "json") {
    std::cout << v.block.dump(2) << "\n";
  } else {
    if (v.block.contains("error")) std::cout << "error: " << v.block["error"].get<std::string>() << "\n";
    for (const char* key : {"n", "m", "k", "proper", "complete", "bound"})
      if (v.block.contains(key)) std::cout << key << ": " << v.block[key] << "\n";
    for (const auto& [name, good] : v.checks) std::cout << "check " << name << ": " << (good ? "pass" : "FAIL") << "\n";
  }
  if (!v.passed()) {
    report_failures(v.failed());
    return failed;
  }
  return ok;
}

// solve

Graph builtin_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--graph expects NAME:ARG");
  auto name = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (name == "platonic") {
    auto e = platonic_entry(arg);
    if (!e) throw UsageError("unknown platonic graph " + arg);
    return e->graph;
  }
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw UsageError("bad size in --graph " + spec);
  }
  if (name == "cycle") return cycle_graph(n);
  if (name == "complete") return complete_graph(n);
  if (name == "k2") {
    if (n < 3) throw UsageError("k2:N needs N >= 3");
    return complete_bipartite(2, n - 2);
  }
  throw UsageError("unknown generator " + name);
}

int run_solve(const std::string& input, const std::string& graph_spec, const std::string& param_name,
              std::optional<std::uint64_t> budget, const std::string& format) {
  auto param = parse_parameter(param_name);
  if (!param) throw UsageError("unknown parameter " + param_name);
  if (input.empty() == graph_spec.empty()) throw UsageError("give exactly one of --input or --graph");
  Graph g = input.empty() ? builtin_graph(graph_spec) : load_graph(input).graph;
  auto r = solve_bounded(g, *param, budget.value_or(default_budget()));

  json doc;
  doc["parameter"] = std::string(to_string(r.parameter));
  doc["n"] = g.n();
  doc["m"] = g.m();
  doc["explored"] = r.explored;
  doc["budget_hit"] = r.budget_hit;
  doc["lower"] = r.lower;
  doc["upper"] = r.upper;
  doc["eq2"] = eq2_bound(static_cast<long long>(g.m()));
  if (!r.budget_hit) {
    doc["value"] = r.value;
    doc["witness"] = r.witness.colors();
    doc["proper"] = is_proper(g, r.witness);
    doc["complete"] = is_complete(g, r.witness);
  }
  manifest.verdicts = {{"budget_hit", r.budget_hit}};
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "parameter: " << to_string(r.parameter) << "\nn: " << g.n() << "\nm: " << g.m() << "\n";
    if (r.budget_hit) {
      std::cout << "value: unknown, in [" << r.lower << ", " << r.upper << "]\n";
    } else {
      std::cout << "value: " << r.value << "\nwitness:";
      for (int c : r.witness.colors()) std::cout << " " << c;
      std::cout << "\n";
    }
    std::cout << "explored: " << r.explored << "\n";
  }
  if (r.budget_hit) {
    report_failures({"budget"});
    return failed;
  }
  return ok;
}

// platonic

int run_platonic(const std::string& name, bool do_solve, const std::string& format) {
  auto table = platonic_table();
  if (!name.empty()) {
    auto e = platonic_entry(name);
    if (!e) throw UsageError("unknown platonic graph " + name);
    table = {*e};
  }
  json rows = json::array();
  std::vector<std::string> bad;
  for (const auto& e : table) {
    bool w_psi = is_proper(e.graph, e.psi_witness) && is_complete(e.graph, e.psi_witness) &&
                 static_cast<int>(e.psi_witness.k()) == e.expected_psi;
    bool w_psi_s = is_complete(e.graph, e.psi_s_witness) && static_cast<int>(e.psi_s_witness.k()) == e.expected_psi_s;
    json row{{"name", e.name}, {"n", e.n},          {"r", e.r},
             {"psi", e.expected_psi}, {"psi_s", e.expected_psi_s}, {"upper_bound", e.upper_bound_argument},
             {"witness_psi_ok", w_psi}, {"witness_psi_s_ok", w_psi_s}};
    if (!w_psi) bad.push_back(e.name + ":witness-psi");
    if (!w_psi_s) bad.push_back(e.name + ":witness-psi_s");
    if (do_solve) {
      int psi = solve(e.graph, Parameter::achromatic).value;
      int psi_s = solve(e.graph, Parameter::pseudoachromatic).value;
      row["solved_psi"] = psi;
      row["solved_psi_s"] = psi_s;
      if (psi != e.expected_psi) bad.push_back(e.name + ":psi");
      if (psi_s != e.expected_psi_s) bad.push_back(e.name + ":psi_s");
    }
    rows.push_back(row);
  }
  manifest.verdicts = {{"failures", bad}};
  if (format == "json") {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(14) << "graph" << std::setw(4) << "n" << std::setw(4) << "r" << std::setw(5)
              << "psi" << std::setw(7) << "psi_s"
              << "upper bound k0\n";
    for (const auto& row : rows)
      std::cout << std::setw(14) << row["name"].get<std::string>() << std::setw(4) << row["n"].get<int>()
                << std::setw(4) << row["r"].get<int>() << std::setw(5) << row["psi"].get<int>() << std::setw(7)
                << row["psi_s"].get<int>() << row["upper_bound"].get<std::string>() << "\n";
  }
  if (!bad.empty()) {
    report_failures(bad);
    return failed;
  }
  return ok;
}

// bounds

int run_bounds(const std::string& input, std::optional<long long> n, std::optional<long long> m,
               const std::string& format) {
  json doc;
  if (!input.empty()) {
    auto g = load_graph(input).graph;
    auto b = bounds(g);
    doc = {{"n", b.n}, {"m", b.m}, {"eq2", b.eq2}, {"planar", b.planar}, {"outerplanar", b.outerplanar},
           {"girth_at_least_4", b.girth_at_least_4}};
    doc["eq3"] = b.eq3 ? json(*b.eq3) : json(nullptr);
    doc["eq4"] = b.eq4 ? json(*b.eq4) : json(nullptr);
    doc["eq5"] = b.eq5 ? json(*b.eq5) : json(nullptr);
  } else {
    if (!n && !m) throw UsageError("bounds needs --input or --n/--m");
    if (m) {
      if (*m < 0) throw UsageError("--m must be non-negative");
      doc["m"] = *m;
      doc["eq2"] = eq2_bound(*m);
    }
    if (n) {
      if (*n < 1) throw UsageError("--n must be positive");
      doc["n"] = *n;
      doc["eq3"] = *n >= 3 ? json(eq3_bound(*n)) : json(nullptr);
      doc["eq4"] = *n >= 2 ? json(eq4_bound(*n)) : json(nullptr);
      doc["eq5"] = *n >= 4 ? json(eq5_bound(*n)) : json(nullptr);
    }
  }
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (auto it = doc.begin(); it != doc.end(); ++it) std::cout << it.key() << ": " << it.value() << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) manifest.argv.emplace_back(argv[i]);

  CLI::App app{"Complete colorings, decompositions and achromatic bounds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write the run manifest here instead of stderr");

  const std::vector<std::string> formats{"text", "json", "dot"};

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build an optimally colored graph");
  construct->add_option("--kind", co.kind)->check(CLI::IsMember({"planar", "outerplanar", "girth4", "k2", "surface"}));
  construct->add_option("--t", co.t)->check(CLI::PositiveNumber);
  construct->add_option("--n", co.n, "pad to n vertices (k2: order)");
  auto* h = construct->add_option("--handles", co.handles);
  construct->add_option("--crosscaps", co.crosscaps)->excludes(h);
  construct->add_option("--format", co.format)->check(CLI::IsMember(formats));

  std::string d_kind = "planar", d_format = "text", d_dir;
  int d_t = 1;
  bool d_with_z = false;
  auto* decompose = app.add_subcommand("decompose", "decompose a complete graph and audit the parts");
  decompose->add_option("--kind", d_kind)->check(CLI::IsMember({"planar", "outerplanar", "girth4"}));
  decompose->add_option("--t", d_t)->check(CLI::PositiveNumber);
  decompose->add_flag("--with-z", d_with_z);
  decompose->add_option("--format", d_format)->check(CLI::IsMember(formats));
  decompose->add_option("--output-dir", d_dir, "also write one file per part plus manifest.json");

  std::string v_input, v_format = "text";
  bool v_coloring = false;
  auto* verify = app.add_subcommand("verify", "recompute every claim in a graph document");
  verify->add_option("--input", v_input)->required();
  verify->add_flag("--coloring", v_coloring, "require a proper complete coloring");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

  std::string s_input, s_graph, s_param, s_format = "text";
  std::optional<std::uint64_t> s_budget;
  auto* solve_cmd = app.add_subcommand("solve", "exact chromatic, achromatic or pseudoachromatic number");
  solve_cmd->add_option("--input", s_input);
  solve_cmd->add_option("--graph", s_graph, "cycle:N | complete:N | k2:N | platonic:NAME");
  solve_cmd->add_option("--parameter", s_param)->required();
  solve_cmd->add_option("--budget", s_budget, "search node budget");
  solve_cmd->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));

  std::string p_name, p_format = "text";
  bool p_solve = false;
  auto* platonic = app.add_subcommand("platonic", "achromatic numbers of the Platonic graphs");
  platonic->add_option("--name", p_name);
  platonic->add_flag("--solve", p_solve, "confirm the values with the exact solver");
  platonic->add_option("--format", p_format)->check(CLI::IsMember({"text", "json"}));

  std::string b_input, b_format = "text";
  std::optional<long long> b_n, b_m;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form upper bounds");
  bounds_cmd->add_option("--input", b_input);
  bounds_cmd->add_option("--n", b_n);
  bounds_cmd->add_option("--m", b_m);
  bounds_cmd->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));

  int code = ok;
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    code = usage;
  }

  if (code == ok) {
    try {
      if (*construct) code = run_construct(co);
      else if (*decompose) code = run_decompose(d_kind, d_t, d_with_z, d_format, d_dir);
      else if (*verify) code = run_verify(v_input, v_coloring, v_format);
      else if (*solve_cmd) code = run_solve(s_input, s_graph, s_param, s_budget, s_format);
      else if (*platonic) code = run_platonic(p_name, p_solve, p_format);
      else if (*bounds_cmd) code = run_bounds(b_input, b_n, b_m, b_format);
    } catch (const UsageError& e) {
      std::cerr << "achroma: " << e.what() << "\n";
      code = usage;
    } catch (const BudgetExceeded& e) {
      std::cerr << "achroma: " << e.what() << "\n";
      report_failures({"budget"});
      code = failed;
    } catch (const Error& e) {
      std::cerr << "achroma: " << e.what() << "\n";
      code = usage;
    }
  }

  auto m = manifest.to_json(code).dump();
  if (!manifest_path.empty()) {
    std::ofstream(manifest_path) << m << "\n";
  } else {
    std::cerr << m << "\n";
  }
  return code;
}
