#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "achroma/bounds.hpp"
#include "achroma/decompositions.hpp"
#include "achroma/girth.hpp"
#include "achroma/graph.hpp"
#include "achroma/planarity.hpp"

namespace achroma {

struct BoundReport {
  std::size_t n = 0, m = 0;
  long eq2 = 1;
  std::optional<long> eq3, eq4, eq5;
  bool planar = false;
  bool outerplanar = false;
  bool girth_at_least_4 = false;

  // Tightest bound whose class hypothesis holds.
  long applicable() const {
    long best = eq2;
    if (planar && eq3) best = std::min(best, *eq3);
    if (outerplanar && eq4) best = std::min(best, *eq4);
    if (planar && girth_at_least_4 && eq5) best = std::min(best, *eq5);
    return best;
  }
};

inline BoundReport bounds(const Graph& g) {
  BoundReport r;
  r.n = g.n();
  r.m = g.m();
  r.eq2 = eq2_bound(static_cast<long long>(g.m()));
  const auto n = static_cast<long long>(g.n());
  if (n >= 3) r.eq3 = eq3_bound(n);
  if (n >= 2) r.eq4 = eq4_bound(n);
  if (n >= 4) r.eq5 = eq5_bound(n);
  r.planar = is_planar(g).planar;
  r.outerplanar = is_outerplanar(g);
  r.girth_at_least_4 = girth(g) >= 4;
  return r;
}

struct PartAudit {
  std::size_t size = 0;
  std::size_t expected_size = 0;
  bool size_ok = false;
  bool certificate_ok = false;  // rotation certificate (face tracing)
  bool oracle_ok = false;       // independent test (planarity oracle / girth methods)
  bool class_ok = false;        // both routes agree and hold

  bool passed() const { return size_ok && class_ok; }
};

struct AuditReport {
  DecompositionKind kind = DecompositionKind::planar;
  std::size_t host_n = 0;
  bool disjoint = false;
  bool covers = false;
  std::size_t part_count = 0;
  long long lower_bound = 0;
  bool count_ok = false;
  std::vector<PartAudit> parts;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

inline long long thickness_cap(DecompositionKind k, long long n) {
  switch (k) {
    case DecompositionKind::planar: return 3 * (n - 2);
    case DecompositionKind::outerplanar: return 2 * n - 3;
    case DecompositionKind::girth4: return 2 * (n - 2);
  }
  return 1;
}

inline std::size_t expected_part_size(const Decomposition& d, std::size_t idx) {
  const auto t = static_cast<std::size_t>(d.t);
  const bool matching = idx + 1 == d.parts.size();
  switch (d.kind) {
    case DecompositionKind::planar: return matching ? (d.with_z ? 9 * t : 3 * t) : 18 * t - 6;
    case DecompositionKind::outerplanar: return matching ? t : 8 * t - 3;
    case DecompositionKind::girth4: return matching ? 2 * t : 8 * t - 4;
  }
  return 0;
}

}  // namespace detail

inline AuditReport audit_decomposition(const Decomposition& d) {
  AuditReport r;
  r.kind = d.kind;
  r.host_n = d.host.n();
  r.part_count = d.parts.size();

  std::map<std::pair<VertexLabel, VertexLabel>, int> seen;
  bool foreign = false;
  for (const auto& p : d.parts)
    for (auto [a, b] : p.graph.edges()) {
      auto la = p.graph.label(a), lb = p.graph.label(b);
      if (lb < la) std::swap(la, lb);
      auto ha = d.host.find(la), hb = d.host.find(lb);
      if (!ha || !hb) foreign = true;
      ++seen[{la, lb}];
    }
  r.disjoint = true;
  for (const auto& [e, c] : seen)
    if (c > 1) r.disjoint = false;
  r.covers = !foreign && seen.size() == d.host.m();
  if (r.covers)
    for (auto [a, b] : d.host.edges())
      if (!seen.count({d.host.label(a), d.host.label(b)})) r.covers = false;
  if (!r.disjoint) r.failures.push_back("disjointness");
  if (!r.covers) r.failures.push_back("coverage");

  const auto n = static_cast<long long>(d.host.n());
  r.lower_bound = ceil_div(n * (n - 1) / 2, detail::thickness_cap(d.kind, n));
  r.count_ok = d.parts.size() == static_cast<std::size_t>(d.t + 1) &&
               r.lower_bound == static_cast<long long>(d.parts.size());
  if (!r.count_ok) r.failures.push_back("part-count");

  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& p = d.parts[i];
    PartAudit a;
    a.size = p.graph.m();
    a.expected_size = detail::expected_part_size(d, i);
    a.size_ok = a.size == a.expected_size;
    bool cert_planar = p.rotation && certifies_planar(p.graph, *p.rotation);
    switch (d.kind) {
      case DecompositionKind::planar:
        a.certificate_ok = cert_planar;
        a.oracle_ok = is_planar(p.graph).planar;
        break;
      case DecompositionKind::outerplanar:
        a.certificate_ok = p.rotation && certifies_outerplanar(p.graph, *p.rotation);
        a.oracle_ok = is_outerplanar(p.graph);
        break;
      case DecompositionKind::girth4:
        a.certificate_ok = cert_planar && girth(p.graph) >= 4;
        a.oracle_ok = is_planar(p.graph).planar && !has_triangle(p.graph);
        break;
    }
    a.class_ok = a.certificate_ok && a.oracle_ok;
    if (!a.size_ok) r.failures.push_back("size:part" + std::to_string(i + 1));
    if (!a.class_ok) r.failures.push_back("class:part" + std::to_string(i + 1));
    r.parts.push_back(a);
  }
  return r;
}

}  // namespace achroma
