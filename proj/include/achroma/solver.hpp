#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "achroma/bounds.hpp"
#include "achroma/coloring.hpp"
#include "achroma/error.hpp"
#include "achroma/graph.hpp"

namespace achroma {

enum class Parameter { chromatic, achromatic, pseudoachromatic };

inline std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::chromatic: return "chromatic";
    case Parameter::achromatic: return "achromatic";
    case Parameter::pseudoachromatic: return "pseudoachromatic";
  }
  return "";
}

inline std::optional<Parameter> parse_parameter(std::string_view s) {
  if (s == "chromatic" || s == "chi") return Parameter::chromatic;
  if (s == "achromatic" || s == "psi") return Parameter::achromatic;
  if (s == "pseudoachromatic" || s == "psi_s") return Parameter::pseudoachromatic;
  return std::nullopt;
}

struct SolverResult {
  Parameter parameter = Parameter::chromatic;
  int value = 0;
  Coloring witness;
  std::uint64_t explored = 0;
  bool budget_hit = false;
  int lower = 0;  // best known bounds; equal to value when exact
  int upper = 0;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(SolverResult partial)
      : Error(ErrorCode::BudgetExceeded, "search budget exhausted; value in [" + std::to_string(partial.lower) +
                                             ", " + std::to_string(partial.upper) + "]"),
        partial_(std::move(partial)) {}

  const SolverResult& partial() const { return partial_; }

 private:
  SolverResult partial_;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// ACHROMA_BUDGET overrides the default node budget.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("ACHROMA_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace detail {

inline std::vector<int> identity_colors(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i;
  return c;
}

// Partition search for a surjective k-coloring over a fixed vertex order.
class PartitionSearch {
 public:
  enum class Outcome { found, infeasible, budget };

  PartitionSearch(const Graph& g, int k, bool proper, bool complete, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), n_(static_cast<int>(g.n())), k_(k), proper_(proper), complete_(complete), nodes_(nodes),
        budget_(budget) {
    order_ = vertex_order(g);
    adj_.assign(n_, 0);
    for (auto [a, b] : g.edges()) {
      adj_[a] |= std::uint64_t{1} << b;
      adj_[b] |= std::uint64_t{1} << a;
    }
    suffix_deg_.assign(n_ + 1, 0);
    for (int p = n_ - 1; p >= 0; --p)
      suffix_deg_[p] = std::max<int>(suffix_deg_[p + 1], static_cast<int>(g.degree(order_[p])));
    color_.assign(n_, -1);
    class_mask_.assign(k_, 0);
    mult_.assign(static_cast<std::size_t>(k_) * k_, 0);
    partners_.assign(k_, 0);
    open_.assign(k_, 0);
    pairs_needed_ = static_cast<long>(k_) * (k_ - 1) / 2;
  }

  Outcome run() { return k_ > n_ ? Outcome::infeasible : dfs(0); }

  const std::vector<int>& witness() const { return witness_; }

  // Max degree first; ties by most already-ordered neighbours, then lowest ordinal.
  static std::vector<VertexId> vertex_order(const Graph& g) {
    const auto n = static_cast<VertexId>(g.n());
    std::vector<VertexId> order;
    std::vector<char> placed(n, 0);
    std::vector<int> back(n, 0);
    for (VertexId step = 0; step < n; ++step) {
      VertexId best = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || g.degree(v) > g.degree(best) ||
            (g.degree(v) == g.degree(best) && back[v] > back[best]))
          best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (VertexId w : g.neighbors(best)) ++back[w];
    }
    return order;
  }

 private:
  int& mult(int a, int b) { return mult_[static_cast<std::size_t>(a) * k_ + b]; }

  void assign(VertexId v, int c) {
    color_[v] = c;
    class_mask_[c] |= std::uint64_t{1} << v;
    if (c == used_) ++used_;
    for (VertexId w : g_.neighbors(v)) {
      int d = color_[w];
      if (d < 0) {
        ++open_[c];
        continue;
      }
      ++closed_;
      --open_[d];
      if (d != c) {
        if (mult(c, d)++ == 0) {
          ++realized_;
          ++partners_[c];
          ++partners_[d];
        }
        ++mult(d, c);
      }
    }
  }

  void unassign(VertexId v, int c) {
    for (VertexId w : g_.neighbors(v)) {
      int d = color_[w];
      if (d < 0) {
        --open_[c];
        continue;
      }
      --closed_;
      ++open_[d];
      if (d != c) {
        --mult(d, c);
        if (--mult(c, d) == 0) {
          --realized_;
          --partners_[c];
          --partners_[d];
        }
      }
    }
    class_mask_[c] &= ~(std::uint64_t{1} << v);
    if (c == used_ - 1 && class_mask_[c] == 0) --used_;
    color_[v] = -1;
  }

  bool pruned(int assigned) const {
    const int rest = n_ - assigned;
    if (k_ - used_ > rest) return true;
    if (!complete_) return false;
    const long open_edges = static_cast<long>(g_.m()) - closed_;
    if (realized_ + open_edges < pairs_needed_) return true;
    // Each class needs k-1 distinct partner classes; future vertices add at most D each.
    const int D = suffix_deg_[assigned];
    long need = 0;
    for (int c = 0; c < used_; ++c) {
      long deficit = (k_ - 1) - partners_[c] - open_[c];
      if (deficit <= 0) continue;
      if (D == 0) return true;
      need += (deficit + D - 1) / D;
    }
    if (used_ < k_ && k_ > 1) {
      if (D == 0) return true;
      need += static_cast<long>(k_ - used_) * ((k_ - 1 + D - 1) / D);
    }
    return need > rest;
  }

  Outcome dfs(int p) {
    if (nodes_ >= budget_) return Outcome::budget;
    ++nodes_;
    if (p == n_) {
      if (used_ != k_) return Outcome::infeasible;
      if (complete_ && realized_ != pairs_needed_) return Outcome::infeasible;
      witness_ = color_;
      return Outcome::found;
    }
    VertexId v = order_[p];
    const int top = std::min(used_, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      if (proper_ && (class_mask_[c] & adj_[v])) continue;
      assign(v, c);
      if (!pruned(p + 1)) {
        auto r = dfs(p + 1);
        if (r != Outcome::infeasible) {
          unassign(v, c);
          return r;
        }
      }
      unassign(v, c);
    }
    return Outcome::infeasible;
  }

  const Graph& g_;
  int n_, k_;
  bool proper_, complete_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<VertexId> order_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> suffix_deg_;
  std::vector<int> color_;
  std::vector<std::uint64_t> class_mask_;
  std::vector<int> mult_;
  std::vector<long> partners_;
  std::vector<long> open_;
  int used_ = 0;
  long closed_ = 0;
  long realized_ = 0;
  long pairs_needed_ = 0;
  std::vector<int> witness_;
};

}  // namespace detail

// Exact search; on budget exhaustion returns budget_hit with the best bounds known.
inline SolverResult solve_bounded(const Graph& g, Parameter parameter, std::uint64_t budget = default_budget()) {
  if (g.n() < 1) throw Error(ErrorCode::InvalidParameter, "solve needs at least one vertex");
  if (g.n() > 64) throw Error(ErrorCode::InvalidParameter, "solver supports at most 64 vertices");
  SolverResult r;
  r.parameter = parameter;
  const int n = static_cast<int>(g.n());
  const bool proper = parameter != Parameter::pseudoachromatic;
  const bool complete = parameter != Parameter::chromatic;

  auto attempt = [&](int k) {
    detail::PartitionSearch s(g, k, proper, complete, r.explored, budget);
    auto out = s.run();
    if (out == detail::PartitionSearch::Outcome::found) r.witness = Coloring(s.witness());
    return out;
  };
  using Outcome = detail::PartitionSearch::Outcome;

  if (parameter == Parameter::chromatic) {
    r.upper = n;
    r.lower = 1;
    for (int k = 1; k <= n; ++k) {
      auto out = attempt(k);
      if (out == Outcome::found) {
        r.value = r.lower = r.upper = k;
        return r;
      }
      if (out == Outcome::budget) {
        r.budget_hit = true;
        r.lower = k;
        r.value = r.upper;
        r.witness = Coloring(detail::identity_colors(n));
        return r;
      }
      r.lower = k + 1;
    }
    throw Error(ErrorCode::InvalidParameter, "no proper coloring found");
  }

  const int top = static_cast<int>(std::min<long>(n, eq2_bound(static_cast<long long>(g.m()))));
  r.upper = top;
  r.lower = 1;
  for (int k = top; k >= 1; --k) {
    auto out = attempt(k);
    if (out == Outcome::found) {
      r.value = r.lower = r.upper = k;
      return r;
    }
    if (out == Outcome::budget) {
      // No witness below k yet; the bounds are all that is known.
      r.budget_hit = true;
      r.upper = k;
      r.value = r.lower = 1;
      return r;
    }
    r.upper = k - 1;
  }
  throw Error(ErrorCode::InvalidParameter, "no complete coloring found");
}

inline SolverResult solve(const Graph& g, Parameter parameter, std::uint64_t budget = default_budget()) {
  auto r = solve_bounded(g, parameter, budget);
  if (r.budget_hit) throw BudgetExceeded(r);
  return r;
}

// max{k : k * floor(k/2) <= n}
inline int psi_s_cycle(long long n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "psi_s_cycle needs n >= 3");
  long long k = 1;
  while ((k + 1) * ((k + 1) / 2) <= n) ++k;
  return static_cast<int>(k);
}

// max{k : C(k,2) <= (n+4)/3}, compared exactly as 3k(k-1) <= 2(n+4).
inline int matching_lower_bound(long long n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "matching_lower_bound needs n >= 3");
  long long k = 1;
  while (3 * (k + 1) * k <= 2 * (n + 4)) ++k;
  return static_cast<int>(k);
}

}  // namespace achroma
