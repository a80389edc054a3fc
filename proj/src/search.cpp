#include "bkn/search.hpp"

#include <algorithm>
#include <numeric>

#include "bkn/lp.hpp"

namespace bkn {

namespace {

bool next_subset(std::vector<int>& s, int n) {
  if (s.empty()) {
    if (n == 0) return false;
    s.push_back(0);
    return true;
  }
  if (s.back() < n - 1) {
    s.push_back(s.back() + 1);
    return true;
  }
  s.pop_back();
  if (s.empty()) return false;
  ++s.back();
  return true;
}

void assert_valid(const LabeledGraph& g, const BknSolution& sol, const char* who) {
  const CheckReport report = check_certificate(g, sol);
  if (!report.valid) {
    std::string detail;
    for (const auto& v : report.violations) detail += " [" + v.constraint + " at " + v.location + "]";
    throw std::logic_error(std::string(who) + ": found certificate invalid:" + detail);
  }
}

SearchResult search_exact_f(const LabeledGraph& g) {
  const Verdict v = decide_f(g);
  SearchResult result;
  if (v.holds) {
    result.status = SearchStatus::Found;
    result.solution = v.certificate;
  }
  return result;
}

// Any E solution normalizes (Lemma-style zeroing around a = 0) to: gamma
// = +-1 symmetric on support-internal edges, 0 elsewhere, a > 0 on the
// support. Enumerating that shape is therefore complete.
SearchResult search_exact_e(const LabeledGraph& g, long long budget) {
  const int n = static_cast<int>(g.vertices.size());
  const int m = static_cast<int>(g.edges.size());
  if (n + m >= 62 || (1LL << (n + m)) > budget) {
    throw BudgetExceeded("undecided: budget (E certificate enumeration exceeds limit)");
  }
  SearchResult result;

  std::vector<int> support;
  while (next_subset(support, n)) {
    std::vector<bool> in(n, false);
    for (int v : support) in[v] = true;
    std::vector<int> internal;
    bool possible = true;
    for (int v : support) {
      bool has_internal = false;
      for (int d : g.out_darts[v]) has_internal = has_internal || in[g.head(d)];
      if (!has_internal && g.vertices[v].charge != 0) {
        possible = false;  // equation k_v a_v = 0 with a_v > 0
        break;
      }
    }
    if (!possible) continue;
    for (int e = 0; e < m; ++e) {
      const int dp = g.edges[e].dart_pos;
      if (in[g.tail(dp)] && in[g.head(dp)]) internal.push_back(e);
    }
    const int k = static_cast<int>(internal.size());
    std::vector<int> vpos(n, -1);
    for (std::size_t i = 0; i < support.size(); ++i) vpos[support[i]] = static_cast<int>(i);

    for (long long mask = 0; mask < (1LL << k); ++mask) {
      std::vector<int> edge_sign(m, 0);
      for (int j = 0; j < k; ++j) edge_sign[internal[j]] = (mask & (1LL << j)) ? -1 : 1;

      LinearProgram lp;
      lp.num_vars = static_cast<int>(support.size());
      lp.bounds.assign(lp.num_vars, VarBound{Rat(0), std::nullopt, true, false});
      for (int v : support) {
        std::vector<Rat> row(lp.num_vars, Rat(0));
        row[vpos[v]] -= g.vertices[v].charge;
        for (int d : g.out_darts[v]) {
          const int h = g.head(d);
          if (!in[h]) continue;
          row[vpos[h]] += Rat(edge_sign[g.edge_of_dart(d)]) / rat_of(g.b(d));
        }
        lp.add_equality(std::move(row), Rat(0));
      }
      auto point = lp_feasible(lp);
      if (!point) continue;

      BknSolution sol;
      sol.variant = PropertyId::E;
      for (const auto& v : g.vertices) sol.a[v.id] = Rat(0);
      for (std::size_t i = 0; i < support.size(); ++i) {
        sol.a[g.vertices[support[i]].id] = (*point)[i];
      }
      for (int e = 0; e < m; ++e) {
        const Rat gamma = edge_sign[e] == 0 ? Rat(0) : Rat(edge_sign[e]);
        sol.gamma[g.darts[g.edges[e].dart_pos].id] = gamma;
        sol.gamma[g.darts[g.opp(g.edges[e].dart_pos)].id] = gamma;
      }
      assert_valid(g, sol, "search_certificate_exact(E)");
      result.status = SearchStatus::Found;
      result.solution = std::move(sol);
      return result;
    }
  }
  return result;
}

// Integer a-grid over a support: positive vectors with entry sum <= bound
// and gcd 1 (certificate checking is scale invariant), ordered by sum then
// lexicographically.
std::vector<std::vector<long long>> support_grid(int size, int sum_bound) {
  std::vector<std::vector<long long>> grid;
  if (size == 0) return grid;
  std::vector<long long> p(size);
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == size - 1) {
      p[pos] = remaining;
      long long d = 0;
      for (long long x : p) d = std::gcd(d, x);
      if (d == 1) grid.push_back(p);
      return;
    }
    for (long long v = 1; v + (size - 1 - pos) <= remaining; ++v) {
      p[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  for (int total = size; total <= sum_bound; ++total) rec(rec, 0, total);
  return grid;
}

}  // namespace

SearchResult search_certificate_exact(const LabeledGraph& g, PropertyId variant,
                                      long long budget) {
  if (variant == PropertyId::F) return search_exact_f(g);
  if (variant == PropertyId::E) return search_exact_e(g, budget);
  throw std::invalid_argument("search_certificate_exact: variant must be F or E");
}

SearchResult search_certificate_numeric(const LabeledGraph& g, PropertyId variant,
                                        const NumericSearchOptions& opts) {
  switch (variant) {
    case PropertyId::Im:
    case PropertyId::HI:
    case PropertyId::VF:
    case PropertyId::VE:
    case PropertyId::NPC:
      break;
    default:
      throw std::invalid_argument("search_certificate_numeric: continuous variants only");
  }
  const int n = static_cast<int>(g.vertices.size());
  SearchResult result;
  if (n == 0) return result;

  const bool needs_full_support =
      variant == PropertyId::HI || variant == PropertyId::VF || variant == PropertyId::NPC;
  const bool symmetric = variant != PropertyId::Im && variant != PropertyId::HI;
  const bool strict_box = variant == PropertyId::NPC;

  long long used = 0;

  std::vector<int> support;
  if (needs_full_support) {
    support.resize(n);
    std::iota(support.begin(), support.end(), 0);
  }

  for (;;) {
    if (!needs_full_support && !next_subset(support, n)) break;

    std::vector<bool> in(n, false);
    for (int v : support) in[v] = true;

    // support-internal darts; a vertex with charge but no internal dart
    // cannot balance its equation
    bool possible = true;
    std::vector<int> internal_darts;
    std::vector<int> internal_edges;
    for (int v : support) {
      bool has_internal = false;
      for (int d : g.out_darts[v]) {
        if (in[g.head(d)]) {
          has_internal = true;
          internal_darts.push_back(d);
        }
      }
      if (!has_internal && g.vertices[v].charge != 0) possible = false;
    }
    if (possible) {
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const int dp = g.edges[e].dart_pos;
        if (in[g.tail(dp)] && in[g.head(dp)]) internal_edges.push_back(e);
      }
      std::sort(internal_darts.begin(), internal_darts.end());
      internal_darts.erase(std::unique(internal_darts.begin(), internal_darts.end()),
                           internal_darts.end());

      // variable layout
      std::map<int, int> var_of;  // dart or edge index -> LP var
      int nvars = 0;
      if (symmetric) {
        for (int e : internal_edges) var_of[e] = nvars++;
      } else {
        for (int d : internal_darts) var_of[d] = nvars++;
      }

      const auto grid = support_grid(static_cast<int>(support.size()), opts.max_denominator);
      for (const auto& p : grid) {
        if (++used > opts.budget) {
          result.status = SearchStatus::Exhausted;
          result.note = "search exhausted: budget of " + std::to_string(opts.budget) +
                        " grid points reached";
          return result;
        }
        std::vector<Rat> a(n, Rat(0));
        for (std::size_t i = 0; i < support.size(); ++i) a[support[i]] = rat_of(p[i]);

        // necessary condition: sum of |coefficients| covers |k_v a_v|
        bool plausible = true;
        for (int v : support) {
          Rat reach(0);
          for (int d : g.out_darts[v]) {
            if (in[g.head(d)]) reach += a[g.head(d)] / rat_of(std::abs(g.b(d)));
          }
          if (reach < rat_abs(g.vertices[v].charge * a[v])) {
            plausible = false;
            break;
          }
        }
        if (!plausible) continue;

        std::vector<bool> pinned(nvars, false);
        for (int round = 0; round < 4; ++round) {
          LinearProgram lp;
          lp.num_vars = nvars;
          lp.bounds.assign(nvars, VarBound{Rat(-1), Rat(1), strict_box, strict_box});
          for (int j = 0; j < nvars; ++j) {
            if (pinned[j]) {
              lp.bounds[j].lower_strict = true;
              lp.bounds[j].upper_strict = true;
            }
          }
          for (int v : support) {
            std::vector<Rat> row(nvars, Rat(0));
            for (int d : g.out_darts[v]) {
              const int h = g.head(d);
              if (!in[h]) continue;
              const int var = symmetric ? var_of.at(g.edge_of_dart(d)) : var_of.at(d);
              row[var] += a[h] / rat_of(g.b(d));
            }
            lp.add_equality(std::move(row), g.vertices[v].charge * a[v]);
          }
          auto point = lp_feasible(lp);
          if (!point) break;

          BknSolution sol;
          sol.variant = variant;
          for (int v = 0; v < n; ++v) sol.a[g.vertices[v].id] = a[v];
          for (const auto& d : g.darts) sol.gamma[d.id] = Rat(0);
          if (symmetric) {
            for (int e : internal_edges) {
              const Rat& val = (*point)[var_of.at(e)];
              sol.gamma[g.darts[g.edges[e].dart_pos].id] = val;
              sol.gamma[g.darts[g.opp(g.edges[e].dart_pos)].id] = val;
            }
          } else {
            for (int d : internal_darts) sol.gamma[g.darts[d].id] = (*point)[var_of.at(d)];
          }

          // nonconvex side conditions for the dart-independent variants:
          // pin offending darts strictly inside the box and retry
          std::vector<int> bad_vars;
          if (variant == PropertyId::Im) {
            for (const auto& e : g.edges) {
              const int dp = e.dart_pos;
              const Rat& gp = sol.gamma.at(g.darts[dp].id);
              const Rat& gm = sol.gamma.at(g.darts[g.opp(dp)].id);
              if (gp * gm == -1) {
                const int d = in[g.tail(dp)] && in[g.head(dp)] ? dp : -1;
                if (d >= 0) bad_vars.push_back(var_of.at(d));
              }
            }
          } else if (variant == PropertyId::HI) {
            for (int d : internal_darts) {
              const Rat& gd = sol.gamma.at(g.darts[d].id);
              const Rat& go = sol.gamma.at(g.darts[g.opp(d)].id);
              if (rat_abs(gd) == 1 && go != gd) bad_vars.push_back(var_of.at(d));
            }
          }
          if (bad_vars.empty()) {
            assert_valid(g, sol, "search_certificate_numeric");
            result.status = SearchStatus::Found;
            result.solution = std::move(sol);
            return result;
          }
          for (int var : bad_vars) pinned[var] = true;
        }
      }
    }

    if (needs_full_support) break;
  }
  return result;
}

}  // namespace bkn
