#include "bkn/census.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bkn/decide.hpp"

namespace bkn {

CensusBounds CensusBounds::defaults() {
  CensusBounds b;
  b.charges = {Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1)};
  b.indices = {1, 2};
  return b;
}

bool CensusReport::operator==(const CensusReport& other) const {
  return graph_count == other.graph_count && profiles == other.profiles &&
         discrepancies == other.discrepancies && undecided_count == other.undecided_count &&
         ok == other.ok;
}

std::string describe_graph(const LabeledGraph& g) {
  std::string out = "k=[";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (v) out += ",";
    out += rat_to_string(g.vertices[v].charge);
  }
  out += "] e=[";
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e) out += ",";
    const int dp = g.edges[e].dart_pos;
    out += "(" + g.vertices[g.tail(dp)].id + "," + g.vertices[g.head(dp)].id +
           ",b=" + std::to_string(g.b(dp)) + ")";
  }
  out += "]";
  return out;
}

std::vector<LabeledGraph> enumerate_census_graphs(const CensusBounds& bounds) {
  std::vector<LabeledGraph> graphs;
  if (bounds.charges.empty()) return graphs;

  for (int n = 1; n <= bounds.max_vertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (i == j && !bounds.loops) continue;
        pairs.emplace_back(i, j);
      }
    }

    // edge structures: nondecreasing pair-index sequences, size 0..max_edges
    std::vector<std::vector<int>> structures;
    std::vector<int> current;
    auto rec = [&](auto&& self, int start) -> void {
      structures.push_back(current);
      if (static_cast<int>(current.size()) == bounds.max_edges) return;
      for (int p = start; p < static_cast<int>(pairs.size()); ++p) {
        current.push_back(p);
        self(self, p);
        current.pop_back();
      }
    };
    rec(rec, 0);

    const int ncharges = static_cast<int>(bounds.charges.size());
    const int nindices = static_cast<int>(bounds.indices.size());
    for (const auto& structure : structures) {
      const int m = static_cast<int>(structure.size());
      if (m > 0 && nindices == 0) continue;

      std::vector<int> charge_pick(n, 0);
      for (;;) {
        std::vector<int> index_pick(m, 0);
        for (;;) {
          std::vector<std::pair<std::string, Rat>> vertices;
          for (int v = 0; v < n; ++v) {
            vertices.emplace_back("v" + std::to_string(v + 1), bounds.charges[charge_pick[v]]);
          }
          std::vector<EdgeSpec> edges;
          for (int e = 0; e < m; ++e) {
            EdgeSpec spec;
            spec.id = "e" + std::to_string(e + 1);
            spec.tail = "v" + std::to_string(pairs[structure[e]].first + 1);
            spec.head = "v" + std::to_string(pairs[structure[e]].second + 1);
            spec.b = bounds.indices[index_pick[e]];
            edges.push_back(std::move(spec));
          }
          graphs.push_back(LabeledGraph::build(vertices, edges));

          int pos = m - 1;
          while (pos >= 0 && index_pick[pos] == nindices - 1) index_pick[pos--] = 0;
          if (pos < 0) break;
          ++index_pick[pos];
        }
        int pos = n - 1;
        while (pos >= 0 && charge_pick[pos] == ncharges - 1) charge_pick[pos--] = 0;
        if (pos < 0) break;
        ++charge_pick[pos];
      }
    }
  }
  return graphs;
}

namespace {

struct GraphOutcome {
  std::string profile;
  bool undecided = false;
  std::vector<CensusDiscrepancy> discrepancies;
};

void check_solution_health(const LabeledGraph& g, const BknSolution& sol,
                           const std::string& graph_key, bool flagged,
                           const std::string& origin,
                           std::vector<CensusDiscrepancy>& out) {
  const CheckReport report = check_certificate(g, sol);
  if (!report.valid) {
    std::string detail = origin + ":";
    for (const auto& v : report.violations) detail += " [" + v.constraint + "]";
    out.push_back({"certificate_invalid", graph_key, property_name(sol.variant), detail, flagged});
    return;
  }
  const BknSolution normalized = normalize_solution(g, sol);
  if (residual(g, normalized) != report.residuals) {
    out.push_back({"normalization", graph_key, property_name(sol.variant),
                   origin + ": residuals changed", flagged});
  }
  if (!check_certificate(g, normalized).valid) {
    out.push_back({"normalization", graph_key, property_name(sol.variant),
                   origin + ": validity lost", flagged});
  }
}

GraphOutcome evaluate_graph(const LabeledGraph& g, const CensusOptions& options) {
  GraphOutcome outcome;
  const std::string key = describe_graph(g);
  const bool flagged = g.has_loop_at_charged_vertex();
  try {
    const Classification cls = classify_all(g, options.budget);

    for (const auto& entry : cls.entries) {
      outcome.profile += entry.verdict ? (entry.verdict->holds ? '1' : '0') : '?';
    }
    if (!cls.all_decided) outcome.undecided = true;

    for (const auto& rule : cls.implication_violations) {
      outcome.discrepancies.push_back({"implication", key, "", rule, flagged});
    }
    for (const auto& entry : cls.entries) {
      if (entry.verdict && entry.verdict->certificate) {
        check_solution_health(g, *entry.verdict->certificate, key, flagged, "decider",
                              outcome.discrepancies);
      }
    }

    // complete-oracle agreement for F and E
    for (PropertyId p : {PropertyId::F, PropertyId::E}) {
      const auto& entry = cls.entry(p);
      if (!entry.verdict) continue;
      try {
        const SearchResult search = search_certificate_exact(g, p, options.budget);
        const bool found = search.status == SearchStatus::Found;
        if (found != entry.verdict->holds) {
          outcome.discrepancies.push_back(
              {"fe_mismatch", key, property_name(p),
               std::string("decider=") + (entry.verdict->holds ? "true" : "false") +
                   " search=" + (found ? "found" : "none"),
               flagged});
        }
        if (search.solution) {
          check_solution_health(g, *search.solution, key, flagged, "exact search",
                                outcome.discrepancies);
        }
      } catch (const BudgetExceeded&) {
        outcome.undecided = true;
      }
    }

    // one-sided consistency of the numeric search
    for (PropertyId p : {PropertyId::Im, PropertyId::HI, PropertyId::VF, PropertyId::VE,
                         PropertyId::NPC}) {
      const auto& entry = cls.entry(p);
      const SearchResult search = search_certificate_numeric(g, p, options.numeric);
      if (search.status == SearchStatus::Found) {
        check_solution_health(g, *search.solution, key, flagged, "numeric search",
                              outcome.discrepancies);
        if (entry.verdict && !entry.verdict->holds) {
          outcome.discrepancies.push_back(
              {"numeric_decider_conflict", key, property_name(p),
               "numeric search found a certificate but the decider says the property fails",
               flagged});
        }
      } else if (search.status == SearchStatus::NotFound && flagged && entry.verdict &&
                 entry.verdict->holds) {
        outcome.discrepancies.push_back(
            {"flagged_no_witness", key, property_name(p),
             "decider says the property holds but the full numeric grid found no certificate",
             flagged});
      }
    }
  } catch (const std::exception& e) {
    outcome.discrepancies.push_back({"internal_error", key, "", e.what(), flagged});
  }
  return outcome;
}

CensusReport merge_outcomes(const std::vector<GraphOutcome>& outcomes) {
  CensusReport report;
  report.graph_count = static_cast<long long>(outcomes.size());
  std::map<std::string, long long> profile_counts;
  for (const auto& outcome : outcomes) {
    ++profile_counts[outcome.profile];
    if (outcome.undecided) ++report.undecided_count;
    for (const auto& d : outcome.discrepancies) {
      report.discrepancies.push_back(d);
      if (!d.flagged && (d.kind == "implication" || d.kind == "fe_mismatch" ||
                         d.kind == "internal_error")) {
        report.ok = false;
      }
    }
  }
  report.profiles.assign(profile_counts.begin(), profile_counts.end());
  return report;
}

}  // namespace

CensusReport run_census(const CensusBounds& bounds, const CensusOptions& options) {
  const std::vector<LabeledGraph> graphs = enumerate_census_graphs(bounds);
  std::vector<GraphOutcome> outcomes(graphs.size());

  if (options.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
      outcomes[i] = evaluate_graph(graphs[i], options);
    }
#else
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      outcomes[i] = evaluate_graph(graphs[i], options);
    }
#endif
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      outcomes[i] = evaluate_graph(graphs[i], options);
    }
  }
  return merge_outcomes(outcomes);
}

CensusReport run_census_serial(const CensusBounds& bounds, const CensusOptions& options) {
  CensusOptions serial = options;
  serial.parallel = false;
  return run_census(bounds, serial);
}

}  // namespace bkn
