#pragma once

#include <string>
#include <vector>

#include "bkn/graph.hpp"
#include "bkn/search.hpp"

namespace bkn {

struct CensusBounds {
  int max_vertices = 3;
  std::vector<Rat> charges;        // assigned to every vertex in order
  std::vector<long long> indices;  // assigned to every edge in order
  int max_edges = 4;               // geometric edges
  bool loops = false;

  static CensusBounds defaults();
};

struct CensusOptions {
  long long budget = 1'000'000;  // exhaustive limit for E/VE deciders
  NumericSearchOptions numeric;
  bool parallel = true;
};

struct CensusDiscrepancy {
  std::string kind;  // implication | fe_mismatch | numeric_decider_conflict |
                     // flagged_no_witness | certificate_invalid | normalization |
                     // internal_error
  std::string graph;
  std::string property;
  std::string detail;
  bool flagged = false;  // graph has a loop at a charged vertex
};

struct CensusReport {
  long long graph_count = 0;
  std::vector<std::pair<std::string, long long>> profiles;  // profile -> count, sorted
  std::vector<CensusDiscrepancy> discrepancies;
  long long undecided_count = 0;
  bool ok = true;  // no implication violations / F,E mismatches on unflagged graphs

  bool operator==(const CensusReport&) const;
};

inline bool operator==(const CensusDiscrepancy& a, const CensusDiscrepancy& b) {
  return a.kind == b.kind && a.graph == b.graph && a.property == b.property &&
         a.detail == b.detail && a.flagged == b.flagged;
}

// Enumerates every labelled graph within the bounds (labelled counts;
// relabelings are not deduplicated), classifies each one, and cross-checks
// deciders against the certificate searches, the implication diagram, and
// normalization. The parallel runner and the serial reference produce
// identical reports.
CensusReport run_census(const CensusBounds& bounds, const CensusOptions& options);
CensusReport run_census_serial(const CensusBounds& bounds, const CensusOptions& options);

// All graphs within the bounds, in enumeration order (used by the runners
// and by the benchmark).
std::vector<LabeledGraph> enumerate_census_graphs(const CensusBounds& bounds);

// Compact one-line description used in census reports.
std::string describe_graph(const LabeledGraph& g);

}  // namespace bkn
