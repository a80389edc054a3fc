#pragma once

#include <optional>
#include <string>

#include "bkn/census.hpp"
#include "bkn/certificate.hpp"
#include "bkn/decide.hpp"
#include "bkn/graph.hpp"
#include "bkn/search.hpp"

namespace bkn {

struct ClassifyOptions {
  std::optional<PropertyId> only;  // --property filter
  long long budget = 1'000'000;
  NumericSearchOptions numeric;
  bool flag_loops = false;  // demote loop caveats to top-level warnings
};

struct ClassifyRender {
  std::string text;           // the JSON document
  bool any_undecided = false;
};

// Runs the full classification (deciders, implication report, certificate
// searches for positive verdicts) and renders the deterministic JSON
// document. Byte-identical across runs for identical input.
ClassifyRender render_classify(const LabeledGraph& g, const ClassifyOptions& opts);

std::string render_check(const CheckReport& report);

std::string render_census(const CensusBounds& bounds, const CensusReport& report);

}  // namespace bkn
