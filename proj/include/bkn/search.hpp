#pragma once

#include <optional>
#include <string>

#include "bkn/certificate.hpp"
#include "bkn/decide.hpp"
#include "bkn/graph.hpp"

namespace bkn {

enum class SearchStatus {
  Found,      // certificate found (always validates exactly)
  NotFound,   // enumeration completed without a find
  Exhausted,  // budget cut the enumeration short; absence proves nothing
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<BknSolution> solution;
  std::string note;
};

// Complete decision for F and E at desk scale. F delegates to the
// nowhere-zero-kernel route; E enumerates supports and symmetric unit
// gamma patterns and solves for a > 0 exactly. Throws BudgetExceeded when
// the E enumeration does not fit the budget.
SearchResult search_certificate_exact(const LabeledGraph& g, PropertyId variant,
                                      long long budget);

struct NumericSearchOptions {
  int max_denominator = 6;       // bound on the sum of the integer a-grid
  long long budget = 1'000'000;  // grid points examined before giving up
};

// Best-effort one-sided search for Im, HI, VF, VE, NPC: enumerates support
// patterns and a rational a-grid; for fixed a the equation is linear in
// gamma and solved exactly. A find always validates; absence is not a
// refutation.
SearchResult search_certificate_numeric(const LabeledGraph& g, PropertyId variant,
                                        const NumericSearchOptions& opts = {});

}  // namespace bkn
