#pragma once

#include <optional>
#include <vector>

#include "bkn/rational.hpp"

namespace bkn {

struct VarBound {
  std::optional<Rat> lower;
  std::optional<Rat> upper;
  bool lower_strict = false;
  bool upper_strict = false;
};

// Equality system with per-variable box bounds. Strict bounds are handled
// by a shared slack variable t: bounds tighten to [lower+t, upper-t] and
// feasibility requires the maximal t to be positive.
struct LinearProgram {
  int num_vars = 0;
  std::vector<std::vector<Rat>> eq_coeffs;  // each row sized num_vars
  std::vector<Rat> eq_rhs;
  std::vector<VarBound> bounds;  // sized num_vars; absent entries mean free
  bool maximize_slack = false;

  void add_equality(std::vector<Rat> coeffs, Rat rhs) {
    eq_coeffs.push_back(std::move(coeffs));
    eq_rhs.push_back(std::move(rhs));
  }
};

// Exact rational feasible point iff the system is feasible (two-phase
// simplex, Bland's rule). The returned point satisfies every constraint
// exactly, strict bounds included.
std::optional<std::vector<Rat>> lp_feasible(const LinearProgram& lp);

}  // namespace bkn
