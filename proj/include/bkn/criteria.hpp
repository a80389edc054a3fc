#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkn/graph.hpp"
#include "bkn/matrix.hpp"

namespace bkn {

// Edge sign pattern, constant on each dart pair.
struct SignAssignment {
  std::map<std::string, int> sign;  // edge id -> +1 / -1

  static SignAssignment constant(const LabeledGraph& g, int value);
  int at(const std::string& edge_id) const;
};

// Quotient of the graph by the positive-charge-product equivalence,
// with the sign function s used by the H matrix.
struct SignedComponents {
  std::vector<std::vector<std::string>> classes;  // sorted members, sorted by representative
  std::map<std::string, int> class_of;            // vertex id -> class index
  std::vector<int> class_sign;                    // +1 / -1 / 0 per class
  std::vector<std::string> quotient_edges;        // E0, edge ids, sorted
  bool bipartite = false;
  std::map<std::string, int> s;                   // vertex id -> {0, +1, -1}
};

// A^eps: diagonal k_v - sum over loop darts of eps_w/b_w, off-diagonal
// -sum over connecting darts of eps_w/b_w. Symmetric for symmetric eps.
RatMatrix build_A_epsilon(const LabeledGraph& g, const SignAssignment& eps);

// A^+: absolute-value variant (|k_v| on the diagonal, 1/|b_w| everywhere).
RatMatrix build_A_plus(const LabeledGraph& g);

SignedComponents signed_components(const LabeledGraph& g);

// H: diagonal s(v) k_v - sum over loop darts of 1/|b_w|; off-diagonal
// -sum of 1/|b_w| where the charge product is positive, else 0.
RatMatrix build_H(const LabeledGraph& g);

}  // namespace bkn
