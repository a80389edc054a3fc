#pragma once

#include <stdexcept>
#include <string>

#include "bkn/graph.hpp"

namespace bkn {

// Raised on malformed input documents; message contains 1-based
// line/column when the failure is a JSON syntax error.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input format (JSON):
//   { "vertices": [ {"id": "v1", "charge": "1/2"}, ... ],
//     "edges":    [ {"id": "e1", "ends": ["v1","v2"], "b": 1}, ... ] }
// Charges are strings "p" or "p/q"; b is a nonzero JSON integer.
LabeledGraph parse_graph(const std::string& text);

// Deterministic rendering; parse_graph(serialize_graph(g)) reproduces g.
std::string serialize_graph(const LabeledGraph& g);

}  // namespace bkn
