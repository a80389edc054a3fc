#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bkn/graph.hpp"

namespace bkn {

enum class PropertyId { Im, HI, F, E, VF, VE, NPC };

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::Im, PropertyId::HI, PropertyId::F, PropertyId::E,
    PropertyId::VF, PropertyId::VE, PropertyId::NPC};

std::string property_name(PropertyId p);
std::optional<PropertyId> parse_property(const std::string& name);

// Candidate solution {a_v, gamma_w} of the difference equation
//   sum over darts w leaving v of gamma_w a_head(w) / b_w = k_v a_v,
// tagged with the property variant whose side conditions it claims.
struct BknSolution {
  std::map<std::string, Rat> a;      // vertex id -> a_v
  std::map<std::string, Rat> gamma;  // dart id ("e1+"/"e1-") -> gamma_w
  PropertyId variant = PropertyId::Im;
};

struct Violation {
  std::string constraint;
  std::string location;
  std::string detail;
};

struct CheckReport {
  bool valid = false;
  std::map<std::string, Rat> residuals;  // vertex id -> residual
  std::vector<Violation> violations;
};

// Per-vertex residual of the difference equation, exact.
// Throws std::invalid_argument when sol is not dimensioned to g.
std::map<std::string, Rat> residual(const LabeledGraph& g, const BknSolution& sol);

// Validates residuals, the base solvability constraints (a >= 0, a not
// identically zero, |gamma| <= 1, gamma_w gamma_{-w} != -1) and the
// variant clause of sol.variant.
CheckReport check_certificate(const LabeledGraph& g, const BknSolution& sol);

// Zeroes gamma on every dart whose endpoints include a vertex with a = 0;
// residuals are preserved exactly.
BknSolution normalize_solution(const LabeledGraph& g, const BknSolution& sol);

// Certificate file format:
//   { "a": {"v1": "1", ...}, "gamma": {"e1+": "1/2", ...}, "variant": "NPC" }
BknSolution parse_certificate(const LabeledGraph& g, const std::string& text);
std::string serialize_certificate(const BknSolution& sol);

}  // namespace bkn
