#include "bkn/certificate.hpp"

#include <json.hpp>

#include "bkn/graph_io.hpp"
#include "bkn/rational.hpp"

namespace bkn {

std::string property_name(PropertyId p) {
  switch (p) {
    case PropertyId::Im: return "Im";
    case PropertyId::HI: return "HI";
    case PropertyId::F: return "F";
    case PropertyId::E: return "E";
    case PropertyId::VF: return "VF";
    case PropertyId::VE: return "VE";
    case PropertyId::NPC: return "NPC";
  }
  return "?";
}

std::optional<PropertyId> parse_property(const std::string& name) {
  for (PropertyId p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

void require_dimensioned(const LabeledGraph& g, const BknSolution& sol) {
  if (sol.a.size() != g.vertices.size() || sol.gamma.size() != g.darts.size()) {
    throw std::invalid_argument("solution not dimensioned to the graph");
  }
  for (const auto& v : g.vertices) {
    if (!sol.a.count(v.id)) {
      throw std::invalid_argument("solution missing vertex '" + v.id + "'");
    }
  }
  for (const auto& d : g.darts) {
    if (!sol.gamma.count(d.id)) {
      throw std::invalid_argument("solution missing dart '" + d.id + "'");
    }
  }
}

}  // namespace

std::map<std::string, Rat> residual(const LabeledGraph& g, const BknSolution& sol) {
  require_dimensioned(g, sol);
  std::map<std::string, Rat> res;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Rat acc(0);
    for (int d : g.out_darts[v]) {
      acc += sol.gamma.at(g.darts[d].id) * sol.a.at(g.vertices[g.head(d)].id) / rat_of(g.b(d));
    }
    acc -= g.vertices[v].charge * sol.a.at(g.vertices[v].id);
    res[g.vertices[v].id] = acc;
  }
  return res;
}

CheckReport check_certificate(const LabeledGraph& g, const BknSolution& sol) {
  CheckReport report;
  report.residuals = residual(g, sol);

  auto violate = [&report](std::string constraint, std::string location, std::string detail) {
    report.violations.push_back({std::move(constraint), std::move(location), std::move(detail)});
  };

  // base constraints
  bool a_nontrivial = false;
  for (const auto& [v, av] : sol.a) {
    if (av < 0) violate("a >= 0", v, "a = " + rat_to_string(av));
    if (av != 0) a_nontrivial = true;
  }
  if (!a_nontrivial) violate("a not identically zero", "", "trivial solution");
  for (const auto& [w, gw] : sol.gamma) {
    if (rat_abs(gw) > 1) violate("|gamma| <= 1", w, "gamma = " + rat_to_string(gw));
  }
  for (const auto& e : g.edges) {
    const Rat& gp = sol.gamma.at(g.darts[e.dart_pos].id);
    const Rat& gm = sol.gamma.at(g.darts[g.opp(e.dart_pos)].id);
    if (gp * gm == -1) {
      violate("gamma_w gamma_{-w} != -1", e.id, "product is -1");
    }
  }
  for (const auto& [v, r] : report.residuals) {
    if (r != 0) violate("residual = 0", v, "residual = " + rat_to_string(r));
  }

  const auto require_positive_a = [&] {
    for (const auto& [v, av] : sol.a) {
      if (av <= 0) violate("a > 0", v, "a = " + rat_to_string(av));
    }
  };
  const auto require_symmetric = [&] {
    for (const auto& e : g.edges) {
      const Rat& gp = sol.gamma.at(g.darts[e.dart_pos].id);
      const Rat& gm = sol.gamma.at(g.darts[g.opp(e.dart_pos)].id);
      if (gp != gm) violate("gamma_w = gamma_{-w}", e.id, "asymmetric");
    }
  };

  switch (sol.variant) {
    case PropertyId::Im:
      break;
    case PropertyId::HI: {
      require_positive_a();
      for (const auto& e : g.edges) {
        for (int d : {e.dart_pos, g.opp(e.dart_pos)}) {
          const Rat& gw = sol.gamma.at(g.darts[d].id);
          const Rat& gv = sol.gamma.at(g.darts[g.opp(d)].id);
          if (rat_abs(gw) == 1 && gv != gw) {
            violate("|gamma_w| = 1 implies gamma_{-w} = gamma_w", g.darts[d].id, "boundary dart");
          }
        }
      }
      break;
    }
    case PropertyId::F: {
      require_positive_a();
      require_symmetric();
      for (const auto& [w, gw] : sol.gamma) {
        if (gw != 1 && gw != -1) {
          violate("gamma in {+1,-1}", w, "gamma = " + rat_to_string(gw));
        }
      }
      if (report.violations.empty()) {
        // vertex sign function with gamma = eps_tail eps_head, by propagation
        std::vector<int> eps(g.vertices.size(), 0);
        bool consistent = true;
        for (std::size_t start = 0; start < g.vertices.size() && consistent; ++start) {
          if (eps[start] != 0) continue;
          eps[start] = 1;
          std::vector<int> queue{static_cast<int>(start)};
          while (!queue.empty() && consistent) {
            const int v = queue.back();
            queue.pop_back();
            for (int d : g.out_darts[v]) {
              const int h = g.head(d);
              const int needed = eps[v] * (sol.gamma.at(g.darts[d].id) == 1 ? 1 : -1);
              if (eps[h] == 0) {
                eps[h] = needed;
                queue.push_back(h);
              } else if (eps[h] != needed) {
                consistent = false;
                break;
              }
            }
          }
        }
        if (!consistent) {
          violate("gamma = eps_tail * eps_head", "", "no consistent vertex sign function");
        }
      }
      break;
    }
    case PropertyId::E: {
      // per edge: gamma = +-1 symmetric, or some endpoint v has a_v = 0
      // with every dart at v carrying gamma = 0
      auto vertex_zeroed = [&](int v) {
        if (sol.a.at(g.vertices[v].id) != 0) return false;
        for (int d : g.out_darts[v]) {
          if (sol.gamma.at(g.darts[d].id) != 0) return false;
          if (sol.gamma.at(g.darts[g.opp(d)].id) != 0) return false;
        }
        return true;
      };
      for (const auto& e : g.edges) {
        const Rat& gp = sol.gamma.at(g.darts[e.dart_pos].id);
        const Rat& gm = sol.gamma.at(g.darts[g.opp(e.dart_pos)].id);
        const bool unit = (gp == gm) && (gp == 1 || gp == -1);
        if (unit) continue;
        if (vertex_zeroed(g.tail(e.dart_pos)) || vertex_zeroed(g.head(e.dart_pos))) continue;
        violate("gamma_w = gamma_{-w} = +-1 or zeroed endpoint", e.id, "neither clause holds");
      }
      break;
    }
    case PropertyId::VF:
      require_positive_a();
      require_symmetric();
      break;
    case PropertyId::VE:
      require_symmetric();
      break;
    case PropertyId::NPC: {
      require_positive_a();
      require_symmetric();
      for (const auto& [w, gw] : sol.gamma) {
        if (!(gw > -1 && gw < 1)) {
          violate("gamma in (-1,1)", w, "gamma = " + rat_to_string(gw));
        }
      }
      break;
    }
  }

  report.valid = report.violations.empty();
  return report;
}

BknSolution normalize_solution(const LabeledGraph& g, const BknSolution& sol) {
  require_dimensioned(g, sol);
  BknSolution out = sol;
  for (std::size_t di = 0; di < g.darts.size(); ++di) {
    const int d = static_cast<int>(di);
    const Rat& at = sol.a.at(g.vertices[g.tail(d)].id);
    const Rat& ah = sol.a.at(g.vertices[g.head(d)].id);
    if (at * ah == 0) out.gamma[g.darts[di].id] = 0;
  }
  return out;
}

BknSolution parse_certificate(const LabeledGraph& g, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate: expected a JSON object");
  BknSolution sol;

  auto variant_it = doc.find("variant");
  if (variant_it == doc.end() || !variant_it->is_string()) {
    throw ParseError("certificate: missing string field 'variant'");
  }
  auto parsed = parse_property(variant_it->get<std::string>());
  if (!parsed) {
    throw ParseError("certificate: unknown variant '" + variant_it->get<std::string>() + "'");
  }
  sol.variant = *parsed;

  auto read_map = [&](const char* key, auto&& valid_id) {
    std::map<std::string, Rat> out;
    auto it = doc.find(key);
    if (it == doc.end() || !it->is_object()) {
      throw ParseError(std::string("certificate: missing object field '") + key + "'");
    }
    for (const auto& [id, value] : it->items()) {
      if (!valid_id(id)) {
        throw ParseError(std::string("certificate: '") + key + "' references unknown id '" + id + "'");
      }
      if (!value.is_string()) {
        throw ParseError("certificate: value of '" + id + "' must be a string rational");
      }
      try {
        out[id] = parse_rational(value.template get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError("certificate: '" + id + "': " + e.what());
      }
    }
    return out;
  };

  sol.a = read_map("a", [&](const std::string& id) { return g.vertex_index(id) >= 0; });
  sol.gamma = read_map("gamma", [&](const std::string& id) { return g.dart_index(id) >= 0; });

  for (const auto& v : g.vertices) {
    if (!sol.a.count(v.id)) throw ParseError("certificate: missing a[" + v.id + "]");
  }
  for (const auto& d : g.darts) {
    if (!sol.gamma.count(d.id)) throw ParseError("certificate: missing gamma[" + d.id + "]");
  }
  return sol;
}

std::string serialize_certificate(const BknSolution& sol) {
  nlohmann::ordered_json doc;
  doc["a"] = nlohmann::ordered_json::object();
  for (const auto& [v, av] : sol.a) doc["a"][v] = rat_to_string(av);
  doc["gamma"] = nlohmann::ordered_json::object();
  for (const auto& [w, gw] : sol.gamma) doc["gamma"][w] = rat_to_string(gw);
  doc["variant"] = property_name(sol.variant);
  return doc.dump(2) + "\n";
}

}  // namespace bkn
