#include "bkn/graph.hpp"

#include <algorithm>
#include <set>

namespace bkn {

int LabeledGraph::vertex_index(const std::string& id) const {
  auto it = vertex_ids.find(id);
  return it == vertex_ids.end() ? -1 : it->second;
}

int LabeledGraph::edge_index(const std::string& id) const {
  auto it = edge_ids.find(id);
  return it == edge_ids.end() ? -1 : it->second;
}

int LabeledGraph::dart_index(const std::string& id) const {
  if (id.size() < 2) return -1;
  const char dir = id.back();
  if (dir != '+' && dir != '-') return -1;
  const int e = edge_index(id.substr(0, id.size() - 1));
  if (e < 0) return -1;
  return 2 * e + (dir == '-' ? 1 : 0);
}

std::vector<std::string> LabeledGraph::vertex_id_list() const {
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  for (const auto& v : vertices) ids.push_back(v.id);
  return ids;
}

bool LabeledGraph::has_loop_at_charged_vertex() const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (is_loop(static_cast<int>(e)) &&
        vertices[tail(edges[e].dart_pos)].charge != 0) {
      return true;
    }
  }
  return false;
}

LabeledGraph LabeledGraph::build(const std::vector<std::pair<std::string, Rat>>& vertices,
                                 const std::vector<EdgeSpec>& edges) {
  LabeledGraph g;
  g.vertices.reserve(vertices.size());
  for (const auto& [id, charge] : vertices) {
    if (id.empty()) throw GraphError("empty vertex id");
    g.vertices.push_back(Vertex{id, charge});
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!g.vertex_ids.emplace(g.vertices[i].id, static_cast<int>(i)).second) {
      throw GraphError("duplicate vertex id '" + g.vertices[i].id + "'");
    }
  }

  std::vector<EdgeSpec> sorted = edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  g.out_darts.assign(g.vertices.size(), {});
  for (const auto& spec : sorted) {
    if (spec.id.empty()) throw GraphError("empty edge id");
    if (spec.b == 0) {
      throw GraphError("zero intersection index on edge '" + spec.id + "'");
    }
    const int t = g.vertex_index(spec.tail);
    const int h = g.vertex_index(spec.head);
    if (t < 0) throw GraphError("edge '" + spec.id + "' references unknown vertex '" + spec.tail + "'");
    if (h < 0) throw GraphError("edge '" + spec.id + "' references unknown vertex '" + spec.head + "'");
    const int e = static_cast<int>(g.edges.size());
    if (!g.edge_ids.emplace(spec.id, e).second) {
      throw GraphError("duplicate edge id '" + spec.id + "'");
    }
    const int dp = 2 * e;
    const int dm = 2 * e + 1;
    g.darts.push_back(Dart{spec.id + "+", t, dm, spec.b});
    g.darts.push_back(Dart{spec.id + "-", h, dp, spec.b});
    g.edges.push_back(GeometricEdge{spec.id, dp});
    g.out_darts[t].push_back(dp);
    g.out_darts[h].push_back(dm);
  }
  return g;
}

std::vector<std::string> validate(const LabeledGraph& g) {
  std::vector<std::string> violations;
  const int nd = static_cast<int>(g.darts.size());
  for (int d = 0; d < nd; ++d) {
    const Dart& dart = g.darts[d];
    if (dart.opp < 0 || dart.opp >= nd) {
      violations.push_back("dart '" + dart.id + "': involution out of range");
      continue;
    }
    if (dart.opp == d) {
      violations.push_back("self-paired dart '" + dart.id + "'");
      continue;
    }
    if (g.darts[dart.opp].opp != d) {
      violations.push_back("dart '" + dart.id + "': involution not self-inverse");
    }
    if (dart.b == 0) {
      violations.push_back("dart '" + dart.id + "': zero intersection index");
    }
    if (d < dart.opp && dart.b != g.darts[dart.opp].b) {
      violations.push_back("index mismatch on edge '" + g.edges[d / 2].id + "'");
    }
    if (dart.tail < 0 || dart.tail >= static_cast<int>(g.vertices.size())) {
      violations.push_back("dart '" + dart.id + "': tail out of range");
    }
  }
  // boundary lists must partition the darts by tail
  std::set<int> seen;
  for (std::size_t v = 0; v < g.out_darts.size(); ++v) {
    for (int d : g.out_darts[v]) {
      if (d < 0 || d >= nd || g.darts[d].tail != static_cast<int>(v)) {
        violations.push_back("boundary list of vertex '" + g.vertices[v].id + "' inconsistent");
      } else if (!seen.insert(d).second) {
        violations.push_back("dart '" + g.darts[d].id + "' listed twice in boundaries");
      }
    }
  }
  if (static_cast<int>(seen.size()) != nd) {
    violations.push_back("boundary lists do not cover all darts");
  }
  return violations;
}

}  // namespace bkn
