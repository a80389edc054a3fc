#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkn/rational.hpp"

namespace bkn {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vertex {
  std::string id;
  Rat charge;  // k_v
};

// Directed half-edge. `opp` pairs darts into geometric edges and `tail`
// is the vertex the dart leaves. The intersection index b is stored per
// dart so that validate() can detect mismatched pairs.
struct Dart {
  std::string id;
  int tail = -1;
  int opp = -1;
  long long b = 0;
};

// Unordered dart pair {d, opp(d)}; dart_pos is the "+" dart.
struct GeometricEdge {
  std::string id;
  int dart_pos = -1;
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  long long b = 0;
};

// The labelled graph X_M: vertices carry rational charges, geometric
// edges carry nonzero integer indices, loops and multi-edges allowed,
// connectivity not required. Vertices and edges are kept sorted by id so
// every derived object (matrices, certificates, output) is deterministic.
struct LabeledGraph {
  std::vector<Vertex> vertices;       // sorted by id
  std::vector<Dart> darts;            // darts 2i ("+") and 2i+1 ("-") form edges[i]
  std::vector<GeometricEdge> edges;   // sorted by id
  std::vector<std::vector<int>> out_darts;  // boundary(v): darts with tail v

  std::map<std::string, int> vertex_ids;
  std::map<std::string, int> edge_ids;

  int tail(int dart) const { return darts[dart].tail; }
  int head(int dart) const { return darts[darts[dart].opp].tail; }
  int opp(int dart) const { return darts[dart].opp; }
  long long b(int dart) const { return darts[dart].b; }
  int edge_of_dart(int dart) const { return dart / 2; }
  bool is_loop(int edge) const {
    return tail(edges[edge].dart_pos) == head(edges[edge].dart_pos);
  }

  int vertex_index(const std::string& id) const;  // -1 if unknown
  int edge_index(const std::string& id) const;
  int dart_index(const std::string& id) const;    // "e1+" / "e1-", -1 if unknown

  std::vector<std::string> vertex_id_list() const;
  bool has_loop_at_charged_vertex() const;

  // Validates endpoints/indices/ids and assembles the dart structure.
  static LabeledGraph build(const std::vector<std::pair<std::string, Rat>>& vertices,
                            const std::vector<EdgeSpec>& edges);
};

// Invariant check; returns human-readable violations, empty iff valid.
std::vector<std::string> validate(const LabeledGraph& g);

}  // namespace bkn
