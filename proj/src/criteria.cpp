#include "bkn/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bkn {

SignAssignment SignAssignment::constant(const LabeledGraph& g, int value) {
  SignAssignment eps;
  for (const auto& e : g.edges) eps.sign[e.id] = value;
  return eps;
}

int SignAssignment::at(const std::string& edge_id) const {
  auto it = sign.find(edge_id);
  if (it == sign.end()) {
    throw std::invalid_argument("sign assignment missing edge '" + edge_id + "'");
  }
  if (it->second != 1 && it->second != -1) {
    throw std::invalid_argument("sign assignment not in {+1,-1} on edge '" + edge_id + "'");
  }
  return it->second;
}

RatMatrix build_A_epsilon(const LabeledGraph& g, const SignAssignment& eps) {
  RatMatrix a = RatMatrix::square(g.vertex_id_list());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    a.at(v, v) = g.vertices[v].charge;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int d : g.out_darts[v]) {
      const int h = g.head(d);
      const Rat term = Rat(eps.at(g.edges[g.edge_of_dart(d)].id)) / rat_of(g.b(d));
      a.at(static_cast<int>(v), h) -= term;
    }
  }
  return a;
}

RatMatrix build_A_plus(const LabeledGraph& g) {
  RatMatrix a = RatMatrix::square(g.vertex_id_list());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    a.at(v, v) = rat_abs(g.vertices[v].charge);
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int d : g.out_darts[v]) {
      const int h = g.head(d);
      a.at(static_cast<int>(v), h) -= Rat(1) / rat_of(std::abs(g.b(d)));
    }
  }
  return a;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SignedComponents signed_components(const LabeledGraph& g) {
  SignedComponents sc;
  const int n = static_cast<int>(g.vertices.size());

  UnionFind uf(n);
  for (const auto& e : g.edges) {
    const int t = g.tail(e.dart_pos);
    const int h = g.head(e.dart_pos);
    if (g.vertices[t].charge * g.vertices[h].charge > 0) uf.unite(t, h);
  }

  // classes keyed by root; vertices are already id-sorted, so member lists
  // and the root order are lexicographic
  std::vector<int> class_index(n, -1);
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (class_index[root] < 0) {
      class_index[root] = static_cast<int>(sc.classes.size());
      sc.classes.emplace_back();
      sc.class_sign.push_back(0);
    }
    const int c = class_index[root];
    sc.classes[c].push_back(g.vertices[v].id);
    sc.class_of[g.vertices[v].id] = c;
    const int sgn = rat_sgn(g.vertices[v].charge);
    if (sgn != 0) sc.class_sign[c] = sgn;  // classes are sign-pure
  }
  const int nc = static_cast<int>(sc.classes.size());

  // E0: edges not absorbed. An edge is absorbed iff both ends fall in one
  // class and that class contains a vertex of nonzero charge.
  std::vector<std::pair<int, int>> quotient_adj;  // class pairs for E0 edges
  for (const auto& e : g.edges) {
    const int ct = sc.class_of[g.vertices[g.tail(e.dart_pos)].id];
    const int ch = sc.class_of[g.vertices[g.head(e.dart_pos)].id];
    const bool absorbed = (ct == ch) && sc.class_sign[ct] != 0;
    if (!absorbed) {
      sc.quotient_edges.push_back(e.id);
      quotient_adj.emplace_back(ct, ch);
    }
  }

  // signed 2-coloring: sigma flips across every quotient edge, equals +1 on
  // positive classes and -1 on negative ones; all-zero components keep the
  // +1 seed at their smallest class
  std::vector<int> color(nc, 0);
  bool bipartite = true;
  for (int start = 0; start < nc && bipartite; ++start) {
    if (color[start] != 0) continue;
    std::vector<int> component;
    std::vector<int> queue{start};
    color[start] = 1;
    while (!queue.empty()) {
      const int c = queue.back();
      queue.pop_back();
      component.push_back(c);
      for (const auto& [a, b] : quotient_adj) {
        if (a != c && b != c) continue;
        if (a == b) {
          bipartite = false;  // quotient loop
          continue;
        }
        const int other = (a == c) ? b : a;
        if (color[other] == 0) {
          color[other] = -color[c];
          queue.push_back(other);
        } else if (color[other] != -color[c]) {
          bipartite = false;
        }
      }
      if (!bipartite) break;
    }
    if (!bipartite) break;
    // match forced signs, allowing one global flip per component
    int flip = 0;
    for (int c : component) {
      if (sc.class_sign[c] == 0) continue;
      const int needed = (color[c] == sc.class_sign[c]) ? 1 : -1;
      if (flip == 0) {
        flip = needed;
      } else if (flip != needed) {
        bipartite = false;
        break;
      }
    }
    if (flip == -1) {
      for (int c : component) color[c] = -color[c];
    }
  }

  sc.bipartite = bipartite;
  for (int v = 0; v < n; ++v) {
    const std::string& id = g.vertices[v].id;
    sc.s[id] = bipartite ? color[sc.class_of[id]] : 0;
  }
  return sc;
}

RatMatrix build_H(const LabeledGraph& g) {
  const SignedComponents sc = signed_components(g);
  RatMatrix h = RatMatrix::square(g.vertex_id_list());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    h.at(v, v) = Rat(sc.s.at(g.vertices[v].id)) * g.vertices[v].charge;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int d : g.out_darts[v]) {
      const int h_idx = g.head(d);
      if (static_cast<int>(v) == h_idx) {
        h.at(static_cast<int>(v), h_idx) -= Rat(1) / rat_of(std::abs(g.b(d)));
      } else if (g.vertices[v].charge * g.vertices[h_idx].charge > 0) {
        h.at(static_cast<int>(v), h_idx) -= Rat(1) / rat_of(std::abs(g.b(d)));
      }
    }
  }
  return h;
}

}  // namespace bkn
