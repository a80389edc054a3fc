#include "bkn/decide.hpp"

#include <algorithm>

namespace bkn {

namespace {

std::optional<std::string> loop_caveat(const LabeledGraph& g) {
  if (g.has_loop_at_charged_vertex()) {
    return "graph has a loop at a vertex with nonzero charge; the matrix "
           "criterion is known to disagree with the difference equation on "
           "such inputs";
  }
  return std::nullopt;
}

std::string inertia_text(const Inertia& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_zero) + "," +
         std::to_string(s.n_minus) + ")";
}

// Subsets of {0..n-1} as increasing index sequences in lexicographic
// order: {0}, {0,1}, {0,1,2}, {0,2}, {1}, ...
bool next_subset(std::vector<int>& s, int n) {
  if (s.empty()) {
    if (n == 0) return false;
    s.push_back(0);
    return true;
  }
  if (s.back() < n - 1) {
    s.push_back(s.back() + 1);
    return true;
  }
  s.pop_back();
  if (s.empty()) return false;
  ++s.back();
  return true;
}

int sgn_of(const Rat& r) { return rat_sgn(r); }

// Certificate a = |x| on S (0 outside), gamma = eps * sgn(x_tail) *
// sgn(x_head) on S-internal darts (0 elsewhere).
BknSolution support_certificate(const LabeledGraph& g, const std::vector<int>& support,
                                const std::vector<int>& edge_sign, const RatVector& x,
                                PropertyId variant) {
  std::vector<bool> in(g.vertices.size(), false);
  for (int v : support) in[v] = true;
  std::map<std::string, int> pos;
  for (int i = 0; i < x.size(); ++i) pos[x.labels[i]] = i;

  BknSolution sol;
  sol.variant = variant;
  for (const auto& v : g.vertices) {
    auto it = pos.find(v.id);
    sol.a[v.id] = it != pos.end() ? rat_abs(x.values[it->second]) : Rat(0);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int dp = g.edges[e].dart_pos;
    const int t = g.tail(dp);
    const int h = g.head(dp);
    Rat gamma(0);
    if (in[t] && in[h]) {
      gamma = Rat(edge_sign[e] * sgn_of(x.values[pos.at(g.vertices[t].id)]) *
                  sgn_of(x.values[pos.at(g.vertices[h].id)]));
    }
    sol.gamma[g.darts[dp].id] = gamma;
    sol.gamma[g.darts[g.opp(dp)].id] = gamma;
  }
  return sol;
}

void assert_valid(const LabeledGraph& g, const BknSolution& sol, const char* who) {
  const CheckReport report = check_certificate(g, sol);
  if (!report.valid) {
    std::string detail;
    for (const auto& v : report.violations) detail += " [" + v.constraint + " at " + v.location + "]";
    throw std::logic_error(std::string(who) + ": emitted certificate invalid:" + detail);
  }
}

// A^eps restricted to a support, built directly; only signs of internal
// edges are consulted (edges leaving the support play no role).
RatMatrix submatrix_A_epsilon(const LabeledGraph& g, const std::vector<int>& support,
                              const std::vector<int>& edge_sign) {
  std::vector<int> pos(g.vertices.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < support.size(); ++i) {
    pos[support[i]] = static_cast<int>(i);
    labels.push_back(g.vertices[support[i]].id);
  }
  RatMatrix m = RatMatrix::square(labels);
  for (std::size_t i = 0; i < support.size(); ++i) {
    m.at(i, i) = g.vertices[support[i]].charge;
  }
  for (int v : support) {
    for (int d : g.out_darts[v]) {
      const int h = g.head(d);
      if (pos[h] < 0) continue;
      m.at(pos[v], pos[h]) -= Rat(edge_sign[g.edge_of_dart(d)]) / rat_of(g.b(d));
    }
  }
  return m;
}

}  // namespace

Verdict decide_im_hi(const LabeledGraph& g) {
  Verdict verdict;
  verdict.property = PropertyId::Im;
  verdict.caveat = loop_caveat(g);
  if (g.vertices.empty()) return verdict;

  const RatMatrix a_plus = build_A_plus(g);
  const Inertia sig = inertia(a_plus);
  if (sig.n_minus > 0) {
    verdict.holds = true;
    Witness w;
    w.matrix = "A+";
    w.inertia = sig;
    w.summary = "A+ has a negative eigenvalue: inertia " + inertia_text(sig);
    verdict.witness = std::move(w);
    return verdict;
  }

  const RatMatrix a = build_A_epsilon(g, SignAssignment::constant(g, 1));
  bool all_nonneg = true, all_nonpos = true;
  for (int i = 0; i < a.rows(); ++i) {
    if (a.at(i, i) < 0) all_nonneg = false;
    if (a.at(i, i) > 0) all_nonpos = false;
  }
  if ((all_nonneg || all_nonpos) && sig.n_minus == 0 && sig.n_zero > 0) {
    verdict.holds = true;
    Witness w;
    w.matrix = "A+";
    w.inertia = sig;
    w.summary = "diagonal of A has uniform sign and A+ is semipositive and singular: inertia " +
                inertia_text(sig);
    verdict.witness = std::move(w);
  }
  return verdict;
}

Verdict decide_f(const LabeledGraph& g) {
  Verdict verdict;
  verdict.property = PropertyId::F;
  verdict.caveat = loop_caveat(g);
  if (g.vertices.empty()) return verdict;

  const RatMatrix a = build_A_epsilon(g, SignAssignment::constant(g, 1));
  auto x = nowhere_zero_kernel_vector(a);
  if (!x) return verdict;

  verdict.holds = true;
  Witness w;
  w.matrix = "A";
  w.kernel = *x;
  w.summary = "A is supersingular";
  verdict.witness = std::move(w);

  std::vector<int> support(g.vertices.size());
  for (std::size_t i = 0; i < support.size(); ++i) support[i] = static_cast<int>(i);
  const std::vector<int> signs(g.edges.size(), 1);
  BknSolution cert = support_certificate(g, support, signs, *x, PropertyId::F);
  assert_valid(g, cert, "decide_f");
  verdict.certificate = std::move(cert);
  return verdict;
}

Verdict decide_e(const LabeledGraph& g, long long exhaustive_limit) {
  const int n = static_cast<int>(g.vertices.size());
  const int m = static_cast<int>(g.edges.size());
  if (n + m >= 62 || (1LL << (n + m)) > exhaustive_limit) {
    throw BudgetExceeded("undecided: budget (2^" + std::to_string(m) + " * 2^" +
                         std::to_string(n) + " sign/subset combinations exceed limit)");
  }
  Verdict verdict;
  verdict.property = PropertyId::E;
  verdict.caveat = loop_caveat(g);

  std::vector<int> support;
  while (next_subset(support, n)) {
    std::vector<bool> in(n, false);
    for (int v : support) in[v] = true;
    std::vector<int> internal;  // edge indices with both ends in the support
    for (int e = 0; e < m; ++e) {
      const int dp = g.edges[e].dart_pos;
      if (in[g.tail(dp)] && in[g.head(dp)]) internal.push_back(e);
    }
    const int k = static_cast<int>(internal.size());
    for (long long mask = 0; mask < (1LL << k); ++mask) {
      std::vector<int> edge_sign(m, 1);
      for (int j = 0; j < k; ++j) {
        if (mask & (1LL << j)) edge_sign[internal[j]] = -1;
      }
      const RatMatrix sub = submatrix_A_epsilon(g, support, edge_sign);
      auto x = nowhere_zero_kernel_vector(sub);
      if (!x) continue;

      verdict.holds = true;
      Witness w;
      w.matrix = "A^eps";
      w.kernel = *x;
      for (int v : support) w.subset.push_back(g.vertices[v].id);
      SignAssignment eps;
      for (int e : internal) eps.sign[g.edges[e].id] = edge_sign[e];
      w.epsilon = std::move(eps);
      w.summary = "supersingular principal submatrix on {" +
                  [&] {
                    std::string s;
                    for (std::size_t i = 0; i < w.subset.size(); ++i) {
                      if (i) s += ",";
                      s += w.subset[i];
                    }
                    return s;
                  }() +
                  "}";
      verdict.witness = std::move(w);

      BknSolution cert = support_certificate(g, support, edge_sign, *x, PropertyId::E);
      assert_valid(g, cert, "decide_e");
      verdict.certificate = std::move(cert);
      return verdict;
    }
  }
  return verdict;
}

namespace {

// VF clause on a symmetric matrix: negative eigenvalue, or semipositive
// and supersingular.
struct VfEvidence {
  bool holds = false;
  Inertia sig;
  std::optional<RatVector> kernel;
};

VfEvidence vf_condition(const RatMatrix& h) {
  VfEvidence ev;
  ev.sig = inertia(h);
  if (ev.sig.n_minus > 0) {
    ev.holds = true;
    return ev;
  }
  ev.kernel = nowhere_zero_kernel_vector(h);
  ev.holds = ev.kernel.has_value();
  return ev;
}

}  // namespace

Verdict decide_vf(const LabeledGraph& g) {
  Verdict verdict;
  verdict.property = PropertyId::VF;
  verdict.caveat = loop_caveat(g);
  if (g.vertices.empty()) return verdict;

  const RatMatrix h = build_H(g);
  VfEvidence ev = vf_condition(h);
  if (!ev.holds) return verdict;
  verdict.holds = true;
  Witness w;
  w.matrix = "H";
  w.inertia = ev.sig;
  if (ev.sig.n_minus > 0) {
    w.summary = "H has a negative eigenvalue: inertia " + inertia_text(ev.sig);
  } else {
    w.kernel = ev.kernel;
    w.summary = "H is semipositive and supersingular: inertia " + inertia_text(ev.sig);
  }
  verdict.witness = std::move(w);
  return verdict;
}

Verdict decide_ve(const LabeledGraph& g, long long exhaustive_limit) {
  const int n = static_cast<int>(g.vertices.size());
  if (n >= 62 || (1LL << n) > exhaustive_limit) {
    throw BudgetExceeded("undecided: budget (2^" + std::to_string(n) +
                         " subsets exceed limit)");
  }
  Verdict verdict;
  verdict.property = PropertyId::VE;
  verdict.caveat = loop_caveat(g);
  if (n == 0) return verdict;

  const RatMatrix h = build_H(g);
  std::vector<int> support;
  while (next_subset(support, n)) {
    std::vector<std::string> keep;
    for (int v : support) keep.push_back(g.vertices[v].id);
    const RatMatrix sub = principal_submatrix(h, keep);
    VfEvidence ev = vf_condition(sub);
    if (!ev.holds) continue;
    verdict.holds = true;
    Witness w;
    w.matrix = "H";
    w.subset = keep;
    w.inertia = ev.sig;
    w.kernel = ev.kernel;
    w.summary = "principal submatrix of H satisfies the VF condition";
    verdict.witness = std::move(w);
    return verdict;
  }
  return verdict;
}

Verdict decide_npc(const LabeledGraph& g) {
  Verdict verdict;
  verdict.property = PropertyId::NPC;
  verdict.caveat = loop_caveat(g);
  if (g.vertices.empty()) return verdict;

  const RatMatrix h = build_H(g);
  if (h.is_zero()) {
    verdict.holds = true;
    Witness w;
    w.matrix = "H";
    w.inertia = Inertia{0, h.rows(), 0};
    w.summary = "H is the zero matrix";
    verdict.witness = std::move(w);
    return verdict;
  }
  const Inertia sig = inertia(h);
  if (sig.n_minus > 0) {
    verdict.holds = true;
    Witness w;
    w.matrix = "H";
    w.inertia = sig;
    w.summary = "H has a negative eigenvalue: inertia " + inertia_text(sig);
    verdict.witness = std::move(w);
  }
  return verdict;
}

const ClassifyEntry& Classification::entry(PropertyId p) const {
  for (const auto& e : entries) {
    if (e.property == p) return e;
  }
  throw std::logic_error("classification missing property " + property_name(p));
}

Classification classify_all(const LabeledGraph& g, long long exhaustive_limit) {
  Classification out;

  auto push = [&out](PropertyId p, auto&& decide) {
    ClassifyEntry entry;
    entry.property = p;
    try {
      Verdict v = decide();
      v.property = p;
      entry.verdict = std::move(v);
    } catch (const BudgetExceeded& e) {
      entry.undecided_reason = e.what();
      out.all_decided = false;
    }
    out.entries.push_back(std::move(entry));
  };

  const Verdict im_hi = decide_im_hi(g);
  push(PropertyId::Im, [&] { return im_hi; });
  push(PropertyId::HI, [&] { return im_hi; });
  push(PropertyId::F, [&] { return decide_f(g); });
  push(PropertyId::E, [&] { return decide_e(g, exhaustive_limit); });
  push(PropertyId::VF, [&] { return decide_vf(g); });
  push(PropertyId::VE, [&] { return decide_ve(g, exhaustive_limit); });
  push(PropertyId::NPC, [&] { return decide_npc(g); });

  if (out.all_decided) {
    std::map<PropertyId, bool> profile;
    for (const auto& e : out.entries) profile[e.property] = e.verdict->holds;
    out.implication_violations = check_implications(profile);
  }
  return out;
}

std::vector<std::string> check_implications(const std::map<PropertyId, bool>& profile) {
  auto holds = [&profile](PropertyId p) {
    auto it = profile.find(p);
    if (it == profile.end()) {
      throw std::invalid_argument("profile missing property " + property_name(p));
    }
    return it->second;
  };
  std::vector<std::string> violations;
  const std::vector<std::pair<PropertyId, PropertyId>> rules = {
      {PropertyId::F, PropertyId::E},   {PropertyId::F, PropertyId::VF},
      {PropertyId::E, PropertyId::VE},  {PropertyId::VF, PropertyId::VE},
      {PropertyId::VF, PropertyId::HI}, {PropertyId::VE, PropertyId::Im},
      {PropertyId::NPC, PropertyId::VF}};
  for (const auto& [from, to] : rules) {
    if (holds(from) && !holds(to)) {
      violations.push_back(property_name(from) + "=>" + property_name(to));
    }
  }
  if (holds(PropertyId::Im) != holds(PropertyId::HI)) {
    violations.push_back("Im<=>HI");
  }
  return violations;
}

}  // namespace bkn
