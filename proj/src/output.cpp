#include "bkn/output.hpp"

#include <json.hpp>

#include "bkn/criteria.hpp"

namespace bkn {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json witness_json(const Witness& w) {
  ordered_json out;
  out["summary"] = w.summary;
  if (!w.matrix.empty()) out["matrix"] = w.matrix;
  if (w.inertia) {
    out["inertia"] = {{"plus", w.inertia->n_plus},
                      {"zero", w.inertia->n_zero},
                      {"minus", w.inertia->n_minus}};
  }
  if (w.kernel) {
    ordered_json kernel;
    for (int i = 0; i < w.kernel->size(); ++i) {
      kernel[w.kernel->labels[i]] = rat_to_string(w.kernel->values[i]);
    }
    out["kernel"] = std::move(kernel);
  }
  if (!w.subset.empty()) out["subset"] = w.subset;
  if (w.epsilon) {
    ordered_json eps;
    for (const auto& [edge, sign] : w.epsilon->sign) eps[edge] = sign;
    out["epsilon"] = std::move(eps);
  }
  return out;
}

ordered_json certificate_json(const BknSolution& sol) {
  ordered_json out;
  out["a"] = ordered_json::object();
  for (const auto& [v, av] : sol.a) out["a"][v] = rat_to_string(av);
  out["gamma"] = ordered_json::object();
  for (const auto& [w, gw] : sol.gamma) out["gamma"][w] = rat_to_string(gw);
  out["variant"] = property_name(sol.variant);
  return out;
}

}  // namespace

ClassifyRender render_classify(const LabeledGraph& g, const ClassifyOptions& opts) {
  ClassifyRender render;
  ordered_json doc;
  doc["format"] = "v1";

  ordered_json warnings = ordered_json::array();
  if (g.vertices.empty()) {
    warnings.push_back("empty graph: the class of graph manifolds presumes a nonempty "
                       "JSJ structure; results are formal");
  } else if (g.vertices.size() == 1 && g.edges.empty()) {
    warnings.push_back("single vertex without edges: degenerate input; results are formal");
  }

  doc["graph"] = {{"vertices", g.vertices.size()}, {"edges", g.edges.size()}};

  const SignedComponents sc = signed_components(g);
  ordered_json sc_json;
  sc_json["classes"] = sc.classes;
  sc_json["quotient_edges"] = sc.quotient_edges;
  sc_json["bipartite"] = sc.bipartite;
  ordered_json s_json;
  for (const auto& v : g.vertices) s_json[v.id] = sc.s.at(v.id);
  sc_json["s"] = std::move(s_json);

  ordered_json matrices;
  matrices["labels"] = g.vertex_id_list();
  matrices["A"] = matrix_json(build_A_epsilon(g, SignAssignment::constant(g, 1)));
  matrices["A_plus"] = matrix_json(build_A_plus(g));
  matrices["H"] = matrix_json(build_H(g));

  const Classification cls = classify_all(g, opts.budget);

  ordered_json verdicts;
  for (const auto& entry : cls.entries) {
    if (opts.only && *opts.only != entry.property) continue;
    ordered_json v;
    if (!entry.verdict) {
      v["undecided"] = entry.undecided_reason;
      render.any_undecided = true;
    } else {
      v["holds"] = entry.verdict->holds;
      if (entry.verdict->witness) v["witness"] = witness_json(*entry.verdict->witness);
      std::optional<BknSolution> certificate = entry.verdict->certificate;
      if (!certificate && entry.verdict->holds) {
        switch (entry.property) {
          case PropertyId::Im:
          case PropertyId::HI:
          case PropertyId::VF:
          case PropertyId::VE:
          case PropertyId::NPC: {
            const SearchResult search =
                search_certificate_numeric(g, entry.property, opts.numeric);
            if (search.status == SearchStatus::Found) certificate = search.solution;
            break;
          }
          default:
            break;
        }
      }
      if (certificate) v["certificate"] = certificate_json(*certificate);
      if (entry.verdict->caveat) {
        if (opts.flag_loops) {
          warnings.push_back(property_name(entry.property) + ": " + *entry.verdict->caveat);
        } else {
          v["caveat"] = *entry.verdict->caveat;
        }
      }
    }
    verdicts[property_name(entry.property)] = std::move(v);
  }

  doc["warnings"] = std::move(warnings);
  doc["signed_components"] = std::move(sc_json);
  doc["matrices"] = std::move(matrices);
  doc["verdicts"] = std::move(verdicts);
  doc["implications"] = {{"violations", cls.implication_violations}};

  render.text = doc.dump(2) + "\n";
  return render;
}

std::string render_check(const CheckReport& report) {
  ordered_json doc;
  doc["valid"] = report.valid;
  ordered_json residuals;
  for (const auto& [v, r] : report.residuals) residuals[v] = rat_to_string(r);
  doc["residuals"] = std::move(residuals);
  ordered_json violations = ordered_json::array();
  for (const auto& violation : report.violations) {
    violations.push_back({{"constraint", violation.constraint},
                          {"location", violation.location},
                          {"detail", violation.detail}});
  }
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string render_census(const CensusBounds& bounds, const CensusReport& report) {
  ordered_json doc;
  ordered_json bounds_json;
  bounds_json["max_vertices"] = bounds.max_vertices;
  ordered_json charges = ordered_json::array();
  for (const auto& k : bounds.charges) charges.push_back(rat_to_string(k));
  bounds_json["charges"] = std::move(charges);
  bounds_json["indices"] = bounds.indices;
  bounds_json["max_edges"] = bounds.max_edges;
  bounds_json["loops"] = bounds.loops;
  doc["bounds"] = std::move(bounds_json);

  doc["graph_count"] = report.graph_count;
  ordered_json order = ordered_json::array();
  for (PropertyId p : kAllProperties) order.push_back(property_name(p));
  doc["profile_order"] = std::move(order);
  ordered_json profiles = ordered_json::array();
  for (const auto& [profile, count] : report.profiles) {
    profiles.push_back({{"profile", profile}, {"count", count}});
  }
  doc["profiles"] = std::move(profiles);
  ordered_json discrepancies = ordered_json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back({{"kind", d.kind},
                             {"graph", d.graph},
                             {"property", d.property},
                             {"detail", d.detail},
                             {"flagged", d.flagged}});
  }
  doc["discrepancies"] = std::move(discrepancies);
  doc["undecided_count"] = report.undecided_count;
  doc["ok"] = report.ok;
  return doc.dump(2) + "\n";
}

}  // namespace bkn
