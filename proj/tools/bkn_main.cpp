#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bkn/census.hpp"
#include "bkn/graph_io.hpp"
#include "bkn/output.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bkn::ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !parts.empty()) parts.push_back(current);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine for labelled graphs of graph manifolds"};
  app.require_subcommand(1);

  // classify
  std::string classify_input;
  std::string property_filter;
  long long budget = 1'000'000;
  int max_denominator = 6;
  std::string format = "json";
  bool flag_loops = false;
  auto* classify = app.add_subcommand("classify", "decide the seven properties of a graph");
  classify->add_option("input", classify_input, "graph file (JSON)")->required();
  classify->add_option("--property", property_filter, "emit only this property (Im,HI,F,E,VF,VE,NPC)");
  classify->add_option("--budget", budget, "exhaustive enumeration limit for E/VE");
  classify->add_option("--max-denominator", max_denominator, "a-grid bound for certificate search");
  classify->add_option("--format", format, "output format (json)");
  classify->add_flag("--flag-loops", flag_loops, "demote loop caveats to warnings");

  // check
  std::string check_graph, check_cert;
  auto* check = app.add_subcommand("check", "validate a certificate against a graph");
  check->add_option("graph", check_graph, "graph file (JSON)")->required();
  check->add_option("certificate", check_cert, "certificate file (JSON)")->required();

  // census
  bkn::CensusBounds bounds = bkn::CensusBounds::defaults();
  std::string charges_csv = "-1,-1/2,0,1/2,1";
  std::string indices_csv = "1,2";
  bool serial = false;
  auto* census = app.add_subcommand("census", "enumerate and cross-validate labelled graphs");
  census->add_option("--max-vertices", bounds.max_vertices, "vertex bound (default 3)");
  census->add_option("--charges", charges_csv, "comma-separated charge set");
  census->add_option("--indices", indices_csv, "comma-separated index set");
  census->add_option("--max-edges", bounds.max_edges, "geometric edge bound (default 4)");
  census->add_flag("--loops", bounds.loops, "include loop edges");
  census->add_flag("--serial", serial, "use the serial reference runner");
  census->add_option("--budget", budget, "exhaustive enumeration limit for E/VE");
  census->add_option("--max-denominator", max_denominator, "a-grid bound for numeric search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      if (format != "json") {
        std::cerr << "unsupported format '" << format << "'\n";
        return 2;
      }
      bkn::ClassifyOptions opts;
      opts.budget = budget;
      opts.numeric.max_denominator = max_denominator;
      opts.flag_loops = flag_loops;
      if (!property_filter.empty()) {
        auto p = bkn::parse_property(property_filter);
        if (!p) {
          std::cerr << "unknown property '" << property_filter << "'\n";
          return 2;
        }
        opts.only = *p;
      }
      const bkn::LabeledGraph g = bkn::parse_graph(read_file(classify_input));
      const bkn::ClassifyRender render = bkn::render_classify(g, opts);
      std::cout << render.text;
      return render.any_undecided ? 3 : 0;
    }

    if (*check) {
      const bkn::LabeledGraph g = bkn::parse_graph(read_file(check_graph));
      const bkn::BknSolution sol = bkn::parse_certificate(g, read_file(check_cert));
      const bkn::CheckReport report = bkn::check_certificate(g, sol);
      std::cout << bkn::render_check(report);
      return report.valid ? 0 : 1;
    }

    if (*census) {
      bounds.charges.clear();
      for (const auto& part : split_csv(charges_csv)) {
        if (part.empty()) continue;
        bounds.charges.push_back(bkn::parse_rational(part));
      }
      bounds.indices.clear();
      for (const auto& part : split_csv(indices_csv)) {
        if (part.empty()) continue;
        const long long b = std::stoll(part);
        if (b == 0) {
          std::cerr << "index set must not contain 0\n";
          return 2;
        }
        bounds.indices.push_back(b);
      }
      bkn::CensusOptions opts;
      opts.budget = budget;
      opts.numeric.max_denominator = max_denominator;
      opts.parallel = !serial;
      const bkn::CensusReport report = bkn::run_census(bounds, opts);
      std::cout << bkn::render_census(bounds, report);
      return report.ok ? 0 : 1;
    }
  } catch (const bkn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
