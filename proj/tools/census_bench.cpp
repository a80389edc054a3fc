// Benchmark comparing the serial census runner against the OpenMP one on
// identical bounds; also verifies that both produce the same report.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "bkn/census.hpp"

namespace {

double run_timed(const bkn::CensusBounds& bounds, const bkn::CensusOptions& options,
                 bkn::CensusReport& report) {
  const auto start = std::chrono::steady_clock::now();
  report = bkn::run_census(bounds, options);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel census benchmark"};
  bkn::CensusBounds bounds = bkn::CensusBounds::defaults();
  int max_denominator = 6;
  app.add_option("--max-vertices", bounds.max_vertices);
  app.add_option("--max-edges", bounds.max_edges);
  app.add_flag("--loops", bounds.loops);
  app.add_option("--max-denominator", max_denominator);
  CLI11_PARSE(app, argc, argv);

  bkn::CensusOptions options;
  options.numeric.max_denominator = max_denominator;

  std::cout << "graphs: " << bkn::enumerate_census_graphs(bounds).size() << "\n";
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif

  bkn::CensusReport serial_report, parallel_report;
  options.parallel = false;
  const double serial_s = run_timed(bounds, options, serial_report);
  std::cout << "serial:   " << serial_s << " s\n";

  options.parallel = true;
  const double parallel_s = run_timed(bounds, options, parallel_report);
  std::cout << "parallel: " << parallel_s << " s\n";
  std::cout << "speedup:  " << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x\n";

  if (!(serial_report == parallel_report)) {
    std::cout << "MISMATCH: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "reports identical\n";
  return 0;
}
