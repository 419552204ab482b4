// Compares the serial and OpenMP trial paths of the verification engine and
// checks that both render the same report.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dqcalc/verify.hpp"

namespace {

double timed_ms(const dqcalc::verify::Options& opt, std::string& rendered) {
  const auto t0 = std::chrono::steady_clock::now();
  const dqcalc::verify::Report report = dqcalc::verify::run(opt);
  const auto t1 = std::chrono::steady_clock::now();
  rendered = dqcalc::verify::render(report);
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timing of the verification suites"};
  std::size_t trials = 2000;
  std::uint64_t seed = 42;
  app.add_option("--trials", trials, "trial count");
  app.add_option("--seed", seed, "root seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads=%d\n", omp_get_max_threads());
#else
  std::printf("threads=1 (built without OpenMP)\n");
#endif
  std::printf("%-10s %-8s %12s %12s %9s\n", "suite", "trials", "serial_ms",
              "parallel_ms", "speedup");

  const char* names[] = {"oracle", "axioms", "roundtrip", "screw", "pauli"};
  int mismatches = 0;
  for (const char* name : names) {
    dqcalc::verify::Options opt;
    opt.suite = dqcalc::verify::parse_suite(name);
    opt.trials = trials;
    opt.seed = seed;
    opt.parallel = false;
    std::string serial_report;
    const double serial_ms = timed_ms(opt, serial_report);
    opt.parallel = true;
    std::string parallel_report;
    const double parallel_ms = timed_ms(opt, parallel_report);
    std::printf("%-10s %-8zu %12.1f %12.1f %9.2f\n", name, trials, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
    if (serial_report != parallel_report) {
      std::printf("  MISMATCH: serial and parallel reports differ for %s\n", name);
      ++mismatches;
    }
  }
  return mismatches == 0 ? 0 : 1;
}
