// Compares the serial reference batch runner against the OpenMP runner on
// identical work and verifies they produce identical reports.
#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "opmat/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

std::string dump_all(const std::vector<opmat::Report>& reports) {
  std::string out;
  for (const opmat::Report& r : reports) {
    out += opmat::report_to_json(r).dump();
    out += '\n';
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP batch throughput"};
  std::string kind_name = "dense";
  long long count = 400, max_dim = 8;
  unsigned long long seed = 7;
  app.add_option("--kind", kind_name, "instance kind");
  app.add_option("--count", count, "instances per run");
  app.add_option("--max-dim", max_dim, "dimension bound");
  app.add_option("--seed", seed, "64-bit seed");
  CLI11_PARSE(app, argc, argv);

  const auto kind = opmat::gen_kind_from(kind_name);
  if (!kind) {
    std::cerr << "unknown kind: " << kind_name << "\n";
    return 3;
  }
  opmat::BatchSpec spec;
  spec.kind = *kind;
  spec.count = static_cast<int>(count);
  spec.seed = seed;
  spec.max_dim = static_cast<opmat::Index>(max_dim);

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = opmat::run_batch_serial(spec);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = opmat::run_batch_parallel(spec);
  const double t_parallel = seconds_since(t0);

  if (dump_all(serial) != dump_all(parallel)) {
    std::cerr << "FAIL: parallel reports differ from the serial reference\n";
    return 1;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "kind=" << kind_name << " count=" << count
            << " max_dim=" << max_dim << " threads=" << threads << "\n";
  std::cout << "serial:   " << t_serial << " s  ("
            << static_cast<double>(count) / t_serial << " inst/s)\n";
  std::cout << "parallel: " << t_parallel << " s  ("
            << static_cast<double>(count) / t_parallel << " inst/s)\n";
  std::cout << "speedup:  " << t_serial / t_parallel << "x\n";
  std::cout << "reports identical: yes\n";
  return 0;
}
