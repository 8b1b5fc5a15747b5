// Serial reference vs OpenMP kernels: wall time and result agreement.
//
//   bench_parallel [n] [A_max] [corpus instances]

#include "gon/siegel.hpp"
#include "gon/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace gon;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
  const long a_max = argc > 2 ? std::atol(argv[2]) : 20;
  const std::size_t instances = argc > 3 ? static_cast<std::size_t>(std::atol(argv[3])) : 100;
  const int threads = omp_get_max_threads();
  std::printf("threads %d\n", threads);

  ScanReport serial, parallel;
  const double ts = seconds([&] { serial = scan_constants_serial(n, a_max, true); });
  const double tp = seconds([&] { parallel = scan_constants(n, a_max, true, threads); });
  std::printf("scan n=%u A_max=%ld records=%zu  serial %.3fs  parallel %.3fs  speedup %.2fx  same=%s\n", n, a_max,
              serial.records.size(), ts, tp, ts / tp,
              serial.empirical_s == parallel.empirical_s && serial.records.size() == parallel.records.size() ? "yes"
                                                                                                          : "NO");

  CorpusOptions o;
  o.random_instances = instances;
  o.jobs = threads;
  CorpusReport cs, cp;
  const double cts = seconds([&] { cs = run_corpus_serial(o); });
  const double ctp = seconds([&] { cp = run_corpus(o); });
  std::printf("corpus instances=%zu  serial %.3fs  parallel %.3fs  speedup %.2fx  same=%s\n", cs.instances.size(), cts,
              ctp, cts / ctp, cs.violations == cp.violations && cs.candidates == cp.candidates ? "yes" : "NO");
  return 0;
}
