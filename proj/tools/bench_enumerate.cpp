// Times the serial reference sweep against the chunked parallel one and
// checks they agree. Usage: bench_enumerate [n_max=7] [jobs=<threads>]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eccbounds/enumerate.hpp"
#include "eccbounds/scan.hpp"

using namespace ecc;

namespace {
template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}
}  // namespace

int main(int argc, char** argv) {
  int n_max = argc > 1 ? std::atoi(argv[1]) : 7;
  int jobs = argc > 2 ? std::atoi(argv[2]) :
#ifdef _OPENMP
                      omp_get_max_threads();
#else
                      1;
#endif
  if (n_max < 4 || n_max > kEnumGraphBudget || jobs < 1) {
    std::fprintf(stderr, "usage: bench_enumerate [n_max in 4..%d] [jobs >= 1]\n",
                 kEnumGraphBudget);
    return 2;
  }

  std::printf("%-3s %12s %12s %15s %8s\n", "n", "connected", "serial_ms",
              "parallel_ms", "speedup");
  for (int n = 4; n <= n_max; ++n) {
    std::uint64_t serial = 0, parallel = 0;
    double ts = time_ms([&] { serial = connected_graph_count(n, 1); });
    double tp = time_ms([&] { parallel = connected_graph_count(n, jobs); });
    if (serial != parallel) {
      std::fprintf(stderr, "count mismatch at n=%d: serial=%llu parallel=%llu\n", n,
                   static_cast<unsigned long long>(serial),
                   static_cast<unsigned long long>(parallel));
      return 1;
    }
    std::printf("%-3d %12llu %12.2f %15.2f %8.2f\n", n,
                static_cast<unsigned long long>(serial), ts, tp, ts / (tp > 0 ? tp : 1));
  }

  ScanRow a, b;
  double ts = time_ms([&] { a = scan_sigma2_max(n_max, true, 1); });
  double tp = time_ms([&] { b = scan_sigma2_max(n_max, true, jobs); });
  bool same = a.best_value == b.best_value && a.witness_graph6 == b.witness_graph6;
  std::printf("sigma2max n=%d: best=%s witness=%s serial %.2f ms, %d jobs %.2f ms -> %s\n",
              n_max, a.best_value.to_string().c_str(), a.witness_graph6.c_str(), ts, jobs,
              tp, same ? "identical" : "MISMATCH");
  return same ? 0 : 1;
}
