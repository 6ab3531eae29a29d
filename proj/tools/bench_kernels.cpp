// Benchmark of the OpenMP kernels against their serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "burnside/kernels.hpp"

using namespace burnside;

namespace {

template <typename F>
double time_best_of(F&& f, int reps = 3) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void bench_group(Group g) {
  SubgroupLattice lat(g);
  SliceTable st(lat);
  std::printf("%-8s order %3d, %3d slice classes\n", g.name().c_str(),
              g.order(), st.num_classes());

  std::vector<Int> ms, mp;
  double t_marks_serial = time_best_of([&] { ms = mark_matrix_serial(st); });
  double t_marks_par = time_best_of([&] { mp = mark_matrix_parallel(st); });
  std::printf("  marks    serial %8.4fs  parallel %8.4fs  speedup %5.2fx  %s\n",
              t_marks_serial, t_marks_par, t_marks_serial / t_marks_par,
              ms == mp ? "equal" : "MISMATCH");

  ProductTable ps, pp;
  double t_prod_serial = time_best_of([&] { ps = product_table_serial(st); });
  double t_prod_par = time_best_of([&] { pp = product_table_parallel(st); });
  std::printf("  products serial %8.4fs  parallel %8.4fs  speedup %5.2fx  %s\n",
              t_prod_serial, t_prod_par, t_prod_serial / t_prod_par,
              ps == pp ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bench_group(symmetric_group(4));
  bench_group(alternating_group(5));
  return 0;
}
