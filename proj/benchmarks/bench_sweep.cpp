// bench_sweep.cpp - serial vs OpenMP sweep timing on a representative grid
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iontherm/sweep.hpp"

using namespace iontherm;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  double step = 0.1;
  int fock_dim = 20;
  if (argc > 1) step = std::atof(argv[1]);
  if (argc > 2) fock_dim = std::atoi(argv[2]);
  if (step <= 0.0 || fock_dim < 2) {
    std::fprintf(stderr, "usage: %s [grid_step] [fock_dim]\n", argv[0]);
    return 1;
  }

  SystemParams base;
  base.fock_dim = fock_dim;
  const BathParams baths{0.5, 5.0, 1e-3};
  std::vector<double> axis;
  for (double x = 0.0; x <= 3.2 + 1e-9; x += step) axis.push_back(x);

  std::printf("grid %zux%zu, fock_dim %d\n", axis.size(), axis.size(), fock_dim);

  const auto t0 = Clock::now();
  const Grid2D serial = sweep_grid_serial(base, baths, axis, axis, Observable::current);
  const double ts = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("serial reference:  %7.2f s\n", ts);

#ifdef _OPENMP
  const int hw = omp_get_max_threads();
#else
  const int hw = 1;
#endif
  for (const int workers : {1, hw}) {
    const auto t1 = Clock::now();
    const Grid2D par = sweep_grid(base, baths, axis, axis, Observable::current, workers);
    const double tp = std::chrono::duration<double>(Clock::now() - t1).count();
    const bool identical =
        std::memcmp(par.values.data(), serial.values.data(),
                    sizeof(double) * serial.values.size()) == 0;
    std::printf("openmp %2d workers: %7.2f s  speedup %.2fx  output %s\n", workers, tp,
                ts / tp, identical ? "identical" : "MISMATCH");
    if (!identical) return 1;
  }
  return 0;
}
