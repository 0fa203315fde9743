// Times the OpenMP kernels against their serial reference on the two hot
// loops: the exponential-sum sweep and the codeword weight tally. The sum
// workload is timed at both granularities: splitting each 6561-point sum
// across threads, and splitting the sweep of sums across threads.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermicode/codes.hpp"
#include "hermicode/counting.hpp"

using namespace hermicode;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

charsum::CycInt sweep_serial(const gf::FieldCtx& ctx, const counting::FormTable& table,
                             int reps, int threads_per_sum) {
  gf::PointDomain dom(ctx, gf::Subfield::Ft, table.form->dim());
  std::vector<gf::Fe> v(table.form->dim());
  charsum::CycInt acc(static_cast<int>(ctx.p()));
  const gf::Fe one = ctx.one();
  for (int r = 0; r < reps; ++r) {
    for (std::int64_t i = 0; i < dom.size(); ++i) {
      dom.decode(i, v);
      acc += (threads_per_sum > 1)
                 ? counting::brute_sum_parallel(ctx, table, v, one, threads_per_sum)
                 : counting::brute_sum_serial(ctx, table, v, one);
    }
  }
  return acc;
}

charsum::CycInt sweep_coarse(const gf::FieldCtx& ctx, const counting::FormTable& table,
                             int reps, int threads) {
  gf::PointDomain dom(ctx, gf::Subfield::Ft, table.form->dim());
  const gf::Fe one = ctx.one();
  charsum::CycInt acc(static_cast<int>(ctx.p()));
  for (int r = 0; r < reps; ++r) {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
      charsum::CycInt local(static_cast<int>(ctx.p()));
      std::vector<gf::Fe> v(table.form->dim());
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < dom.size(); ++i) {
        dom.decode(i, v);
        local += counting::brute_sum_serial(ctx, table, v, one);
      }
#pragma omp critical
      acc += local;
    }
#else
    (void)threads;
    std::vector<gf::Fe> v(table.form->dim());
    for (std::int64_t i = 0; i < dom.size(); ++i) {
      dom.decode(i, v);
      acc += counting::brute_sum_serial(ctx, table, v, one);
    }
#endif
  }
  return acc;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 2;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);
  int reps = 4;
  if (argc > 2) reps = std::atoi(argv[2]);

  const gf::FieldCtx ctx(gf::TowerSpec{3, 1, 2, 2});  // t = 9, 6561-point domain
  const auto form = quadform::standard_form(ctx, 2, 2);
  const auto table = counting::FormTable::build(ctx, form);

  std::cout << "exponential-sum sweep, " << reps << " x 6561 sums over 6561 points\n";
  auto start = Clock::now();
  const auto serial_sum = sweep_serial(ctx, table, reps, 1);
  const double serial_ms = ms_since(start);
  std::cout << "  serial              " << serial_ms << " ms\n";

  start = Clock::now();
  const auto split_sum = sweep_serial(ctx, table, reps, threads);
  const double split_ms = ms_since(start);
  std::cout << "  omp per-sum (" << threads << ")     " << split_ms << " ms  speedup "
            << serial_ms / split_ms << "\n";

  start = Clock::now();
  const auto coarse_sum = sweep_coarse(ctx, table, reps, threads);
  const double coarse_ms = ms_since(start);
  std::cout << "  omp per-sweep (" << threads << ")   " << coarse_ms << " ms  speedup "
            << serial_ms / coarse_ms << "\n";
  if (!(serial_sum == split_sum) || !(serial_sum == coarse_sum)) {
    std::cerr << "kernel results differ\n";
    return 1;
  }

  const gf::FieldCtx cctx(gf::TowerSpec{3, 1, 1, 2});  // gamma: 3^8 words of length 81
  const auto gamma = codes::build_gamma(cctx);
  std::cout << "weight tally, 6561 codewords of length 81\n";
  start = Clock::now();
  const auto serial_tally = codes::weight_tally_serial(cctx, gamma);
  const double tally_serial_ms = ms_since(start);
  std::cout << "  serial              " << tally_serial_ms << " ms\n";

  start = Clock::now();
  const auto parallel_tally = codes::weight_tally_parallel(cctx, gamma, threads);
  const double tally_parallel_ms = ms_since(start);
  std::cout << "  omp (" << threads << ")             " << tally_parallel_ms
            << " ms  speedup " << tally_serial_ms / tally_parallel_ms << "\n";
  if (parallel_tally != serial_tally) {
    std::cerr << "tally results differ\n";
    return 1;
  }
  return 0;
}
