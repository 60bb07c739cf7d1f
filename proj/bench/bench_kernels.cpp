// Serial reference paths against their OpenMP counterparts.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "lme/generators.hpp"
#include "lme/kernel.hpp"
#include "lme/powerdecomp.hpp"
#include "lme/sparse.hpp"
#include "lme/tables.hpp"

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

struct Case {
  std::string name;
  std::function<void(bool parallel)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP timings"};
  int reps = 3;
  bool quick = false;
  app.add_option("--reps", reps, "Repetitions per case (best time is kept)")->check(CLI::PositiveNumber);
  app.add_flag("--quick", quick, "Smaller problem sizes");
  CLI11_PARSE(app, argc, argv);

  const int so_n = quick ? 6 : 7;
  const int kernel_n = quick ? 4 : 6;
  const int power_n = quick ? 5 : 8;
  const int su_n = quick ? 9 : 12;
  const int sweep_n = quick ? 5 : 7;

  const auto so4 = lme::make_generators(lme::Group::so, 4);
  const auto su3 = lme::make_generators(lme::Group::su, 3);

  std::vector<Case> cases{
      {"diagonal_action so(4) N=" + std::to_string(so_n),
       [&](bool p) {
         for (const auto& op : so4.ops) lme::diagonal_action(op, so_n, lme::kDefaultDimCap, p);
       }},
      {"trivial_subspace so(4) N=" + std::to_string(kernel_n),
       [&](bool p) {
         lme::KernelOptions o;
         o.parallel = p;
         lme::trivial_subspace(so4, kernel_n, o);
       }},
      {"trivial_subspace su(3) N=" + std::to_string(kernel_n),
       [&](bool p) {
         lme::KernelOptions o;
         o.parallel = p;
         lme::trivial_subspace(su3, kernel_n, o);
       }},
      {"tensor_power_decompose (2,1) m=4 N=" + std::to_string(power_n),
       [&](bool p) {
         lme::PowerOptions o;
         o.parallel = p;
         lme::tensor_power_decompose({{2, 1}, 4, power_n}, o);
       }},
      {"tensor_power_decompose (1) m=6 N=" + std::to_string(su_n),
       [&](bool p) {
         lme::PowerOptions o;
         o.parallel = p;
         lme::tensor_power_decompose({{1}, 6, su_n}, o);
       }},
      {"theorem_sweep N<=" + std::to_string(sweep_n) + " parts<=2 with iterated",
       [&](bool p) {
         lme::SweepOptions o;
         o.parallel = p;
         o.iterated = true;
         lme::theorem_sweep(2, sweep_n, 2, o);
       }},
  };

  std::printf("threads: %d, repetitions: %d\n\n", omp_get_max_threads(), reps);
  std::printf("%-52s %10s %10s %8s\n", "case", "serial s", "openmp s", "speedup");
  for (const auto& c : cases) {
    const double s = best_of(reps, [&] { c.run(false); });
    const double p = best_of(reps, [&] { c.run(true); });
    std::printf("%-52s %10.4f %10.4f %7.2fx\n", c.name.c_str(), s, p, p > 0 ? s / p : 0.0);
    std::fflush(stdout);
  }
  return 0;
}
