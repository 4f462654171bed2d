// Serial versus OpenMP timings for the parallel kernels.
// Each pair of runs is checked for identical results before timing is reported.

#include "afkit/convexvol.hpp"
#include "afkit/generators.hpp"
#include "afkit/harness.hpp"
#include "afkit/mixdisc.hpp"
#include "afkit/parallel.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace afkit;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class R>
void compare(const std::string& name, int reps, const std::function<R(Exec)>& kernel) {
  R serial_out{};
  R parallel_out{};
  const double s = best_of(reps, [&] { serial_out = kernel(Exec::serial); });
  const double p = best_of(reps, [&] { parallel_out = kernel(Exec::parallel); });
  if (!(serial_out == parallel_out)) {
    std::fprintf(stderr, "%s: serial and parallel results differ\n", name.c_str());
    std::exit(1);
  }
  std::printf("%-34s %10.4f %10.4f %8.2fx\n", name.c_str(), s, p, s / p);
}

} // namespace

int main() {
  configure_threads();
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  gen::Rng rng(7);
  for (std::size_t n : {5, 6}) {
    std::vector<HermMat> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(gen::pd_gauss_rational(rng, n, 3));
    compare<Rat>("mixed_discriminant n=" + std::to_string(n), 3,
                 [&](Exec e) { return mixed_discriminant(t, e); });
  }
  for (std::size_t n : {8, 10}) {
    std::vector<HermMat> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(gen::pd_gauss_rational(rng, n, 3));
    compare<Rat>("mixed_discriminant_polarized n=" + std::to_string(n), 3,
                 [&](Exec e) { return mixed_discriminant_polarized(t, e); });
  }
  for (std::size_t d : {3, 4}) {
    std::vector<Polytope> bodies;
    for (std::size_t i = 0; i < d; ++i) bodies.push_back(gen::full_polytope(rng, d, d + 3, 2));
    compare<Rat>("mixed_volume d=" + std::to_string(d), 1,
                 [&](Exec e) { return mixed_volume(bodies, e); });
  }
  RunConfig cfg;
  cfg.mode = Mode::all;
  cfg.n = 3;
  cfg.trials = 8;
  compare<std::string>("run_suite all n=3 trials=8", 1, [&](Exec e) {
    RunConfig c = cfg;
    c.exec = e;
    return run_suite(c).jsonl();
  });
  return 0;
}
