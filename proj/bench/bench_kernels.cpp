// Serial reference kernels against the OpenMP kernels. The OpenMP kernels are
// also bit-packed, so they are timed on one thread and on all threads to
// separate the packing gain from the threading gain.
// Usage: niho_bench [reps]
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "niho/kernels.hpp"
#include "niho/numtheory.hpp"
#include "niho/sequences.hpp"

using namespace niho;

namespace {

double best_ms(int reps, const std::function<std::size_t()>& fn, std::size_t& sink) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    sink ^= fn();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* name, int reps, const std::function<std::size_t()>& serial,
         const std::function<std::size_t()>& parallel, std::size_t& sink) {
  const int threads = omp_get_max_threads();
  const double s = best_ms(reps, serial, sink);
  omp_set_num_threads(1);
  const double p1 = best_ms(reps, parallel, sink);
  omp_set_num_threads(threads);
  const double p = best_ms(reps, parallel, sink);
  std::printf("%-32s %10.2f %10.2f %10.2f %8.2fx %8.2fx\n", name, s, p1, p, s / p, p1 / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-32s %10s %10s %10s %9s %9s\n", "kernel", "serial ms", "omp/1 ms", "omp ms", "total", "threads");
  std::size_t sink = 0;

  for (std::uint32_t n : {10u, 12u, 13u}) {
    auto f = Field::build(2, n);
    std::uint64_t d = (std::uint64_t{1} << (n / 2 + 1)) - 1;
    while (nt::gcd(d, f->order() - 1) != 1) d += 2;
    char name[64];
    std::snprintf(name, sizeof name, "walsh GF(2^%u) d=%llu", n, static_cast<unsigned long long>(d));
    row(name, reps, [&] { return kernels::walsh_values_serial(*f, d).size(); },
        [&] { return kernels::walsh_values_parallel(*f, d).size(); }, sink);
  }

  for (std::uint32_t n : {12u, 14u}) {
    auto f = Field::build(2, n);
    const auto s = m_sequence(*f);
    const auto u = decimate(s, (f->half_order() - 1) * 4 + 1);
    char name[64];
    std::snprintf(name, sizeof name, "crosscorrelation N=%llu", static_cast<unsigned long long>(s.period));
    row(name, reps, [&] { return kernels::crosscorrelation_serial(u.words, s.words, s.period).size(); },
        [&] { return kernels::crosscorrelation_parallel(u.words, s.words, s.period).size(); }, sink);
  }

  for (std::uint32_t n : {12u, 16u, 18u}) {
    auto f = Field::build(2, n);
    char name[64];
    std::snprintf(name, sizeof name, "unit root counts GF(2^%u)", n);
    row(name, reps, [&] { return kernels::unit_root_counts_serial(f, 4).size(); },
        [&] { return kernels::unit_root_counts_parallel(f, 4).size(); }, sink);
  }
  std::printf("checksum %zu\n", sink);
  return 0;
}
