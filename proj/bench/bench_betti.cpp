// Times the serial graded-dimension kernel against the OpenMP one on a few
// spaces at generic numeric invariants. Both paths share the rank code; the
// parallel one fans out per degree, so speedup is bounded by the number of
// degrees and by how lopsided the top-degree matrices are.
//
// Reduced degree pieces are cached process-wide per (invariants, degree), so
// every timed call draws fresh invariants to keep its cache cold. Generic
// draws of the same size do the same amount of elimination work.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "poly/ring.hpp"

using namespace poly;

namespace {

std::mt19937 g_rng(99);

template <class Kernel>
double timed_cold(int k, int n, Kernel&& kernel, std::vector<int>& out) {
    auto spec = RingSpec::numeric(k, n, random_generic_invariants(k, n, g_rng));
    auto t0 = std::chrono::steady_clock::now();
    out = kernel(spec, k * (n - k));
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    std::printf("%-8s %12s %12s %9s %8s\n", "space", "serial [s]", "parallel [s]", "speedup",
                "middim");

    for (auto [k, n] : {std::pair{2, 6}, {3, 8}, {4, 8}, {4, 9}}) {
        std::vector<int> a, b;
        double ts = timed_cold(k, n, [](const RingSpec& s, int top) { return betti(s, top); }, a);
        double tp = timed_cold(
            k, n, [](const RingSpec& s, int top) { return betti_parallel(s, top); }, b);
        if (a != b) {
            std::fprintf(stderr, "mismatch between kernels on G(%d,%d)\n", k, n);
            return 1;
        }
        std::printf("G(%d,%d)   %12.4f %12.4f %8.2fx %8d\n", k, n, ts, tp, ts / tp,
                    a[k * (n - k) / 2]);
    }
    return 0;
}
