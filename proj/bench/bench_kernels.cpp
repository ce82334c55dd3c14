// Timings of the OpenMP kernels against their serial reference
// implementations.  Correctness of each pair is asserted before timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "torusobs/clusters.hpp"
#include "torusobs/observability.hpp"

using namespace torusobs;

namespace {

template <class F>
double time_s(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-32s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", thread_cap());
    std::printf("%-32s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        const auto a = lattice::enumerate_sphere_serial(4, 5000);
        const auto b = lattice::enumerate_sphere(4, 5000);
        if (a.points != b.points) {
            std::fprintf(stderr, "sphere kernels disagree\n");
            return 1;
        }
        const double ts = time_s([] {
            for (std::int64_t n = 4990; n <= 5000; ++n)
                lattice::enumerate_sphere_serial(4, n);
        });
        const double tp = time_s([] {
            for (std::int64_t n = 4990; n <= 5000; ++n)
                lattice::enumerate_sphere(4, n);
        });
        row("sphere enumeration (d=4)", ts, tp);
    }

    {
        const auto a = clusters::arc_window_sweep_serial(1, 4000, 2);
        const auto b = clusters::arc_window_sweep(1, 4000, 2);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].violations.size() != b[i].violations.size()) {
                std::fprintf(stderr, "arc sweep kernels disagree\n");
                return 1;
            }
        const double ts =
            time_s([] { clusters::arc_window_sweep_serial(1, 4000, 2); });
        const double tp = time_s([] { clusters::arc_window_sweep(1, 4000, 2); });
        row("arc window sweep (n<=4000)", ts, tp);
    }

    {
        const auto s = lattice::enumerate_sphere(2, 32045);
        const auto a = obs::gram_matrix_serial(s.points, 2, 0.1);
        const auto b = obs::gram_matrix(s.points, 2, 0.1);
        if (a.a != b.a) {
            std::fprintf(stderr, "gram kernels disagree\n");
            return 1;
        }
        const double ts = time_s([&s] {
            for (int i = 0; i < 50; ++i) obs::gram_matrix_serial(s.points, 2, 0.1);
        });
        const double tp = time_s([&s] {
            for (int i = 0; i < 50; ++i) obs::gram_matrix(s.points, 2, 0.1);
        });
        row("gram fill (64 points x 50)", ts, tp);
    }

    return 0;
}
