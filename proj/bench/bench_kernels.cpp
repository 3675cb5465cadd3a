// Times the OpenMP kernels against their serial reference twins on one large
// random graph. The last column must read 0: both paths are required to
// produce bit-identical output, the parallel one is only allowed to be faster.
//
//   bench_kernels [n] [m] [iters]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "netdrift/drift.hpp"
#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/kernels_ref.hpp"
#include "netdrift/rng.hpp"

using namespace netdrift;

namespace {

using Kernel = std::function<void(std::span<double>)>;

double time_ms(const Kernel& kernel, std::span<double> out, int iters) {
    kernel(out);  // warm up, and leave the result in out for the diff check
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < iters; ++i) kernel(out);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           static_cast<double>(iters);
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    NodeId n = 100000;
    std::uint64_t m = 1000000;
    int iters = 20;
    if (argc > 1) n = static_cast<NodeId>(std::strtoul(argv[1], nullptr, 10));
    if (argc > 2) m = std::strtoull(argv[2], nullptr, 10);
    if (argc > 3) iters = std::atoi(argv[3]);
    if (n == 0 || iters <= 0) {
        std::fprintf(stderr, "usage: %s [n] [m] [iters]\n", argv[0]);
        return 1;
    }

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("n=%u m=%llu iters=%d threads=%d\n", n,
                static_cast<unsigned long long>(m), iters, threads);

    Rng rng(1);
    const Graph g = gen_random_graph(n, m, rng);
    std::vector<double> s(n);
    for (double& value : s) value = rng.uniform_double();

    struct Row {
        const char* name;
        Kernel parallel;
        Kernel serial;
    };
    const std::vector<Row> rows = {
        {"laplacian_apply",
         [&](std::span<double> out) { laplacian_apply_into(g, s, out); },
         [&](std::span<double> out) { ref::laplacian_apply_into(g, s, out); }},
        {"classical_euler_step",
         [&](std::span<double> out) { step_classical_euler_into(g, s, 0.01, 1.0, out); },
         [&](std::span<double> out) {
             ref::step_classical_euler_into(g, s, 0.01, 1.0, out);
         }},
        {"social_step",
         [&](std::span<double> out) { step_social_discrete_into(g, s, 0.3, out); },
         [&](std::span<double> out) { ref::step_social_discrete_into(g, s, 0.3, out); }},
        {"drift_vector",
         [&](std::span<double> out) { drift_vector_into(g, out); },
         [&](std::span<double> out) { ref::drift_vector_into(g, out); }},
    };

    std::printf("%-22s %12s %12s %9s %14s\n", "kernel", "serial_ms", "parallel_ms",
                "speedup", "max_abs_diff");
    bool all_identical = true;
    std::vector<double> out_serial(n);
    std::vector<double> out_parallel(n);
    for (const Row& row : rows) {
        const double serial_ms = time_ms(row.serial, out_serial, iters);
        const double parallel_ms = time_ms(row.parallel, out_parallel, iters);
        const double diff = max_abs_diff(out_serial, out_parallel);
        if (diff != 0.0) all_identical = false;
        std::printf("%-22s %12.3f %12.3f %8.2fx %14g\n", row.name, serial_ms,
                    parallel_ms, serial_ms / parallel_ms, diff);
    }
    if (!all_identical) {
        std::fprintf(stderr, "parallel output diverged from the reference\n");
        return 1;
    }
    return 0;
}
