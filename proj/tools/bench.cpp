// Compares the serial reference implementations against the OpenMP kernels:
// enumeration DFS, the increasing-weight verification sweep, and the
// supersaturation probe.

#include <chrono>
#include <cstdio>

#include "mlcif/enumerate.hpp"
#include "mlcif/threads.hpp"
#include "mlcif/weights.hpp"
#include "mlcif/young.hpp"

using namespace mlcif;

namespace {

double time_ms(const auto& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-38s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    const int threads = thread_count();
    std::printf("threads: %d\n", threads);
    std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::vector<Family> serial_out, parallel_out;
        enumerate_mlcifs_serial(5);  // warm up
        const double s = time_ms([&] { serial_out = enumerate_mlcifs_serial(5); });
        EnumOptions opts;
        opts.threads = threads;
        enumerate_mlcifs(5, opts);
        const double p = time_ms([&] { parallel_out = enumerate_mlcifs(5, opts); });
        row("enumerate M_5", s, p);
        if (serial_out.size() != parallel_out.size()) std::printf("  MISMATCH in |M_5|!\n");
    }
    {
        const int k = 3;
        const int n = static_cast<int>(theorem2_min_n(k));
        const auto mk = enumerate_mlcifs(k);
        verify_increasing_theorems(k, n, 4, 7, &mk, 1);  // warm member caches
        const double s = time_ms([&] { verify_increasing_theorems(k, n, 64, 7, &mk, 1); });
        const double p = time_ms([&] { verify_increasing_theorems(k, n, 64, 7, &mk, threads); });
        row("weight sweep k=3 n=1620 x64", s, p);
    }
    {
        supersaturation_probe(6, {64}, 20, 7, 1);
        const double s = time_ms([&] { supersaturation_probe(6, {64}, 400, 7, 1); });
        const double p = time_ms([&] { supersaturation_probe(6, {64}, 400, 7, threads); });
        row("probe k=6 x400", s, p);
    }
    return 0;
}
