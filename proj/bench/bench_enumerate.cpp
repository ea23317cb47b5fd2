// Times the OpenMP enumeration kernel against the serial reference on the
// same workloads and checks they agree. Not part of ctest; run it directly:
//   build/bench/readchan_bench [max_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "readchan/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace readchan;

namespace {

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 21;
#ifdef _OPENMP
    std::printf("threads available: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernel runs serially\n");
#endif
    std::printf("%-16s %12s %12s %12s %10s\n", "workload", "serial[s]", "parallel[s]", "speedup",
                "count");

    int mismatches = 0;
    for (const ChannelParams p : {ChannelParams{3, 2}, {5, 2}, {8, 3}}) {
        int n = p.ell;
        while (n + p.delta <= max_n) n += p.delta;
        CountResult serial{}, parallel{};
        const double ts = timed([&] { serial = count_read_vectors_serial(n, p, 2); });
        const double tp = timed([&] { parallel = count_read_vectors(n, p, 2); });
        if (serial.count != parallel.count) ++mismatches;
        char label[32];
        std::snprintf(label, sizeof label, "n=%d (%d,%d)", n, p.ell, p.delta);
        std::printf("%-16s %12.4f %12.4f %12.2f %10llu%s\n", label, ts, tp, ts / tp,
                    parallel.count, serial.count == parallel.count ? "" : "  MISMATCH");
    }
    return mismatches == 0 ? 0 : 1;
}
