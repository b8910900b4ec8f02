// Wall-clock comparison of the serial reference drivers against the OpenMP
// ones, on a randomized campaign and on an exhaustive sweep.
#include <chrono>
#include <cstdio>

#include "rskflags/text_io.hpp"
#include "rskflags/verify.hpp"

using namespace rskflags;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int trials = argc > 1 ? std::atoi(argv[1]) : 400;
    int dmax = argc > 2 ? std::atoi(argv[2]) : 6;
    std::printf("threads available: %d\n", effective_threads(0));

    RunOptions opts;
    opts.trials = trials;
    opts.prime = 10007;
    opts.seed = 2024;

    std::printf("-- steinberg campaign, shape 2,2,1, %d trials per pair --\n", trials);
    opts.parallel = false;
    auto t0 = clock_type::now();
    auto serial = verify_steinberg({2, 2, 1}, opts);
    double ts = seconds_since(t0);
    opts.parallel = true;
    t0 = clock_type::now();
    auto parallel = verify_steinberg({2, 2, 1}, opts);
    double tp = seconds_since(t0);
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].mode_matrix == parallel[i].mode_matrix &&
               serial[i].agreement_count == parallel[i].agreement_count;
    std::printf("serial   %.3fs\nparallel %.3fs   speedup %.2fx   results %s\n", ts, tp, ts / tp,
                same ? "identical" : "DIFFER");

    std::printf("-- bijection sweep, degree <= %d --\n", dmax);
    t0 = clock_type::now();
    auto sweep_serial = verify_bijection(dmax, 0, /*parallel=*/false);
    ts = seconds_since(t0);
    t0 = clock_type::now();
    auto sweep_parallel = verify_bijection(dmax, 0, /*parallel=*/true);
    tp = seconds_since(t0);
    std::printf("serial   %.3fs (%lld cases)\nparallel %.3fs   speedup %.2fx   results %s\n", ts,
                sweep_serial.cases_checked, tp, ts / tp,
                (sweep_serial.cases_checked == sweep_parallel.cases_checked &&
                 sweep_serial.failures == sweep_parallel.failures)
                    ? "identical"
                    : "DIFFER");
    return 0;
}
