// Benchmark: OpenMP-parallel kernels against the serial reference paths.
// Prints wall-clock timings and cross-checks that both paths agree.

#include <chrono>
#include <cstdio>

#ifdef DC_HAVE_OPENMP
#include <omp.h>
#endif

#include "deltacalc/identities.hpp"
#include "deltacalc/invariants.hpp"

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef DC_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: parallel path falls back to serial\n");
#endif
    auto f2 = dc::Field::make(2, 1);
    auto f3 = dc::Field::make(3, 1);
    bool agree = true;

    {
        dc::VerificationReport serial, parallel;
        double ts = time_ms([&] {
            serial = dc::check_rank4_line6(f2, 2, 64, 42, dc::CheckMode::numerator,
                                           dc::Convention::top_zero, false);
        });
        double tp = time_ms([&] {
            parallel = dc::check_rank4_line6(f2, 2, 64, 42, dc::CheckMode::numerator,
                                             dc::Convention::top_zero, true);
        });
        agree = agree && serial.to_json() == parallel.to_json();
        std::printf("rank4-6 numerator q=2,m=2, 64 trials: serial %8.1f ms, parallel %8.1f ms "
                    "(speedup %.2fx)\n",
                    ts, tp, ts / tp);
    }

    {
        dc::VerificationReport serial, parallel;
        double ts = time_ms([&] {
            serial = dc::check_rank3(f3, 1, 256, 42, dc::CheckMode::numerator,
                                     dc::Convention::top_zero, false);
        });
        double tp = time_ms([&] {
            parallel = dc::check_rank3(f3, 1, 256, 42, dc::CheckMode::numerator,
                                       dc::Convention::top_zero, true);
        });
        agree = agree && serial.to_json() == parallel.to_json();
        std::printf("rank3 numerator q=3,m=1, 256 trials:  serial %8.1f ms, parallel %8.1f ms "
                    "(speedup %.2fx)\n",
                    ts, tp, ts / tp);
    }

    {
        auto group = dc::gl_generators(2, f2);
        dc::TruncationSpec tspec{2, f2, 2};
        dc::FixedSpace serial, parallel;
        double ts = time_ms([&] { serial = dc::fixed_space_dim(group, tspec, false); });
        double tp = time_ms([&] { parallel = dc::fixed_space_dim(group, tspec, true); });
        agree = agree && serial.dim == parallel.dim;
        std::printf("fixed-space dim n=2,q=2,m=2:         serial %8.1f ms, parallel %8.1f ms "
                    "(speedup %.2fx)\n",
                    ts, tp, ts / tp);
    }

    std::printf("serial/parallel agreement: %s\n", agree ? "yes" : "NO");
    return agree ? 0 : 1;
}
