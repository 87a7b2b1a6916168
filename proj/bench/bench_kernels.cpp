// Compares the OpenMP kernels against their serial reference
// implementations: the quadruple scan behind the four-point/Kalmanson
// checks, and the PEDC lattice-point counter.
#include "splitcone/cry.hpp"
#include "splitcone/metric.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace splitcone;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b)
{
    return std::chrono::duration<double>(b - a).count();
}

// A weighted circular split system always satisfies Kalmanson, so the scan
// has to visit every quadruple.
DissimilarityMatrix random_matrix(int n, std::mt19937_64& rng)
{
    auto sys = complete_system(n);
    auto w = zero_weights(sys);
    for (Rat& v : w.weights)
        v = Rat(static_cast<long>(rng() % 8));
    return full_matrix(sys, w).matrix;
}

} // namespace

int main(int argc, char** argv)
{
    const int n = argc > 1 ? std::atoi(argv[1]) : 70;
    std::mt19937_64 rng(1);
    auto d = random_matrix(n, rng);

    std::printf("quadruple scan, n = %d (%d threads available)\n", n, thread_cap());
    auto t0 = Clock::now();
    auto serial = check_kalmanson_serial(d);
    auto t1 = Clock::now();
    auto parallel = check_kalmanson(d);
    auto t2 = Clock::now();
    if (serial.ok != parallel.ok) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    std::printf("  serial   %.3fs\n  parallel %.3fs\n", seconds(t0, t1), seconds(t1, t2));

    const int ln = 5, lt = 3;
    std::printf("PEDC lattice count, n = %d, t = %d\n", ln, lt);
    t0 = Clock::now();
    auto cs = count_pedc_points_serial(ln, lt);
    t1 = Clock::now();
    auto cp = count_pedc_points(ln, lt);
    t2 = Clock::now();
    if (cs != cp) {
        std::printf("MISMATCH between serial and parallel counts\n");
        return 1;
    }
    std::printf("  serial   %.3fs (%lld points)\n  parallel %.3fs\n",
                seconds(t0, t1), static_cast<long long>(cs), seconds(t1, t2));
    return 0;
}
