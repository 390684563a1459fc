// Benchmark of the two data-parallel kernels against their serial reference
// implementations: curve sweeps over t-grids and Monte Carlo batch sums.
// Results must be identical across modes; this target measures the speedup.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pastlife/builtins.hpp"
#include "pastlife/curve.hpp"
#include "pastlife/mc.hpp"
#include "pastlife/measures.hpp"

using namespace pastlife;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
double timed(const Fn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds_since(t0);
}

} // namespace

int main(int argc, char** argv) {
    int points = 400;
    std::int64_t samples = 4'000'000;
    if (argc > 1) points = std::atoi(argv[1]);
    if (argc > 2) samples = std::atoll(argv[2]);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled, both modes run serially\n");
#endif

    const auto w = make_builtin("weibull", {2.0});
    const std::vector<std::string> names = {"past-entropy", "past-varentropy",
                                            "mean-inactivity-time"};

    curve::CurveTable serial_table, parallel_table;
    const double t_serial = timed([&] {
        serial_table = curve::compute_curve_serial(*w, "bench", names, 0.1, 2.5, points);
    });
    const double t_parallel = timed([&] {
        parallel_table =
            curve::compute_curve(*w, "bench", names, 0.1, 2.5, points, {}, 0.0, true);
    });

    bool identical = serial_table.rows.size() == parallel_table.rows.size();
    for (std::size_t i = 0; identical && i < serial_table.rows.size(); ++i)
        for (std::size_t k = 0; k < names.size(); ++k)
            identical = identical && serial_table.rows[i].values[k].value ==
                                         parallel_table.rows[i].values[k].value;

    std::printf("curve   %5d points x %zu measures: serial %.3fs, parallel %.3fs, "
                "speedup %.2fx, identical: %s\n",
                points, names.size(), t_serial, t_parallel, t_serial / t_parallel,
                identical ? "yes" : "NO");

    const auto e = make_builtin("exponential", {1.0});
    const measures::PastContext ctx(*e, 1.0);
    mc::MCConfig cfg;
    cfg.n_samples = samples;
    cfg.seed = 20240915;

    mc::MCEstimate serial_est, parallel_est;
    const double m_serial =
        timed([&] { serial_est = mc::mc_past_varentropy(ctx, cfg, false); });
    const double m_parallel =
        timed([&] { parallel_est = mc::mc_past_varentropy(ctx, cfg, true); });

    std::printf("mc      %5.1fM samples:              serial %.3fs, parallel %.3fs, "
                "speedup %.2fx, identical: %s\n",
                samples / 1e6, m_serial, m_parallel, m_serial / m_parallel,
                serial_est.mean == parallel_est.mean &&
                        serial_est.std_error == parallel_est.std_error
                    ? "yes"
                    : "NO");
    return 0;
}
