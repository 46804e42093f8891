// Compares the serial reference kernels against their OpenMP variants on
// generated instances and prints a timing table. Build with OpenMP and run
//   flg_bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flg/generators.hpp"
#include "flg/solver.hpp"
#include "flg/stability.hpp"
#include "flg/uniform.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto begin = std::chrono::steady_clock::now();
    fn();
    const auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - begin).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // Exact oracle, enumeration fallback forced (guided path off). On a
        // complete digraph every client splits across all facilities, so
        // the accepting pattern is the last index: the full space is
        // scanned.
        const auto inst = flg::gen_random(quick ? 5 : 6, 1.0, 4, 3, 1);
        flg::Placement s = {0, 1, 2};
        flg::SolveOptions serial;
        serial.guided = false;
        serial.threads = 1;
        serial.support_budget = 1ull << 40;
        flg::SolveOptions parallel = serial;
        parallel.threads = 0;
        const double t1 = time_ms([&] { flg::solve_exact(inst, s, serial); });
        const double t2 = time_ms([&] { flg::solve_exact(inst, s, parallel); });
        row("solve_exact (enumeration)", t1, t2);
    }
    {
        const auto inst = flg::gen_random(quick ? 10 : 16, 0.35, 4, quick ? 3 : 4, 21);
        flg::Placement s;
        for (int j = 0; j < inst.facility_count(); ++j) s.push_back((3 * j) % inst.node_count());
        flg::SolveOptions serial;
        serial.threads = 1;
        flg::SolveOptions parallel = serial;
        parallel.threads = 0;
        const double t1 =
            time_ms([&] { flg::check_stability(inst, s, flg::Rational(1), serial); });
        const double t2 =
            time_ms([&] { flg::check_stability(inst, s, flg::Rational(1), parallel); });
        row("check_stability (deviation scan)", t1, t2);
    }
    {
        const auto inst = flg::gen_random(quick ? 8 : 12, 0.35, 4, 3, 31);
        flg::SolveOptions serial;
        serial.threads = 1;
        flg::SolveOptions parallel = serial;
        parallel.threads = 0;
        const double t1 =
            time_ms([&] { flg::find_spe(inst, flg::Rational(1), serial, 1ull << 40); });
        const double t2 =
            time_ms([&] { flg::find_spe(inst, flg::Rational(1), parallel, 1ull << 40); });
        row("find_spe (multiset scan)", t1, t2);
    }
    {
        // MaxCut host: a path (quick) or two disjoint paths (full).
        flg::SimpleGraph g;
        if (quick) {
            g.vertices = {"a", "b", "c", "d"};
            g.edges = {{0, 1}, {1, 2}, {2, 3}};
        } else {
            g.vertices = {"a", "b", "c", "d", "e"};
            g.edges = {{0, 1}, {1, 2}, {3, 4}};
        }
        g.edge_weights = {flg::Rational(1), flg::Rational(2), flg::Rational(3)};
        const auto red = flg::gen_maxcut_reduction(g);
        const double t1 =
            time_ms([&] { flg::uniform_equilibria(red.instance, 1ull << 40, 1); });
        const double t2 =
            time_ms([&] { flg::uniform_equilibria(red.instance, 1ull << 40, 0); });
        row("uniform_equilibria (multiset scan)", t1, t2);
    }
    return 0;
}
