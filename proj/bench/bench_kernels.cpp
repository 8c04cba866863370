// Serial reference vs OpenMP kernels. Results must agree; times are best of `reps`.
#include "zsum/algebra.hpp"
#include "zsum/counterexample.hpp"
#include "zsum/davenport.hpp"
#include "zsum/dgk.hpp"
#include "zsum/plane.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

namespace {

double best_seconds(int reps, const std::function<std::int64_t()>& f, std::int64_t& value)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        value = f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

bool row(const char* name, int reps, const std::function<std::int64_t()>& serial,
         const std::function<std::int64_t()>& parallel)
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    const double ts = best_seconds(reps, serial, a);
    const double tp = best_seconds(reps, parallel, b);
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp, a == b ? "agree" : "MISMATCH");
    return a == b;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace zsum;
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d\n%-34s %10s %10s %9s\n", omp_get_max_threads(), "kernel", "serial s", "omp s", "speedup");

    bool ok = true;
    const Group c44 = make_group({4, 4});
    ok &= row("davenport_d C4+C4", reps, [&] { return reference::davenport_d(c44).d; },
              [&] { return davenport_d(c44).d; });
    const Group c28 = make_group({2, 8});
    ok &= row("davenport_d C2+C8 (dfs serial)", reps, [&] { return davenport_d(c28, {64, false}).d; },
              [&] { return davenport_d(c28).d; });
    const Group c33 = make_group({3, 3});
    ok &= row("dgk_brute C3+C3", reps, [&] { return reference::dgk_brute(c33, 6).l; },
              [&] { return dgk_brute(c33, 6).l; });
    const Group c10 = make_group({10});
    ok &= row("dgk_brute C10", reps, [&] { return dgk_brute(c10, 10, {16, false}).l; },
              [&] { return dgk_brute(c10, 10).l; });
    const Group c222 = make_group({2, 2, 2, 2});
    ok &= row("d_gr_brute C2^4 / F2", reps, [&] { return reference::d_gr_brute(c222, PrimeField(2), 16).l; },
              [&] { return d_gr_brute(c222, PrimeField(2), 16).l; });
    ok &= row("l_triple_max_union p=7 l=4", reps, [] { return reference::l_triple_max_union(7, 4, 0, 1, 2); },
              [] { return l_triple_max_union(7, 4, 0, 1, 2); });
    const CounterexampleSpec s52 = CounterexampleSpec::standard(5, 2);
    ok &= row("verify_uncoverable (5,2)", reps,
              [&] { return static_cast<std::int64_t>(reference::verify_uncoverable(s52).distributions_checked); },
              [&] { return static_cast<std::int64_t>(verify_uncoverable(s52).distributions_checked); });
    const CounterexampleSpec s54 = CounterexampleSpec::standard(5, 4);
    ok &= row("verify_uncoverable (5,4)", 1,
              [&] { return static_cast<std::int64_t>(verify_uncoverable(s54, {false}).distributions_checked); },
              [&] { return static_cast<std::int64_t>(verify_uncoverable(s54).distributions_checked); });
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
