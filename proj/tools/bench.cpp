// Timing harness for the pair-selection scan and full heuristic runs:
// sorted-vector reference vs packed-bitset kernel, serial and OpenMP.
// Selections are cross-checked while timing; a mismatch aborts the run.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chroma/corpus.hpp"
#include "chroma/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace chroma;
using Clock = std::chrono::steady_clock;

double ms_of(Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

template <typename F>
double best_ms(int reps, F&& f) {
    double best = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const double ms = ms_of(Clock::now() - t0);
        if (r == 0 || ms < best) best = ms;
    }
    return best;
}

void require_same(const std::optional<SelectedPair>& a, const std::optional<SelectedPair>& b,
                  const std::string& what) {
    const bool same = a.has_value() == b.has_value() &&
                      (!a || (a->pair == b->pair && a->common_size == b->common_size &&
                              a->tie_count == b->tie_count));
    if (!same) {
        std::cerr << "bench: MISMATCH in " << what << "\n";
        std::exit(1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair-scan and solve benchmark: reference vs kernel, serial vs parallel"};
    std::vector<int> sizes = {100, 200, 400};
    double p = 0.5;
    std::uint64_t seed = 1;
    int reps = 3;
    int solve_n = 500;
    app.add_option("--sizes", sizes, "graph sizes for the single-scan benchmark")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--p", p, "edge probability")->capture_default_str();
    app.add_option("--seed", seed, "graph seed")->capture_default_str();
    app.add_option("--reps", reps, "repetitions per measurement (best kept)")
        ->capture_default_str();
    app.add_option("--solve-n", solve_n, "graph size for the full-solve benchmark")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "openmp: " << omp_get_max_threads() << " threads\n";
#else
    std::cout << "openmp: not compiled in; parallel mode falls back to serial\n";
#endif
    const TiePolicy policy = TiePolicy::lexmin();
    SolverOptions serial{ScanMode::ForceSerial};
    SolverOptions parallel{ScanMode::ForceParallel};

    std::cout << "\nsingle scan, random graphs, p=" << p << "\n";
    std::cout << "      n   reference  kernel-serial  kernel-parallel  (ms, best of " << reps
              << ")\n";
    for (int n : sizes) {
        const Graph g = generate(GraphFamily::random(n, p, seed));
        std::optional<SelectedPair> ref, ks, kp;
        const double t_ref = best_ms(reps, [&] { ref = select_pair_reference(g, policy); });
        const double t_ks = best_ms(reps, [&] { ks = select_pair(g, policy, serial); });
        const double t_kp = best_ms(reps, [&] { kp = select_pair(g, policy, parallel); });
        require_same(ref, ks, "scan n=" + std::to_string(n));
        require_same(ks, kp, "parallel scan n=" + std::to_string(n));
        std::printf("%7d  %10.3f  %13.3f  %15.3f\n", n, t_ref, t_ks, t_kp);
    }

    std::cout << "\nfull solve, random:" << solve_n << "," << p << "," << seed << "\n";
    const Graph big = generate(GraphFamily::random(solve_n, p, seed));
    SolveResult rs, rp;
    const double t_ss = best_ms(reps, [&] { rs = run_operation1(big, policy, serial); });
    const double t_sp = best_ms(reps, [&] { rp = run_operation1(big, policy, parallel); });
    if (rs.clique_order != rp.clique_order || rs.trace != rp.trace) {
        std::cerr << "bench: MISMATCH in full solve\n";
        return 1;
    }
    std::printf("kernel-serial    %10.1f ms\n", t_ss);
    std::printf("kernel-parallel  %10.1f ms\n", t_sp);
    std::printf("clique order     %10d\n", rs.clique_order);
    return 0;
}
