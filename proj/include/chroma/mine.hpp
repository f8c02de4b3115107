#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chroma/corpus.hpp"
#include "chroma/oracle.hpp"
#include "chroma/solver.hpp"

namespace chroma {

// Random sweep testing whether the contraction heuristic's clique order
// matches the exact chromatic number, and whether tie policy changes the
// answer. Instance i of cell (n, p) uses the graph seed
// derive_seed(master, n, round(p*1000), i), so shards reproduce anywhere.
struct MineConfig {
    int n_min = 4;
    int n_max = 9;
    std::vector<double> p_list = {0.3, 0.5, 0.7};
    int count = 1;
    std::uint64_t seed = 1;
    std::vector<TiePolicy> policies;
    std::string out_dir;  // empty: report only, persist nothing
    Budget budget;
};

struct MineInstance {
    int n = 0;
    double p = 0.0;
    int index = 0;
    std::uint64_t graph_seed = 0;
    std::vector<std::pair<std::string, int>> heuristic;  // policy -> clique order
    std::optional<int> exact_chi;
    bool exhausted = false;
    bool disagreement = false;
    bool uniqueness_variance = false;
    bool soundness_violation = false;
};

struct MineCell {
    int n = 0;
    double p = 0.0;
    long long instances = 0;
    long long agreements = 0;
    long long disagreements = 0;
    long long uniqueness_variances = 0;
    long long exhausted = 0;
};

struct MineResult {
    std::vector<MineCell> cells;
    std::vector<MineInstance> events;  // instances that disagreed or varied
    long long instances = 0;
    long long agreements = 0;
    long long disagreements = 0;
    long long uniqueness_variances = 0;
    long long exhausted = 0;
    bool soundness_violation = false;
    std::string soundness_message;
};

// Instances may fan out across OpenMP workers; results are buffered and
// aggregated in instance order, so the outcome matches a sequential run.
MineResult run_mine(const MineConfig& cfg);

// Writes <kind>_n<k>_p<millis>_i<idx>.col (DIMACS) plus a metadata .json per
// event into cfg.out_dir. Returns the basenames written, in instance order.
std::vector<std::string> persist_counterexamples(const MineConfig& cfg, const MineResult& res);

// Deterministic summary except for the wall_times_ms block.
std::string mine_summary_json(const MineConfig& cfg, const MineResult& res, long long wall_ms);

}  // namespace chroma
