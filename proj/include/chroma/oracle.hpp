#pragma once

#include <optional>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "chroma/solver.hpp"

namespace chroma {

// Exceeding a budget is a first-class result, never a crash.
struct Budget {
    long long max_nodes = 10'000'000;
    long long max_partitions = 10'000;
};

enum class SearchStatus { Exact, Exhausted };

struct KColorResult {
    enum class Outcome { Colorable, NotColorable, Exhausted };
    Outcome outcome = Outcome::Exhausted;
    std::optional<Coloring> coloring;  // present iff Colorable
    long long nodes = 0;
};

// Backtracking over vertices in saturation-degree order, colors introduced
// in first-use order (the first vertex always takes color 0).
KColorResult is_k_colorable(const Graph& g, int k, const Budget& budget);

struct ChiResult {
    std::optional<int> chi;            // present iff status == Exact
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Coloring> witness;   // an optimal coloring when exact
    long long nodes = 0;
};

// Smallest k admitting a proper k-coloring; the search starts at the
// max-clique lower bound and increments.
ChiResult exact_chromatic_number(const Graph& g, const Budget& budget);

struct CliqueResult {
    std::vector<int> members;  // sorted
    bool exact = false;        // false when the budget ran out first
    long long nodes = 0;
};

// Branch and bound with a greedy-coloring bound.
CliqueResult max_clique(const Graph& g, const Budget& budget);

// Classes sorted by minimum element, members sorted; one entry per
// partition of V(g) into exactly chi(g) independent classes.
struct ChromaticPartition {
    std::vector<std::vector<int>> classes;

    friend bool operator==(const ChromaticPartition&, const ChromaticPartition&) = default;
};

struct PartitionEnumeration {
    std::vector<ChromaticPartition> partitions;
    int chi = 0;
    bool truncated = false;  // hit max_partitions
    SearchStatus status = SearchStatus::Exhausted;
};

PartitionEnumeration enumerate_chromatic_partitions(const Graph& g, const Budget& budget);

// For the selected pair (u0, v0) and each optimal partition of g minus that
// pair: every class disjoint from N(u0) must also be disjoint from N(v0).
// Both quantifier readings over the partition set are reported.
struct Condition1Report {
    VertexPair pair;
    int g0_chi = 0;
    bool holds_for_some_partition = false;
    bool holds_for_all_partitions = false;
    long long partitions_checked = 0;
    std::optional<ChromaticPartition> witness_partition;  // a violating partition
    bool exhausted = false;
};

// Throws GraphError on fewer than 3 vertices or a complete graph.
Condition1Report check_condition1(const Graph& g, const Budget& budget);

}  // namespace chroma
