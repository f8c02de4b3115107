#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

// Rule for choosing among non-adjacent pairs that tie on the maximum
// common-neighborhood size. SeededRandom picks the maximizing pair with the
// smallest mixed hash of (seed, u, v); equal seeds give identical runs.
enum class TiePolicyKind { LexMin, LexMax, SeededRandom };

struct TiePolicy {
    TiePolicyKind kind = TiePolicyKind::LexMin;
    std::uint64_t seed = 0;

    static TiePolicy lexmin() { return {TiePolicyKind::LexMin, 0}; }
    static TiePolicy lexmax() { return {TiePolicyKind::LexMax, 0}; }
    static TiePolicy seeded_random(std::uint64_t seed) {
        return {TiePolicyKind::SeededRandom, seed};
    }

    friend bool operator==(const TiePolicy&, const TiePolicy&) = default;
};

std::string to_string(const TiePolicy& p);
// "lexmin" | "lexmax" | "random:<seed>"
std::optional<TiePolicy> parse_tie_policy(const std::string& text);

struct ContractionStep {
    VertexPair pair;           // ids in the graph state at that step
    int common_size = 0;       // |N(u) ∩ N(v)| at selection time
    long long tie_count = 0;   // pairs achieving the maximum at that step

    friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct SelectedPair {
    VertexPair pair;
    int common_size = 0;
    long long tie_count = 0;
};

struct SolveResult {
    int clique_order = 0;
    std::vector<ContractionStep> trace;
    Coloring coloring;   // keyed by the input graph's vertex ids
    int steps = 0;       // == trace.size() == n - clique_order
};

// The pair scan is the hot loop. The packed-bitset kernel runs it serially
// or OpenMP-parallel; both give bit-identical selections, and the plain
// sorted-set reference below is kept as the differential baseline.
enum class ScanMode { Auto, ForceSerial, ForceParallel };

struct SolverOptions {
    ScanMode scan_mode = ScanMode::Auto;
};

// Maximum-common-neighborhood pair over all non-adjacent pairs, ties broken
// per policy. nullopt iff g is complete.
std::optional<SelectedPair> select_pair(const Graph& g, const TiePolicy& policy,
                                        const SolverOptions& opts = {});

// Naive O(n^2) scan with sorted-vector intersections. Reference semantics
// for the kernel; used directly by tests.
std::optional<SelectedPair> select_pair_reference(const Graph& g, const TiePolicy& policy);

// Repeatedly contracts the selected pair until the graph is complete.
// clique_order is the surviving vertex count; the coloring read off the
// merge classes is proper on the input with exactly clique_order colors.
SolveResult run_operation1(const Graph& g, const TiePolicy& policy,
                           const SolverOptions& opts = {});

// Same loop over Graph values via select_pair_reference + Graph::contract.
SolveResult run_operation1_reference(const Graph& g, const TiePolicy& policy);

// Reads the coloring off final_state's merge classes: vertices of
// `original` grouped by the class that absorbed them, classes numbered by
// their smallest member. Throws if the result is not proper on `original`
// (that would mean an invalid contraction sequence).
Coloring coloring_from_provenance(const Graph& original, const Graph& final_state);

// Contracts each color class of a proper coloring to a single vertex.
// For an optimal coloring the result is complete on c.color_count vertices.
Graph contract_color_classes(const Graph& g, const Coloring& c);

}  // namespace chroma
