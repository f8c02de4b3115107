#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/solver.hpp"

namespace chroma {

// Positioned parse failure; line numbers are 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;  // tolerated defects (duplicate edges, bad header count)
};

// DIMACS .col: 'c' comments, one 'p edge <n> <m>' header, 'e <u> <v>' lines
// with 1-based endpoints. Duplicate edges collapse with a warning; a wrong
// declared edge count is a warning, not an error.
ParsedGraph parse_dimacs(const std::string& text);

// Dense 1..n relabeling in ascending id order; edges sorted, u < v, LF endings.
std::string write_dimacs(const Graph& g);

// Lines of "<u> <v>" with 0-based ids; '#' comments and blank lines skipped;
// vertex count inferred as max id + 1.
Graph parse_edge_list(const std::string& text);

struct RunReport {
    std::string input_name;
    int n = 0;
    long long m = 0;
    std::string tie_policy = "none";
    std::optional<int> heuristic_clique_order;
    std::optional<int> heuristic_steps;
    std::optional<int> exact_chi;
    std::string exact_status = "skipped";  // exact | exhausted | skipped
    std::optional<bool> agreement;
    bool trace_included = false;
    std::optional<std::vector<ContractionStep>> trace;
    std::vector<std::pair<std::string, long long>> wall_times_ms;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Stable field order, schema field "report_version": 1.
std::string write_report(const RunReport& r);
RunReport parse_report(const std::string& json_text);

// agreement present iff both results present and equal to their comparison;
// trace present iff flagged. Throws GraphError on violation.
void validate_report(const RunReport& r);

}  // namespace chroma
