#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chroma {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unordered pair in canonical form (u < v).
struct VertexPair {
    int u = 0;
    int v = 0;
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

VertexPair canonical_pair(int a, int b);

// Simple undirected graph over stable integer vertex ids. Immutable by
// contract: contract/delete_vertices return new values. Each vertex carries
// a provenance set, the original ids merged into it (singletons at
// construction, unions after contraction).
class Graph {
public:
    Graph() = default;

    // n vertices with ids 0..n-1. Duplicate edges collapse; self-loops and
    // out-of-range endpoints are construction errors.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    long long edge_count() const;
    const std::vector<int>& vertices() const { return ids_; }
    bool has_vertex(int v) const;
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;   // sorted
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<int> common_neighborhood(int u, int v) const;
    bool is_complete() const;
    bool is_independent_set(const std::vector<int>& s) const;
    bool is_connected() const;

    // Original ids merged into v, sorted. min(provenance(v)) == v always.
    const std::vector<int>& provenance(int v) const;

    // Fuses non-adjacent u and v; the smaller id survives with the union of
    // both neighborhoods and both provenance sets.
    Graph contract(int u, int v) const;

    Graph delete_vertices(const std::vector<int>& drop) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<int> ids_;                  // sorted
    std::map<int, std::vector<int>> adj_;   // id -> sorted neighbor ids
    std::map<int, std::vector<int>> prov_;  // id -> sorted original ids
};

}  // namespace chroma
