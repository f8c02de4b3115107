#include "chroma/graph.hpp"

#include <algorithm>

namespace chroma {

VertexPair canonical_pair(int a, int b) {
    if (a == b) throw GraphError("vertex pair must be distinct: " + std::to_string(a));
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.ids_.resize(n);
    for (int i = 0; i < n; ++i) {
        g.ids_[i] = i;
        g.adj_[i];
        g.prov_[i] = {i};
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& [id, nbrs] : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& [id, nbrs] : adj_) deg_sum += static_cast<long long>(nbrs.size());
    return deg_sum / 2;
}

bool Graph::has_vertex(int v) const { return adj_.count(v) > 0; }

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = neighbors(u);
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<int> Graph::common_neighborhood(int u, int v) const {
    if (u == v) throw GraphError("common_neighborhood needs distinct vertices");
    const auto& nu = neighbors(u);
    const auto& nv = neighbors(v);
    std::vector<int> out;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
    return out;
}

bool Graph::is_complete() const {
    const auto full = ids_.size() - 1;
    for (const auto& [id, nbrs] : adj_)
        if (nbrs.size() != full) return false;
    return true;  // vacuously true for empty and single-vertex graphs
}

bool Graph::is_independent_set(const std::vector<int>& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!has_vertex(s[i])) throw GraphError("unknown vertex " + std::to_string(s[i]));
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (adjacent(s[i], s[j])) return false;
    }
    return true;
}

bool Graph::is_connected() const {
    if (ids_.size() <= 1) return true;
    std::vector<int> stack = {ids_.front()};
    std::map<int, bool> seen;
    seen[ids_.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_.at(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == ids_.size();
}

const std::vector<int>& Graph::provenance(int v) const {
    auto it = prov_.find(v);
    if (it == prov_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
}

Graph Graph::contract(int u, int v) const {
    if (u == v) throw GraphError("cannot contract a vertex with itself");
    if (adjacent(u, v))
        throw GraphError("cannot contract adjacent pair (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    const int lo = std::min(u, v);
    const int hi = std::max(u, v);

    Graph g = *this;
    const auto& nlo = g.adj_.at(lo);
    const auto& nhi = g.adj_.at(hi);
    std::vector<int> merged;
    std::set_union(nlo.begin(), nlo.end(), nhi.begin(), nhi.end(), std::back_inserter(merged));

    // redirect hi -> lo in every neighbor of hi
    for (int w : nhi) {
        auto& nw = g.adj_.at(w);
        nw.erase(std::lower_bound(nw.begin(), nw.end(), hi));
        auto pos = std::lower_bound(nw.begin(), nw.end(), lo);
        if (pos == nw.end() || *pos != lo) nw.insert(pos, lo);
    }
    g.adj_[lo] = std::move(merged);
    g.adj_.erase(hi);

    auto& plo = g.prov_.at(lo);
    const auto& phi = g.prov_.at(hi);
    std::vector<int> pm;
    std::set_union(plo.begin(), plo.end(), phi.begin(), phi.end(), std::back_inserter(pm));
    plo = std::move(pm);
    g.prov_.erase(hi);

    g.ids_.erase(std::lower_bound(g.ids_.begin(), g.ids_.end(), hi));
    return g;
}

Graph Graph::delete_vertices(const std::vector<int>& drop) const {
    for (int v : drop)
        if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
    Graph g;
    std::vector<char> dropped;
    if (!ids_.empty()) dropped.resize(ids_.back() + 1, 0);
    for (int v : drop) dropped[v] = 1;
    for (int v : ids_) {
        if (dropped[v]) continue;
        g.ids_.push_back(v);
        g.prov_[v] = prov_.at(v);
        auto& nbrs = g.adj_[v];
        for (int w : adj_.at(v))
            if (!dropped[w]) nbrs.push_back(w);
    }
    return g;
}

}  // namespace chroma
