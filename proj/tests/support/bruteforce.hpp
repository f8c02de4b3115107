// Brute-force reference routines for tests. Deliberately dumb: lexicographic
// vertex order, no symmetry breaking, no bounds beyond "this edge already
// conflicts". Desk scale only (n <= 10 or so).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/solver.hpp"

namespace brute {

inline bool color_rec(const chroma::Graph& g, const std::vector<int>& vs, std::size_t i, int k,
                      std::map<int, int>& colors) {
    if (i == vs.size()) return true;
    const int v = vs[i];
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            auto it = colors.find(u);
            if (it != colors.end() && it->second == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[v] = c;
        if (color_rec(g, vs, i + 1, k, colors)) return true;
        colors.erase(v);
    }
    return false;
}

inline bool k_colorable(const chroma::Graph& g, int k) {
    std::map<int, int> colors;
    return color_rec(g, g.vertices(), 0, k, colors);
}

inline int chi(const chroma::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colorable(g, k)) return k;
}

// All proper k-colorings, folded to partitions (classes sorted by minimum
// element) and deduplicated. Enumerates every coloring, so k! duplicates per
// partition; fine at this scale.
inline std::set<std::vector<std::vector<int>>> partitions_into(const chroma::Graph& g, int k) {
    std::set<std::vector<std::vector<int>>> out;
    const auto& vs = g.vertices();
    std::map<int, int> colors;

    auto canonical = [&]() {
        std::map<int, std::vector<int>> by_color;
        for (int v : vs) by_color[colors[v]].push_back(v);
        if (static_cast<int>(by_color.size()) != k) return;  // must use exactly k colors
        std::vector<std::vector<int>> classes;
        for (auto& [c, members] : by_color) classes.push_back(members);
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        out.insert(classes);
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vs.size()) {
            canonical();
            return;
        }
        const int v = vs[i];
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                auto it = colors.find(u);
                if (it != colors.end() && it->second == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            colors[v] = c;
            self(self, i + 1);
            colors.erase(v);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::set<std::vector<std::vector<int>>> chromatic_partitions(const chroma::Graph& g) {
    return partitions_into(g, chi(g));
}

// Max-common-neighborhood pair scan over all non-adjacent pairs, written
// against the public Graph API only. LexMin and LexMax tie-breaking.
struct PairScan {
    chroma::VertexPair lexmin{0, 0};
    chroma::VertexPair lexmax{0, 0};
    int max_size = -1;
    long long tie_count = 0;
};

inline std::optional<PairScan> select_pair(const chroma::Graph& g) {
    PairScan s;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const int u = vs[i], v = vs[j];
            if (g.adjacent(u, v)) continue;
            const int size = static_cast<int>(g.common_neighborhood(u, v).size());
            if (size > s.max_size) {
                s.max_size = size;
                s.tie_count = 1;
                s.lexmin = s.lexmax = {u, v};
            } else if (size == s.max_size) {
                ++s.tie_count;
                s.lexmax = {u, v};  // scan order is lexicographic, so the last tie is LexMax
            }
        }
    }
    if (s.max_size < 0) return std::nullopt;
    return s;
}

// Largest clique size by subset expansion; n <= ~12.
inline int omega_rec(const chroma::Graph& g, const std::vector<int>& vs, std::size_t i,
                     std::vector<int>& cur) {
    if (i == vs.size()) return static_cast<int>(cur.size());
    int best = omega_rec(g, vs, i + 1, cur);
    const int v = vs[i];
    bool fits = true;
    for (int u : cur)
        if (!g.adjacent(u, v)) {
            fits = false;
            break;
        }
    if (fits) {
        cur.push_back(v);
        best = std::max(best, omega_rec(g, vs, i + 1, cur));
        cur.pop_back();
    }
    return best;
}

inline int omega(const chroma::Graph& g) {
    std::vector<int> cur;
    return omega_rec(g, g.vertices(), 0, cur);
}

}  // namespace brute
