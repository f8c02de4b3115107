#include "chroma/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace chroma {

namespace {

struct NodeCounter {
    long long used = 0;
    long long limit = 0;
    bool exhausted = false;

    // false once the limit is crossed
    bool tick() {
        if (++used > limit) exhausted = true;
        return !exhausted;
    }
};

// Dense view: vertex ids mapped to 0..n-1 in ascending id order.
struct DenseView {
    std::vector<int> ids;
    std::vector<std::vector<int>> adj;   // dense indices, sorted
    std::vector<std::uint64_t> rows;     // packed adjacency
    int words = 0;

    const std::uint64_t* row(int v) const {
        return rows.data() + static_cast<std::size_t>(v) * words;
    }
    int n() const { return static_cast<int>(ids.size()); }
};

DenseView make_dense(const Graph& g) {
    DenseView d;
    d.ids = g.vertices();
    const int n = d.n();
    d.words = (n + 63) / 64;
    d.adj.resize(n);
    d.rows.assign(static_cast<std::size_t>(n) * d.words, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(d.ids[v])) {
            const int t = static_cast<int>(
                std::lower_bound(d.ids.begin(), d.ids.end(), w) - d.ids.begin());
            d.adj[v].push_back(t);
        }
        for (int t : d.adj[v]) d.rows[static_cast<std::size_t>(v) * d.words + (t >> 6)] |=
            1ULL << (t & 63);
    }
    return d;
}

// ---- k-colorability backtracker ----

struct ColorSearch {
    const DenseView& d;
    int k;
    NodeCounter& nodes;
    std::vector<int> color;                  // -1 = uncolored
    std::vector<std::vector<int>> nbr_count; // per vertex, per color
    std::vector<int> sat;                    // distinct neighbor colors
    int colored = 0;

    ColorSearch(const DenseView& dv, int kk, NodeCounter& nc)
        : d(dv), k(kk), nodes(nc), color(dv.n(), -1),
          nbr_count(dv.n(), std::vector<int>(kk, 0)), sat(dv.n(), 0) {}

    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < d.n(); ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && d.adj[v].size() > d.adj[best].size()))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color[v] = c;
        ++colored;
        for (int w : d.adj[v])
            if (++nbr_count[w][c] == 1) ++sat[w];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        --colored;
        for (int w : d.adj[v])
            if (--nbr_count[w][c] == 0) --sat[w];
    }

    // max_used: highest color index assigned so far (-1 initially)
    bool solve(int max_used) {
        if (!nodes.tick()) return false;
        if (colored == d.n()) return true;
        const int v = pick_vertex();
        const int top = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= top; ++c) {
            if (nbr_count[v][c] != 0) continue;
            assign(v, c);
            if (solve(std::max(max_used, c))) return true;
            unassign(v, c);
            if (nodes.exhausted) return false;
        }
        return false;
    }
};

KColorResult k_colorable_impl(const Graph& g, int k, NodeCounter& nodes) {
    KColorResult res;
    if (g.vertex_count() == 0) {
        res.outcome = KColorResult::Outcome::Colorable;
        res.coloring = Coloring{};
        return res;
    }
    const DenseView d = make_dense(g);
    ColorSearch search(d, k, nodes);
    const bool found = search.solve(-1);
    if (nodes.exhausted) {
        res.outcome = KColorResult::Outcome::Exhausted;
        return res;
    }
    if (!found) {
        res.outcome = KColorResult::Outcome::NotColorable;
        return res;
    }
    Coloring c;
    int used = 0;
    for (int v = 0; v < d.n(); ++v) {
        c.assignment[d.ids[v]] = search.color[v];
        used = std::max(used, search.color[v] + 1);
    }
    c.color_count = used;
    res.outcome = KColorResult::Outcome::Colorable;
    res.coloring = std::move(c);
    return res;
}

// ---- max clique, branch and bound ----

struct CliqueSearch {
    const DenseView& d;
    NodeCounter& nodes;
    std::vector<int> current;
    std::vector<int> best;

    CliqueSearch(const DenseView& dv, NodeCounter& nc) : d(dv), nodes(nc) {}

    // Greedy-colors P; candidates come back ordered so the largest color
    // bound is expanded first and pruning cuts early.
    void order_by_color(const std::vector<int>& p, std::vector<int>& out_vertices,
                        std::vector<int>& out_bounds) const {
        std::vector<std::vector<int>> classes;
        std::vector<std::vector<std::uint64_t>> class_bits;
        for (int v : p) {
            bool placed = false;
            for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
                const std::uint64_t* rv = d.row(v);
                bool conflict = false;
                for (int w = 0; w < d.words; ++w)
                    if (rv[w] & class_bits[c][w]) { conflict = true; break; }
                if (!conflict) {
                    classes[c].push_back(v);
                    class_bits[c][v >> 6] |= 1ULL << (v & 63);
                    placed = true;
                }
            }
            if (!placed) {
                classes.emplace_back(1, v);
                class_bits.emplace_back(d.words, 0ULL);
                class_bits.back()[v >> 6] |= 1ULL << (v & 63);
            }
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                out_vertices.push_back(v);
                out_bounds.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(std::vector<int>& p) {
        if (!nodes.tick()) return;
        if (p.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<int> verts, bounds;
        order_by_color(p, verts, bounds);
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (current.size() + bounds[i] <= best.size()) return;
            const int v = verts[i];
            std::vector<int> next;
            const std::uint64_t* rv = d.row(v);
            for (int j = 0; j < i; ++j) {
                const int w = verts[j];
                if ((rv[w >> 6] >> (w & 63)) & 1ULL) next.push_back(w);
            }
            current.push_back(v);
            expand(next);
            current.pop_back();
            if (nodes.exhausted) return;
        }
    }
};

CliqueResult max_clique_impl(const Graph& g, NodeCounter& nodes) {
    CliqueResult res;
    if (g.vertex_count() == 0) {
        res.exact = true;
        return res;
    }
    const DenseView d = make_dense(g);
    CliqueSearch search(d, nodes);
    std::vector<int> all(d.n());
    for (int v = 0; v < d.n(); ++v) all[v] = v;
    // expand highest degree first
    std::stable_sort(all.begin(), all.end(),
                     [&](int a, int b) { return d.adj[a].size() > d.adj[b].size(); });
    search.expand(all);
    for (int v : search.best) res.members.push_back(d.ids[v]);
    std::sort(res.members.begin(), res.members.end());
    res.exact = !nodes.exhausted;
    return res;
}

ChiResult chi_impl(const Graph& g, NodeCounter& nodes) {
    ChiResult res;
    if (g.vertex_count() == 0) {
        res.chi = 0;
        res.status = SearchStatus::Exact;
        res.witness = Coloring{};
        return res;
    }
    const CliqueResult clique = max_clique_impl(g, nodes);
    if (nodes.exhausted) return res;
    const int lb = std::max<int>(1, static_cast<int>(clique.members.size()));
    for (int k = lb; k <= g.vertex_count(); ++k) {
        KColorResult kres = k_colorable_impl(g, k, nodes);
        if (kres.outcome == KColorResult::Outcome::Exhausted) return res;
        if (kres.outcome == KColorResult::Outcome::Colorable) {
            res.chi = k;
            res.status = SearchStatus::Exact;
            res.witness = std::move(kres.coloring);
            return res;
        }
    }
    // unreachable: k = |V| always colors
    return res;
}

// ---- chromatic partition enumeration ----

// Restricted-growth enumeration: vertex 0 opens class 0 and each later
// vertex may only open the next unused class, so every partition shows up
// exactly once, already in canonical order (classes by minimum element).
struct PartitionEnum {
    const DenseView& d;
    int l;
    long long cap;
    NodeCounter& nodes;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<std::uint64_t>> class_bits;
    std::vector<ChromaticPartition> out;
    bool truncated = false;

    PartitionEnum(const DenseView& dv, int ll, long long cap_, NodeCounter& nc)
        : d(dv), l(ll), cap(cap_), nodes(nc) {}

    bool feasible(int v, int c) const {
        const std::uint64_t* rv = d.row(v);
        for (int w = 0; w < d.words; ++w)
            if (rv[w] & class_bits[c][w]) return false;
        return true;
    }

    // returns false to stop the whole enumeration
    bool recurse(int v) {
        if (!nodes.tick()) return false;
        if (v == d.n()) {
            if (static_cast<int>(classes.size()) == l) {
                ChromaticPartition p;
                for (const auto& cls : classes) {
                    p.classes.emplace_back();
                    for (int x : cls) p.classes.back().push_back(d.ids[x]);
                }
                out.push_back(std::move(p));
                if (static_cast<long long>(out.size()) >= cap) {
                    truncated = true;
                    return false;
                }
            }
            return true;
        }
        const int open = static_cast<int>(classes.size());
        const int top = std::min(open, l - 1);  // existing classes plus one new
        for (int c = 0; c <= top; ++c) {
            if (c < open && !feasible(v, c)) continue;
            if (c == open) {
                classes.emplace_back();
                class_bits.emplace_back(d.words, 0ULL);
            }
            classes[c].push_back(v);
            class_bits[c][v >> 6] |= 1ULL << (v & 63);
            const bool keep_going = recurse(v + 1);
            classes[c].pop_back();
            class_bits[c][v >> 6] &= ~(1ULL << (v & 63));
            if (c == open) {
                classes.pop_back();
                class_bits.pop_back();
            }
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

KColorResult is_k_colorable(const Graph& g, int k, const Budget& budget) {
    if (k < 1) throw GraphError("k must be at least 1");
    NodeCounter nodes{0, budget.max_nodes};
    KColorResult res = k_colorable_impl(g, k, nodes);
    res.nodes = nodes.used;
    return res;
}

ChiResult exact_chromatic_number(const Graph& g, const Budget& budget) {
    NodeCounter nodes{0, budget.max_nodes};
    ChiResult res = chi_impl(g, nodes);
    res.nodes = nodes.used;
    return res;
}

CliqueResult max_clique(const Graph& g, const Budget& budget) {
    NodeCounter nodes{0, budget.max_nodes};
    CliqueResult res = max_clique_impl(g, nodes);
    res.nodes = nodes.used;
    return res;
}

PartitionEnumeration enumerate_chromatic_partitions(const Graph& g, const Budget& budget) {
    PartitionEnumeration res;
    NodeCounter nodes{0, budget.max_nodes};
    const ChiResult chi = chi_impl(g, nodes);
    if (chi.status != SearchStatus::Exact) return res;
    res.chi = *chi.chi;
    if (g.vertex_count() == 0) {
        res.status = SearchStatus::Exact;
        res.partitions.push_back({});
        return res;
    }
    const DenseView d = make_dense(g);
    PartitionEnum pe(d, res.chi, budget.max_partitions, nodes);
    pe.recurse(0);
    res.partitions = std::move(pe.out);
    res.truncated = pe.truncated;
    res.status = nodes.exhausted ? SearchStatus::Exhausted : SearchStatus::Exact;
    return res;
}

Condition1Report check_condition1(const Graph& g, const Budget& budget) {
    if (g.vertex_count() < 3) throw GraphError("need at least 3 vertices");
    const auto sel = select_pair_reference(g, TiePolicy::lexmin());
    if (!sel) throw GraphError("graph is complete; no non-adjacent pair to select");

    Condition1Report report;
    report.pair = sel->pair;
    const auto& nu = g.neighbors(sel->pair.u);
    const auto& nv = g.neighbors(sel->pair.v);

    const Graph g0 = g.delete_vertices({sel->pair.u, sel->pair.v});
    const PartitionEnumeration pe = enumerate_chromatic_partitions(g0, budget);
    report.g0_chi = pe.chi;
    report.exhausted = pe.status == SearchStatus::Exhausted || pe.truncated;

    bool all_hold = true;
    for (const auto& partition : pe.partitions) {
        bool holds = true;
        for (const auto& cls : partition.classes) {
            bool touches_u = false;
            for (int a : cls)
                if (std::binary_search(nu.begin(), nu.end(), a)) { touches_u = true; break; }
            if (touches_u) continue;
            for (int a : cls)
                if (std::binary_search(nv.begin(), nv.end(), a)) { holds = false; break; }
            if (!holds) break;
        }
        ++report.partitions_checked;
        if (holds) {
            report.holds_for_some_partition = true;
        } else {
            all_hold = false;
            if (!report.witness_partition) report.witness_partition = partition;
        }
    }
    report.holds_for_all_partitions = report.partitions_checked >= 1 && all_hold;
    return report;
}

}  // namespace chroma
