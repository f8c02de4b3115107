#include "chroma/solver.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <stdexcept>

#include "chroma/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chroma {

namespace {

constexpr int kParallelMinVertices = 128;

std::uint64_t pair_hash(std::uint64_t seed, int u, int v) {
    return mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(u)) ^
                 static_cast<std::uint64_t>(v));
}

// Streaming maximum over candidate pairs. Merging partial accumulators is
// associative and commutative, so parallel scans select identically to the
// serial one for any schedule or thread count.
struct ScanAccum {
    int max_size = -1;
    long long ties = 0;
    VertexPair lexmin{};
    VertexPair lexmax{};
    std::uint64_t min_hash = ~0ULL;
    VertexPair min_hash_pair{};

    void offer(VertexPair p, int size, bool want_hash, std::uint64_t policy_seed) {
        if (size < max_size) return;
        const std::uint64_t h = want_hash ? pair_hash(policy_seed, p.u, p.v) : 0;
        if (size > max_size) {
            max_size = size;
            ties = 1;
            lexmin = lexmax = min_hash_pair = p;
            min_hash = h;
            return;
        }
        ++ties;
        if (p < lexmin) lexmin = p;
        if (lexmax < p) lexmax = p;
        if (h < min_hash || (h == min_hash && p < min_hash_pair)) {
            min_hash = h;
            min_hash_pair = p;
        }
    }

    void merge(const ScanAccum& o) {
        if (o.max_size < max_size) return;
        if (o.max_size > max_size) {
            *this = o;
            return;
        }
        if (max_size < 0) return;
        ties += o.ties;
        if (o.lexmin < lexmin) lexmin = o.lexmin;
        if (lexmax < o.lexmax) lexmax = o.lexmax;
        if (o.min_hash < min_hash || (o.min_hash == min_hash && o.min_hash_pair < min_hash_pair)) {
            min_hash = o.min_hash;
            min_hash_pair = o.min_hash_pair;
        }
    }

    std::optional<SelectedPair> pick(const TiePolicy& policy) const {
        if (max_size < 0) return std::nullopt;
        VertexPair chosen{};
        switch (policy.kind) {
            case TiePolicyKind::LexMin: chosen = lexmin; break;
            case TiePolicyKind::LexMax: chosen = lexmax; break;
            case TiePolicyKind::SeededRandom: chosen = min_hash_pair; break;
        }
        return SelectedPair{chosen, max_size, ties};
    }
};

// Packed adjacency over dense slots. Slot order follows ascending vertex id,
// so lexicographic comparisons agree between slots and ids.
struct DenseState {
    int words = 0;
    std::vector<std::uint64_t> rows;
    std::vector<int> slot_id;
    std::vector<int> alive;                    // alive slots, ascending
    std::vector<std::vector<int>> classes;     // slot -> merged input ids, sorted

    std::uint64_t* row(int s) { return rows.data() + static_cast<std::size_t>(s) * words; }
    const std::uint64_t* row(int s) const {
        return rows.data() + static_cast<std::size_t>(s) * words;
    }

    bool bit(int s, int t) const { return (row(s)[t >> 6] >> (t & 63)) & 1ULL; }
    void set_bit(int s, int t) { row(s)[t >> 6] |= 1ULL << (t & 63); }
    void clear_bit(int s, int t) { row(s)[t >> 6] &= ~(1ULL << (t & 63)); }

    int common_size(int s, int t) const {
        const std::uint64_t* a = row(s);
        const std::uint64_t* b = row(t);
        int total = 0;
        for (int w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
        return total;
    }
};

DenseState build_dense(const Graph& g) {
    DenseState st;
    st.slot_id = g.vertices();
    const int n = static_cast<int>(st.slot_id.size());
    st.words = (n + 63) / 64;
    st.rows.assign(static_cast<std::size_t>(n) * st.words, 0);
    st.alive.resize(n);
    st.classes.resize(n);
    for (int s = 0; s < n; ++s) {
        st.alive[s] = s;
        st.classes[s] = {st.slot_id[s]};
    }
    for (int s = 0; s < n; ++s) {
        for (int w : g.neighbors(st.slot_id[s])) {
            const auto it = std::lower_bound(st.slot_id.begin(), st.slot_id.end(), w);
            st.set_bit(s, static_cast<int>(it - st.slot_id.begin()));
        }
    }
    return st;
}

ScanAccum scan_serial(const DenseState& st, bool want_hash, std::uint64_t seed) {
    ScanAccum acc;
    const int a = static_cast<int>(st.alive.size());
    for (int ii = 0; ii < a; ++ii) {
        const int i = st.alive[ii];
        for (int jj = ii + 1; jj < a; ++jj) {
            const int j = st.alive[jj];
            if (st.bit(i, j)) continue;
            acc.offer({st.slot_id[i], st.slot_id[j]}, st.common_size(i, j), want_hash, seed);
        }
    }
    return acc;
}

ScanAccum scan_parallel(const DenseState& st, bool want_hash, std::uint64_t seed) {
#ifdef _OPENMP
    ScanAccum acc;
    const int a = static_cast<int>(st.alive.size());
#pragma omp parallel
    {
        ScanAccum local;
#pragma omp for schedule(dynamic, 8) nowait
        for (int ii = 0; ii < a; ++ii) {
            const int i = st.alive[ii];
            for (int jj = ii + 1; jj < a; ++jj) {
                const int j = st.alive[jj];
                if (st.bit(i, j)) continue;
                local.offer({st.slot_id[i], st.slot_id[j]}, st.common_size(i, j), want_hash,
                            seed);
            }
        }
#pragma omp critical(chroma_scan_merge)
        acc.merge(local);
    }
    return acc;
#else
    return scan_serial(st, want_hash, seed);
#endif
}

ScanAccum scan(const DenseState& st, const TiePolicy& policy, ScanMode mode) {
    const bool want_hash = policy.kind == TiePolicyKind::SeededRandom;
    bool parallel = false;
#ifdef _OPENMP
    switch (mode) {
        case ScanMode::Auto:
            parallel = static_cast<int>(st.alive.size()) >= kParallelMinVertices;
            break;
        case ScanMode::ForceSerial: parallel = false; break;
        case ScanMode::ForceParallel: parallel = true; break;
    }
#else
    (void)mode;
#endif
    return parallel ? scan_parallel(st, want_hash, policy.seed)
                    : scan_serial(st, want_hash, policy.seed);
}

void contract_dense(DenseState& st, int slot_u, int slot_v) {
    // slot_u < slot_v; non-adjacent. slot_u survives.
    std::uint64_t* ru = st.row(slot_u);
    const std::uint64_t* rv = st.row(slot_v);
    for (int w = 0; w < st.words; ++w) ru[w] |= rv[w];
    for (int w = 0; w < st.words; ++w) {
        std::uint64_t bits = rv[w];
        while (bits) {
            const int t = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            st.clear_bit(t, slot_v);
            st.set_bit(t, slot_u);
        }
    }
    std::fill_n(st.row(slot_v), st.words, 0ULL);

    auto& cu = st.classes[slot_u];
    auto& cv = st.classes[slot_v];
    std::vector<int> merged;
    std::set_union(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(merged));
    cu = std::move(merged);
    cv.clear();

    st.alive.erase(std::lower_bound(st.alive.begin(), st.alive.end(), slot_v));
}

int slot_of(const DenseState& st, int id) {
    return static_cast<int>(std::lower_bound(st.slot_id.begin(), st.slot_id.end(), id) -
                            st.slot_id.begin());
}

Coloring coloring_from_classes(const std::vector<std::vector<int>>& classes) {
    Coloring c;
    c.color_count = static_cast<int>(classes.size());
    for (int col = 0; col < c.color_count; ++col)
        for (int v : classes[col]) c.assignment[v] = col;
    return c;
}

}  // namespace

std::string to_string(const TiePolicy& p) {
    switch (p.kind) {
        case TiePolicyKind::LexMin: return "lexmin";
        case TiePolicyKind::LexMax: return "lexmax";
        case TiePolicyKind::SeededRandom: return "random:" + std::to_string(p.seed);
    }
    return "lexmin";
}

std::optional<TiePolicy> parse_tie_policy(const std::string& text) {
    if (text == "lexmin") return TiePolicy::lexmin();
    if (text == "lexmax") return TiePolicy::lexmax();
    if (text.rfind("random:", 0) == 0) {
        const char* first = text.data() + 7;
        const char* last = text.data() + text.size();
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(first, last, seed);
        if (ec == std::errc() && ptr == last && first != last) {
            return TiePolicy::seeded_random(seed);
        }
    }
    return std::nullopt;
}

std::optional<SelectedPair> select_pair(const Graph& g, const TiePolicy& policy,
                                        const SolverOptions& opts) {
    const DenseState st = build_dense(g);
    return scan(st, policy, opts.scan_mode).pick(policy);
}

std::optional<SelectedPair> select_pair_reference(const Graph& g, const TiePolicy& policy) {
    ScanAccum acc;
    const bool want_hash = policy.kind == TiePolicyKind::SeededRandom;
    const auto& ids = g.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& ni = g.neighbors(ids[i]);
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (std::binary_search(ni.begin(), ni.end(), ids[j])) continue;
            const int size = static_cast<int>(g.common_neighborhood(ids[i], ids[j]).size());
            acc.offer({ids[i], ids[j]}, size, want_hash, policy.seed);
        }
    }
    return acc.pick(policy);
}

SolveResult run_operation1(const Graph& g, const TiePolicy& policy, const SolverOptions& opts) {
    if (g.vertex_count() < 1) throw GraphError("cannot solve an empty graph");
    DenseState st = build_dense(g);
    SolveResult result;
    while (true) {
        const auto sel = scan(st, policy, opts.scan_mode).pick(policy);
        if (!sel) break;
        result.trace.push_back({sel->pair, sel->common_size, sel->tie_count});
        contract_dense(st, slot_of(st, sel->pair.u), slot_of(st, sel->pair.v));
    }
    result.clique_order = static_cast<int>(st.alive.size());
    result.steps = static_cast<int>(result.trace.size());

    std::vector<std::vector<int>> classes;
    classes.reserve(st.alive.size());
    for (int s : st.alive) classes.push_back(std::move(st.classes[s]));
    result.coloring = coloring_from_classes(classes);

    if (!is_proper_coloring(g, result.coloring))
        throw std::logic_error("contraction produced an improper coloring");
    return result;
}

SolveResult run_operation1_reference(const Graph& g, const TiePolicy& policy) {
    if (g.vertex_count() < 1) throw GraphError("cannot solve an empty graph");
    Graph cur = g;
    SolveResult result;
    while (auto sel = select_pair_reference(cur, policy)) {
        result.trace.push_back({sel->pair, sel->common_size, sel->tie_count});
        cur = cur.contract(sel->pair.u, sel->pair.v);
    }
    result.clique_order = cur.vertex_count();
    result.steps = static_cast<int>(result.trace.size());
    result.coloring = coloring_from_provenance(g, cur);
    return result;
}

Coloring coloring_from_provenance(const Graph& original, const Graph& final_state) {
    std::vector<std::vector<int>> classes(final_state.vertex_count());
    const auto& finals = final_state.vertices();
    for (int v : original.vertices()) {
        const auto& pv = original.provenance(v);
        int col = -1;
        for (std::size_t f = 0; f < finals.size(); ++f) {
            const auto& sf = final_state.provenance(finals[f]);
            if (std::includes(sf.begin(), sf.end(), pv.begin(), pv.end())) {
                col = static_cast<int>(f);
                break;
            }
        }
        if (col < 0)
            throw GraphError("final state does not partition the original's vertices");
        classes[col].push_back(v);
    }
    const Coloring c = coloring_from_classes(classes);
    if (!is_proper_coloring(original, c))
        throw std::logic_error("merge classes are not independent in the original graph");
    return c;
}

Graph contract_color_classes(const Graph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c)) throw GraphError("coloring is not proper on the graph");
    const auto classes = color_classes(c);
    for (const auto& cls : classes)
        if (cls.empty()) throw GraphError("coloring has an empty color class");
    Graph cur = g;
    for (const auto& cls : classes) {
        for (std::size_t i = 1; i < cls.size(); ++i) cur = cur.contract(cls[0], cls[i]);
    }
    return cur;
}

}  // namespace chroma
