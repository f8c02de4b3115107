#include "chroma/mine.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "chroma/io.hpp"
#include "chroma/rng.hpp"

namespace chroma {

namespace {

long long p_millis(double p) { return std::llround(p * 1000.0); }

void validate(const MineConfig& cfg) {
    if (cfg.n_min < 3) throw SpecError("mine: n_min must be at least 3");
    if (cfg.n_min > cfg.n_max) throw SpecError("mine: n_min must not exceed n_max");
    if (cfg.count < 1) throw SpecError("mine: count must be at least 1");
    if (cfg.p_list.empty()) throw SpecError("mine: need at least one edge probability");
    for (double p : cfg.p_list)
        if (p < 0.0 || p > 1.0) throw SpecError("mine: edge probability must be in [0,1]");
    if (cfg.policies.empty()) throw SpecError("mine: need at least one tie policy");
}

MineInstance run_instance(const MineConfig& cfg, int n, double p, int index) {
    MineInstance inst;
    inst.n = n;
    inst.p = p;
    inst.index = index;
    inst.graph_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(p_millis(p)),
                                  static_cast<std::uint64_t>(index));
    const Graph g = generate(GraphFamily::random(n, p, inst.graph_seed));

    int heur_min = 0, heur_max = 0;
    for (std::size_t i = 0; i < cfg.policies.size(); ++i) {
        const int order = run_operation1(g, cfg.policies[i]).clique_order;
        inst.heuristic.emplace_back(to_string(cfg.policies[i]), order);
        heur_min = i == 0 ? order : std::min(heur_min, order);
        heur_max = i == 0 ? order : std::max(heur_max, order);
    }
    inst.uniqueness_variance = heur_min != heur_max;

    const ChiResult chi = exact_chromatic_number(g, cfg.budget);
    if (chi.status != SearchStatus::Exact) {
        inst.exhausted = true;
        return inst;
    }
    inst.exact_chi = *chi.chi;
    inst.disagreement = heur_min != *chi.chi || heur_max != *chi.chi;
    if (heur_min < *chi.chi) inst.soundness_violation = true;
    return inst;
}

}  // namespace

MineResult run_mine(const MineConfig& cfg) {
    validate(cfg);

    struct Coord {
        int n;
        double p;
        int index;
    };
    std::vector<Coord> coords;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (double p : cfg.p_list)
            for (int i = 0; i < cfg.count; ++i) coords.push_back({n, p, i});

    std::vector<MineInstance> instances(coords.size());
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < static_cast<long long>(coords.size()); ++idx) {
        const auto& c = coords[idx];
        instances[idx] = run_instance(cfg, c.n, c.p, c.index);
    }

    MineResult res;
    MineCell cell;
    bool cell_open = false;
    for (const auto& inst : instances) {
        if (!cell_open || cell.n != inst.n || cell.p != inst.p) {
            if (cell_open) res.cells.push_back(cell);
            cell = MineCell{inst.n, inst.p, 0, 0, 0, 0, 0};
            cell_open = true;
        }
        ++cell.instances;
        ++res.instances;
        if (inst.exhausted) {
            ++cell.exhausted;
            ++res.exhausted;
        } else if (inst.disagreement) {
            ++cell.disagreements;
            ++res.disagreements;
        } else {
            ++cell.agreements;
            ++res.agreements;
        }
        if (inst.uniqueness_variance) {
            ++cell.uniqueness_variances;
            ++res.uniqueness_variances;
        }
        if (inst.disagreement || inst.uniqueness_variance) res.events.push_back(inst);
        if (inst.soundness_violation && !res.soundness_violation) {
            res.soundness_violation = true;
            res.soundness_message =
                "heuristic clique order below exact chromatic number on random:" +
                std::to_string(inst.n) + "," + std::to_string(inst.p) + "," +
                std::to_string(inst.graph_seed);
        }
    }
    if (cell_open) res.cells.push_back(cell);
    return res;
}

std::vector<std::string> persist_counterexamples(const MineConfig& cfg, const MineResult& res) {
    std::vector<std::string> written;
    if (cfg.out_dir.empty()) return written;
    std::filesystem::create_directories(cfg.out_dir);

    for (const auto& inst : res.events) {
        const Graph g = generate(GraphFamily::random(inst.n, inst.p, inst.graph_seed));
        std::vector<std::string> kinds;
        if (inst.disagreement) kinds.push_back("disagree");
        if (inst.uniqueness_variance) kinds.push_back("unique");
        for (const auto& kind : kinds) {
            const std::string base = kind + "_n" + std::to_string(inst.n) + "_p" +
                                     std::to_string(p_millis(inst.p)) + "_i" +
                                     std::to_string(inst.index);
            {
                std::ofstream col(std::filesystem::path(cfg.out_dir) / (base + ".col"));
                col << write_dimacs(g);
            }
            nlohmann::ordered_json j;
            j["kind"] = kind == "disagree" ? "disagreement" : "uniqueness";
            j["n"] = inst.n;
            j["p"] = inst.p;
            j["index"] = inst.index;
            j["master_seed"] = cfg.seed;
            j["graph_seed"] = inst.graph_seed;
            auto& h = j["heuristic"] = nlohmann::ordered_json::object();
            for (const auto& [policy, order] : inst.heuristic) h[policy] = order;
            if (inst.exact_chi)
                j["exact_chi"] = *inst.exact_chi;
            else
                j["exact_chi"] = nullptr;
            j["graph_file"] = base + ".col";
            {
                std::ofstream meta(std::filesystem::path(cfg.out_dir) / (base + ".json"));
                meta << j.dump(2) << "\n";
            }
            written.push_back(base);
        }
    }
    return written;
}

std::string mine_summary_json(const MineConfig& cfg, const MineResult& res, long long wall_ms) {
    nlohmann::ordered_json j;
    j["report_version"] = 1;
    auto& c = j["mine_config"] = nlohmann::ordered_json::object();
    c["n_min"] = cfg.n_min;
    c["n_max"] = cfg.n_max;
    c["p_list"] = cfg.p_list;
    c["count"] = cfg.count;
    c["seed"] = cfg.seed;
    auto& pol = c["policies"] = nlohmann::ordered_json::array();
    for (const auto& p : cfg.policies) pol.push_back(to_string(p));

    auto rate = [](long long agreements, long long instances, long long exhausted) {
        const long long denom = instances - exhausted;
        return denom > 0 ? static_cast<double>(agreements) / static_cast<double>(denom) : 0.0;
    };

    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (const auto& cell : res.cells) {
        nlohmann::ordered_json cj;
        cj["n"] = cell.n;
        cj["p"] = cell.p;
        cj["instances"] = cell.instances;
        cj["agreements"] = cell.agreements;
        cj["disagreements"] = cell.disagreements;
        cj["uniqueness_variances"] = cell.uniqueness_variances;
        cj["exhausted"] = cell.exhausted;
        cj["agreement_rate"] = rate(cell.agreements, cell.instances, cell.exhausted);
        cells.push_back(std::move(cj));
    }

    auto& totals = j["totals"] = nlohmann::ordered_json::object();
    totals["instances"] = res.instances;
    totals["agreements"] = res.agreements;
    totals["disagreements"] = res.disagreements;
    totals["uniqueness_variances"] = res.uniqueness_variances;
    totals["exhausted"] = res.exhausted;
    totals["agreement_rate"] = rate(res.agreements, res.instances, res.exhausted);
    totals["counterexamples"] = res.disagreements + res.uniqueness_variances;

    j["soundness_violation"] = res.soundness_violation;
    j["wall_times_ms"] = nlohmann::ordered_json{{"total", wall_ms}};
    return j.dump(2) + "\n";
}

}  // namespace chroma
