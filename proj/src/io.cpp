#include "chroma/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chroma {

namespace {

constexpr long long kMaxVertices = 1'000'000;

struct Tokenizer {
    std::vector<std::string_view> tokens;

    explicit Tokenizer(std::string_view line) {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
    }
};

long long parse_ll(std::string_view tok, int line, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError(line, "malformed " + what + " '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_lines(const std::string& text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

}  // namespace

ParsedGraph parse_dimacs(const std::string& text) {
    const auto lines = split_lines(text);
    long long n = -1;
    long long declared_m = 0;
    int header_line = 0;
    std::set<std::pair<int, int>> edges;
    long long duplicate_count = 0;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const int lineno = static_cast<int>(idx) + 1;
        Tokenizer tok(lines[idx]);
        if (tok.tokens.empty()) continue;
        const auto& kind = tok.tokens[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate 'p' header (first at line " +
                                             std::to_string(header_line) + ")");
            if (tok.tokens.size() != 4 || tok.tokens[1] != "edge")
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            n = parse_ll(tok.tokens[2], lineno, "vertex count");
            declared_m = parse_ll(tok.tokens[3], lineno, "edge count");
            if (n < 0) throw ParseError(lineno, "vertex count must be non-negative");
            if (n > kMaxVertices)
                throw ParseError(lineno, "vertex count " + std::to_string(n) + " too large");
            if (declared_m < 0) throw ParseError(lineno, "edge count must be non-negative");
            header_line = lineno;
            continue;
        }
        if (kind == "e") {
            if (n < 0) throw ParseError(lineno, "edge line before 'p edge' header");
            if (tok.tokens.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            const long long u = parse_ll(tok.tokens[1], lineno, "endpoint");
            const long long v = parse_ll(tok.tokens[2], lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "endpoint out of range [1," + std::to_string(n) + "]");
            if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
            int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
            if (a > b) std::swap(a, b);
            if (!edges.insert({a, b}).second) ++duplicate_count;
            continue;
        }
        throw ParseError(lineno, "unrecognized line type '" + std::string(kind) + "'");
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()), "missing 'p edge' header");

    ParsedGraph out;
    if (duplicate_count > 0)
        out.warnings.push_back(std::to_string(duplicate_count) + " duplicate edge line(s) collapsed");
    if (declared_m != static_cast<long long>(edges.size()))
        out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, file has " +
                               std::to_string(edges.size()) + " distinct");
    std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
    out.graph = n == 0 ? Graph() : Graph::build(static_cast<int>(n), edge_list);
    return out;
}

std::string write_dimacs(const Graph& g) {
    const auto& ids = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (int w : g.neighbors(ids[i]))
            if (ids[i] < w) {
                const int dense_u = static_cast<int>(i) + 1;
                const int dense_w = static_cast<int>(
                    std::lower_bound(ids.begin(), ids.end(), w) - ids.begin()) + 1;
                edges.emplace_back(dense_u, dense_w);
            }
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "p edge " << ids.size() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << "e " << u << " " << v << "\n";
    return os.str();
}

Graph parse_edge_list(const std::string& text) {
    const auto lines = split_lines(text);
    std::vector<std::pair<int, int>> edges;
    long long max_id = -1;
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const int lineno = static_cast<int>(idx) + 1;
        Tokenizer tok(lines[idx]);
        if (tok.tokens.empty()) continue;
        if (tok.tokens[0][0] == '#') continue;
        if (tok.tokens.size() != 2) throw ParseError(lineno, "expected '<u> <v>'");
        const long long u = parse_ll(tok.tokens[0], lineno, "endpoint");
        const long long v = parse_ll(tok.tokens[1], lineno, "endpoint");
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u >= kMaxVertices || v >= kMaxVertices)
            throw ParseError(lineno, "vertex id too large");
        if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
    }
    if (max_id < 0) return Graph();
    return Graph::build(static_cast<int>(max_id) + 1, edges);
}

std::string write_report(const RunReport& r) {
    nlohmann::ordered_json j;
    j["report_version"] = 1;
    j["input_name"] = r.input_name;
    j["n"] = r.n;
    j["m"] = r.m;
    j["tie_policy"] = r.tie_policy;
    if (r.heuristic_clique_order) j["heuristic_clique_order"] = *r.heuristic_clique_order;
    if (r.heuristic_steps) j["heuristic_steps"] = *r.heuristic_steps;
    if (r.exact_chi) j["exact_chi"] = *r.exact_chi;
    j["exact_status"] = r.exact_status;
    if (r.agreement) j["agreement"] = *r.agreement;
    j["trace_included"] = r.trace_included;
    if (r.trace) {
        auto& steps = j["trace"] = nlohmann::ordered_json::array();
        for (const auto& s : *r.trace) {
            nlohmann::ordered_json step;
            step["u"] = s.pair.u;
            step["v"] = s.pair.v;
            step["common_size"] = s.common_size;
            step["tie_count"] = s.tie_count;
            steps.push_back(std::move(step));
        }
    }
    auto& times = j["wall_times_ms"] = nlohmann::ordered_json::object();
    for (const auto& [phase, ms] : r.wall_times_ms) times[phase] = ms;
    return j.dump(2) + "\n";
}

RunReport parse_report(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    RunReport r;
    r.input_name = j.at("input_name").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<long long>();
    r.tie_policy = j.at("tie_policy").get<std::string>();
    if (j.contains("heuristic_clique_order"))
        r.heuristic_clique_order = j["heuristic_clique_order"].get<int>();
    if (j.contains("heuristic_steps")) r.heuristic_steps = j["heuristic_steps"].get<int>();
    if (j.contains("exact_chi")) r.exact_chi = j["exact_chi"].get<int>();
    r.exact_status = j.at("exact_status").get<std::string>();
    if (j.contains("agreement")) r.agreement = j["agreement"].get<bool>();
    r.trace_included = j.at("trace_included").get<bool>();
    if (j.contains("trace")) {
        std::vector<ContractionStep> steps;
        for (const auto& s : j["trace"]) {
            ContractionStep step;
            step.pair.u = s.at("u").get<int>();
            step.pair.v = s.at("v").get<int>();
            step.common_size = s.at("common_size").get<int>();
            step.tie_count = s.at("tie_count").get<long long>();
            steps.push_back(step);
        }
        r.trace = std::move(steps);
    }
    if (j.contains("wall_times_ms"))
        for (const auto& [phase, ms] : j["wall_times_ms"].items())
            r.wall_times_ms.emplace_back(phase, ms.get<long long>());
    return r;
}

void validate_report(const RunReport& r) {
    const bool both = r.heuristic_clique_order.has_value() && r.exact_chi.has_value();
    if (r.agreement.has_value() != both)
        throw GraphError("report: agreement must be present exactly when both results are");
    if (both && *r.agreement != (*r.heuristic_clique_order == *r.exact_chi))
        throw GraphError("report: agreement flag contradicts the recorded results");
    if (r.trace_included != r.trace.has_value())
        throw GraphError("report: trace_included contradicts trace presence");
    if (r.trace && r.heuristic_steps &&
        static_cast<int>(r.trace->size()) != *r.heuristic_steps)
        throw GraphError("report: trace length contradicts heuristic_steps");
    if (r.exact_status != "exact" && r.exact_status != "exhausted" && r.exact_status != "skipped")
        throw GraphError("report: bad exact_status '" + r.exact_status + "'");
    if (r.exact_status == "exact" && !r.exact_chi)
        throw GraphError("report: exact status without exact_chi");
}

}  // namespace chroma
