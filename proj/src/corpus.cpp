#include "chroma/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "chroma/rng.hpp"

namespace chroma {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw SpecError(msg);
}

Graph mycielski_once(const Graph& g) {
    // originals 0..n-1, shadows n..2n-1, apex 2n
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int v : g.vertices())
        for (int w : g.neighbors(v)) {
            if (v < w) edges.emplace_back(v, w);
            edges.emplace_back(v, n + w);
        }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph::build(2 * n + 1, edges);
}

long long parse_int(std::string_view s, const std::string& what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
            "bad " + what + " in family spec: '" + std::string(s) + "'");
    return value;
}

double parse_double(std::string_view s, const std::string& what) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
            "bad " + what + " in family spec: '" + std::string(s) + "'");
    return value;
}

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(),
            "bad " + what + " in family spec: '" + std::string(s) + "'");
    return value;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

}  // namespace

GraphFamily GraphFamily::complete(int n) {
    require(n >= 1, "complete: size must be >= 1");
    GraphFamily f;
    f.kind = Kind::Complete;
    f.a = n;
    return f;
}

GraphFamily GraphFamily::cycle(int n) {
    require(n >= 1, "cycle: size must be >= 1");
    GraphFamily f;
    f.kind = Kind::Cycle;
    f.a = n;
    return f;
}

GraphFamily GraphFamily::path(int n) {
    require(n >= 1, "path: size must be >= 1");
    GraphFamily f;
    f.kind = Kind::Path;
    f.a = n;
    return f;
}

GraphFamily GraphFamily::complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "kbipartite: sides must be >= 1");
    GraphFamily f;
    f.kind = Kind::CompleteBipartite;
    f.a = a;
    f.b = b;
    return f;
}

GraphFamily GraphFamily::star(int n) {
    require(n >= 1, "star: size must be >= 1");
    GraphFamily f;
    f.kind = Kind::Star;
    f.a = n;
    return f;
}

GraphFamily GraphFamily::petersen() {
    GraphFamily f;
    f.kind = Kind::Petersen;
    f.a = 10;
    return f;
}

GraphFamily GraphFamily::mycielski(GraphFamily base, int iterations) {
    require(iterations >= 0, "mycielski: iterations must be >= 0");
    GraphFamily f;
    f.kind = Kind::Mycielski;
    f.iterations = iterations;
    f.base = std::make_shared<const GraphFamily>(std::move(base));
    return f;
}

GraphFamily GraphFamily::random(int n, double p, std::uint64_t seed) {
    require(n >= 1, "random: size must be >= 1");
    require(p >= 0.0 && p <= 1.0, "random: edge probability must be in [0,1]");
    GraphFamily f;
    f.kind = Kind::Random;
    f.a = n;
    f.p = p;
    f.seed = seed;
    return f;
}

Graph generate(const GraphFamily& f) {
    using Kind = GraphFamily::Kind;
    std::vector<std::pair<int, int>> edges;
    switch (f.kind) {
        case Kind::Complete:
            for (int u = 0; u < f.a; ++u)
                for (int v = u + 1; v < f.a; ++v) edges.emplace_back(u, v);
            return Graph::build(f.a, edges);
        case Kind::Cycle:
            // degenerate sizes collapse: cycle:1 is a point, cycle:2 an edge
            if (f.a == 1) return Graph::build(1, {});
            if (f.a == 2) return Graph::build(2, {{0, 1}});
            for (int i = 0; i < f.a; ++i) edges.emplace_back(i, (i + 1) % f.a);
            return Graph::build(f.a, edges);
        case Kind::Path:
            for (int i = 0; i + 1 < f.a; ++i) edges.emplace_back(i, i + 1);
            return Graph::build(f.a, edges);
        case Kind::CompleteBipartite:
            for (int u = 0; u < f.a; ++u)
                for (int v = 0; v < f.b; ++v) edges.emplace_back(u, f.a + v);
            return Graph::build(f.a + f.b, edges);
        case Kind::Star:
            for (int v = 1; v < f.a; ++v) edges.emplace_back(0, v);
            return Graph::build(f.a, edges);
        case Kind::Petersen:
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);       // outer cycle
                edges.emplace_back(i, i + 5);             // spoke
                edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
            }
            return Graph::build(10, edges);
        case Kind::Mycielski: {
            Graph g = generate(*f.base);
            for (int i = 0; i < f.iterations; ++i) g = mycielski_once(g);
            return g;
        }
        case Kind::Random: {
            SplitMix64 rng(f.seed);
            for (int u = 0; u < f.a; ++u)
                for (int v = u + 1; v < f.a; ++v)
                    if (rng.next_double() < f.p) edges.emplace_back(u, v);
            return Graph::build(f.a, edges);
        }
    }
    throw SpecError("unknown family kind");
}

std::optional<int> known_chromatic(const GraphFamily& f) {
    using Kind = GraphFamily::Kind;
    switch (f.kind) {
        case Kind::Complete: return f.a;
        case Kind::Cycle:
            if (f.a == 1) return 1;
            if (f.a % 2 == 0) return 2;
            return 3;
        case Kind::Path: return f.a == 1 ? 1 : 2;
        case Kind::CompleteBipartite: return 2;
        case Kind::Star: return f.a == 1 ? 1 : 2;
        case Kind::Petersen: return 3;
        case Kind::Mycielski: {
            const auto base = known_chromatic(*f.base);
            if (!base) return std::nullopt;
            return *base + f.iterations;
        }
        case Kind::Random: return std::nullopt;
    }
    return std::nullopt;
}

GraphFamily parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (head == "petersen") {
        require(colon == std::string::npos, "petersen takes no parameters");
        return GraphFamily::petersen();
    }
    require(colon != std::string::npos && !rest.empty(), "family spec needs parameters: " + text);

    if (head == "complete") return GraphFamily::complete(static_cast<int>(parse_int(rest, "size")));
    if (head == "cycle") return GraphFamily::cycle(static_cast<int>(parse_int(rest, "size")));
    if (head == "path") return GraphFamily::path(static_cast<int>(parse_int(rest, "size")));
    if (head == "star") return GraphFamily::star(static_cast<int>(parse_int(rest, "size")));
    if (head == "kbipartite") {
        const auto comma = rest.find(',');
        require(comma != std::string::npos, "kbipartite needs a,b");
        return GraphFamily::complete_bipartite(
            static_cast<int>(parse_int(rest.substr(0, comma), "side a")),
            static_cast<int>(parse_int(rest.substr(comma + 1), "side b")));
    }
    if (head == "random") {
        const auto c1 = rest.find(',');
        require(c1 != std::string::npos, "random needs n,p,seed");
        const auto c2 = rest.find(',', c1 + 1);
        require(c2 != std::string::npos, "random needs n,p,seed");
        return GraphFamily::random(static_cast<int>(parse_int(rest.substr(0, c1), "size")),
                                   parse_double(rest.substr(c1 + 1, c2 - c1 - 1), "probability"),
                                   parse_u64(rest.substr(c2 + 1), "seed"));
    }
    if (head == "mycielski") {
        const auto last = rest.rfind(':');
        require(last != std::string::npos, "mycielski needs <base-spec>:iters");
        return GraphFamily::mycielski(parse_family_spec(rest.substr(0, last)),
                                      static_cast<int>(parse_int(rest.substr(last + 1), "iterations")));
    }
    throw SpecError("unknown family '" + head + "'");
}

std::string to_spec_string(const GraphFamily& f) {
    using Kind = GraphFamily::Kind;
    switch (f.kind) {
        case Kind::Complete: return "complete:" + std::to_string(f.a);
        case Kind::Cycle: return "cycle:" + std::to_string(f.a);
        case Kind::Path: return "path:" + std::to_string(f.a);
        case Kind::CompleteBipartite:
            return "kbipartite:" + std::to_string(f.a) + "," + std::to_string(f.b);
        case Kind::Star: return "star:" + std::to_string(f.a);
        case Kind::Petersen: return "petersen";
        case Kind::Mycielski:
            return "mycielski:" + to_spec_string(*f.base) + ":" + std::to_string(f.iterations);
        case Kind::Random:
            return "random:" + std::to_string(f.a) + "," + format_double(f.p) + "," +
                   std::to_string(f.seed);
    }
    return "";
}

bool looks_like_family_spec(const std::string& text) {
    static const char* heads[] = {"complete", "cycle",    "path",      "kbipartite",
                                  "star",     "petersen", "mycielski", "random"};
    const std::string head = text.substr(0, text.find(':'));
    return std::any_of(std::begin(heads), std::end(heads),
                       [&](const char* h) { return head == h; });
}

}  // namespace chroma
