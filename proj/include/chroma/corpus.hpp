#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "chroma/graph.hpp"

namespace chroma {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic generator descriptions. Random graphs draw edges from a
// SplitMix64 stream over vertex pairs in lexicographic order, so a
// (n, p, seed) triple yields the same edge set on every platform.
struct GraphFamily {
    enum class Kind { Complete, Cycle, Path, CompleteBipartite, Star, Petersen, Mycielski, Random };

    Kind kind = Kind::Complete;
    int a = 1;                // primary size
    int b = 1;                // second side for CompleteBipartite
    double p = 0.0;           // edge probability for Random
    std::uint64_t seed = 0;   // Random only
    int iterations = 0;       // Mycielski only
    std::shared_ptr<const GraphFamily> base;  // Mycielski only

    static GraphFamily complete(int n);
    static GraphFamily cycle(int n);
    static GraphFamily path(int n);
    static GraphFamily complete_bipartite(int a, int b);
    static GraphFamily star(int n);
    static GraphFamily petersen();
    static GraphFamily mycielski(GraphFamily base, int iterations);
    static GraphFamily random(int n, double p, std::uint64_t seed);
};

Graph generate(const GraphFamily& f);

// Analytically known chromatic number, where the family admits one.
std::optional<int> known_chromatic(const GraphFamily& f);

// Grammar: complete:n | cycle:n | path:n | kbipartite:a,b | star:n |
//          petersen | mycielski:<spec>:iters | random:n,p,seed
GraphFamily parse_family_spec(const std::string& text);
std::string to_spec_string(const GraphFamily& f);

// Head-token test, used to decide whether a CLI input names a family or a file.
bool looks_like_family_spec(const std::string& text);

}  // namespace chroma
