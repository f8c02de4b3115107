#pragma once

#include <map>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Vertex id -> color index in [0, color_count).
struct Coloring {
    std::map<int, int> assignment;
    int color_count = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Total on V(g), colors in range, no edge monochromatic.
bool is_proper_coloring(const Graph& g, const Coloring& c);

// Classes indexed by color; empty classes kept so indices line up.
std::vector<std::vector<int>> color_classes(const Coloring& c);

}  // namespace chroma
