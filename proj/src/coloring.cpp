#include "chroma/coloring.hpp"

namespace chroma {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    for (int v : g.vertices()) {
        auto it = c.assignment.find(v);
        if (it == c.assignment.end()) return false;
        if (it->second < 0 || it->second >= c.color_count) return false;
    }
    for (int v : g.vertices())
        for (int w : g.neighbors(v))
            if (v < w && c.assignment.at(v) == c.assignment.at(w)) return false;
    return true;
}

std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> classes(c.color_count);
    for (auto [v, col] : c.assignment) classes[col].push_back(v);
    return classes;
}

}  // namespace chroma
