#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace treebound {

// Proper vertex coloring; colors[v] in [0, k).
struct Coloring {
    std::vector<int> colors;
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

// Exact decision: a proper coloring with at most k colors, or nullopt.
// Backtracking with a greedy-clique lower bound and saturation-order
// branching; fully deterministic.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

// Smallest k such that is_k_colorable(g, k) succeeds. Empty graph: 0.
int chromatic_number(const Graph& g);

}  // namespace treebound
