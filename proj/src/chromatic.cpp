#include "chromatic.hpp"

#include <algorithm>

namespace treebound {

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.n) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v && colors[u] == colors[v]) return false;
    return true;
}

namespace {

// Vertices in degree-descending order (index ascending on ties).
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Greedy clique used as a lower bound and for seeding the search.
std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> best;
    auto order = degree_order(g);
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start) continue;
            bool ok = true;
            for (int c : clique)
                if (!g.has_edge(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;                       // -1 = uncolored
    std::vector<std::vector<int>> neighbor_uses;  // per vertex, per color use count
    std::vector<int> saturation;
    int colored = 0;
    int max_used = -1;

    ColorSearch(const Graph& g_, int k_)
        : g(g_), k(k_), color(g_.n, -1), neighbor_uses(g_.n, std::vector<int>(k_, 0)),
          saturation(g_.n, 0) {}

    void assign(int v, int c) {
        color[v] = c;
        ++colored;
        for (int w : g.adj[v])
            if (color[w] == -1 && ++neighbor_uses[w][c] == 1) ++saturation[w];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        --colored;
        for (int w : g.adj[v])
            if (color[w] == -1 && --neighbor_uses[w][c] == 0) --saturation[w];
    }

    // DSATUR rule: max saturation, then max degree, then smallest index.
    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        return best;
    }

    bool solve() {
        if (colored == g.n) return true;
        int v = pick_vertex();
        // Symmetry breaking: at most one color beyond those already used.
        int limit = std::min(k, max_used + 2);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_uses[v][c] > 0) continue;
            int prev_max = max_used;
            max_used = std::max(max_used, c);
            assign(v, c);
            if (solve()) return true;
            unassign(v, c);
            max_used = prev_max;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("color count must be >= 0");
    if (g.n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    if (k >= g.n) {
        Coloring c;
        c.colors.resize(g.n);
        for (int v = 0; v < g.n; ++v) c.colors[v] = v;
        return c;
    }
    auto clique = greedy_clique(g);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;

    ColorSearch search(g, k);
    // Pre-color the clique: any proper coloring can be renamed to match.
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
        search.assign(clique[i], static_cast<int>(i));
        search.max_used = static_cast<int>(i);
    }
    if (!search.solve()) return std::nullopt;
    return Coloring{std::move(search.color)};
}

namespace {

// Greedy DSATUR coloring (no backtracking); returns the number of colors used.
int greedy_color_count(const Graph& g) {
    ColorSearch search(g, g.n);
    for (int step = 0; step < g.n; ++step) {
        int v = search.pick_vertex();
        int c = 0;
        while (search.neighbor_uses[v][c] > 0) ++c;
        search.max_used = std::max(search.max_used, c);
        search.assign(v, c);
    }
    return search.max_used + 1;
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    int lower = static_cast<int>(greedy_clique(g).size());
    int upper = greedy_color_count(g);
    for (int k = std::max(lower, 1); k < upper; ++k)
        if (is_k_colorable(g, k)) return k;
    return upper;  // the greedy coloring witnesses colorability at upper
}

}  // namespace treebound
