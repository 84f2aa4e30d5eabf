#include "graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace treebound {

Graph::Graph(int vertices) : n(vertices), adj(vertices >= 0 ? vertices : 0) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    auto insert = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert(adj[u], v);
    insert(adj[v], u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& list : adj) deg_sum += list.size();
    return static_cast<int>(deg_sum / 2);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph make_complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

void check_graph(const Graph& g) {
    if (g.n < 0 || static_cast<int>(g.adj.size()) != g.n)
        throw std::logic_error("adjacency size mismatch");
    for (int u = 0; u < g.n; ++u) {
        int prev = -1;
        for (int v : g.adj[u]) {
            if (v < 0 || v >= g.n) throw std::logic_error("neighbor out of range");
            if (v == u) throw std::logic_error("self-loop present");
            if (v <= prev) throw std::logic_error("neighbor list not strictly sorted");
            prev = v;
            if (!std::binary_search(g.adj[v].begin(), g.adj[v].end(), u))
                throw std::logic_error("adjacency not symmetric");
        }
    }
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    // Order-preserving compaction: old u maps to u - (u > v).
    Graph out(g.n - 1);
    for (int u = 0; u < g.n; ++u) {
        if (u == v) continue;
        int cu = u - (u > v);
        for (int w : g.adj[u]) {
            if (w == v || w < u) continue;
            out.add_edge(cu, w - (w > v));
        }
    }
    return out;
}

ContractionResult identify(const Graph& g, const std::vector<int>& s) {
    std::set<int> cls(s.begin(), s.end());
    if (cls.size() < 2) throw std::invalid_argument("identify needs at least 2 vertices");
    for (int v : cls)
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");

    int anchor = *cls.begin();
    ContractionResult cr;
    cr.vmap.assign(g.n, -1);
    // Contracted ids follow the original order; the class sits at anchor's slot.
    int next = 0;
    for (int u = 0; u < g.n; ++u) {
        if (u == anchor)
            cr.merged = next++;
        else if (!cls.count(u))
            cr.vmap[u] = next++;
    }
    for (int v : cls) cr.vmap[v] = cr.merged;

    cr.graph = Graph(g.n - static_cast<int>(cls.size()) + 1);
    for (int u = 0; u < g.n; ++u) {
        for (int w : g.adj[u]) {
            if (w < u) continue;
            int cu = cr.vmap[u], cw = cr.vmap[w];
            if (cu == cw) continue;  // loop created by the identification
            Edge ce = make_edge(cu, cw);
            Edge orig = make_edge(u, w);
            auto it = cr.lift.find(ce);
            if (it == cr.lift.end()) {
                cr.graph.add_edge(ce.first, ce.second);
                cr.lift.emplace(ce, orig);
            } else if (cu == cr.merged || cw == cr.merged) {
                // Parallel edges at the merged vertex: keep the one whose
                // S-side endpoint has the smallest index.
                int s_side = cls.count(u) ? u : w;
                Edge& kept = it->second;
                int kept_s_side = cls.count(kept.first) ? kept.first : kept.second;
                if (s_side < kept_s_side) kept = orig;
            }
        }
    }
    // lift is injective by construction; assert it anyway.
    std::set<Edge> images;
    for (const auto& [ce, oe] : cr.lift) images.insert(oe);
    if (images.size() != cr.lift.size())
        throw std::logic_error("contraction lift not injective");
    return cr;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.n;
}

namespace {

// Lowpoint DFS. Depth is bounded by n (<= 62 for graph6 inputs).
struct CutDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    int timer = 0;

    explicit CutDfs(const Graph& g_) : g(g_), disc(g_.n, -1), low(g_.n, 0), is_cut(g_.n, 0) {}

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.adj[u]) {
            if (disc[v] == -1) {
                ++children;
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) is_cut[u] = 1;
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children >= 2) is_cut[u] = 1;
    }
};

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_vertices requires a connected graph");
    if (g.n <= 2) return {};
    CutDfs dfs(g);
    dfs.run(0, -1);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (dfs.is_cut[v]) out.push_back(v);
    return out;
}

std::vector<InducedPiece> split_at_cut_vertex(const Graph& g, int v) {
    auto cuts = cut_vertices(g);
    if (!std::binary_search(cuts.begin(), cuts.end(), v))
        throw std::invalid_argument("vertex is not a cut vertex");

    // Components of g - v, in order of their smallest vertex.
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int s = 0; s < g.n; ++s) {
        if (s == v || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (w == v || comp[w] != -1) continue;
                comp[w] = ncomp;
                stack.push_back(w);
            }
        }
        ++ncomp;
    }

    std::vector<InducedPiece> pieces(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int>& verts = pieces[c].orig;
        for (int u = 0; u < g.n; ++u)
            if (u == v || comp[u] == c) verts.push_back(u);
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        Graph& pg = pieces[c].graph;
        pg = Graph(static_cast<int>(verts.size()));
        for (int u : verts)
            for (int w : g.adj[u])
                if (w > u && local[w] != -1) pg.add_edge(local[u], local[w]);
    }
    return pieces;
}

namespace {

bool extend_clique(const Graph& g, int k, std::vector<int>& current,
                   const std::vector<int>& candidates) {
    if (static_cast<int>(current.size()) == k) return true;
    int need = k - static_cast<int>(current.size());
    if (static_cast<int>(candidates.size()) < need) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        int c = candidates[i];
        if (static_cast<int>(candidates.size() - i) < need) return false;
        std::vector<int> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(c, candidates[j])) next.push_back(candidates[j]);
        current.push_back(c);
        if (extend_clique(g, k, current, next)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    if (k > g.n) return std::nullopt;
    std::vector<int> all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    std::vector<int> current;
    if (extend_clique(g, k, current, all)) return current;
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_nonadjacent_pair(const Graph& g,
                                                         const std::vector<int>& s) {
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return std::pair{verts[i], verts[j]};
    return std::nullopt;
}

std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>>
find_two_disjoint_nonadjacent_pairs(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (g.has_edge(verts[i], verts[j])) continue;
            std::vector<int> rest;
            for (std::size_t t = 0; t < verts.size(); ++t)
                if (t != i && t != j) rest.push_back(verts[t]);
            if (auto second = find_nonadjacent_pair(g, rest))
                return std::pair{std::pair{verts[i], verts[j]}, *second};
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> find_nonadjacent_triple(const Graph& g,
                                                          const std::vector<int>& s) {
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (g.has_edge(verts[i], verts[j])) continue;
            for (std::size_t t = j + 1; t < verts.size(); ++t)
                if (!g.has_edge(verts[i], verts[t]) && !g.has_edge(verts[j], verts[t]))
                    return std::array{verts[i], verts[j], verts[t]};
        }
    return std::nullopt;
}

}  // namespace treebound
