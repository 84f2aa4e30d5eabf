#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treebound {

// Undirected edge, canonically stored as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("edge endpoints must be distinct");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted and
// duplicate-free, so they act as sets with deterministic iteration order.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices);

    // Ignores duplicate insertions; rejects self-loops and out-of-range ids.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
    int edge_count() const;
    std::vector<Edge> edges() const;  // sorted lexicographically

    bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, const std::vector<Edge>& edges);
Graph make_complete(int k);

// Throws std::logic_error if the Graph invariants are broken (loops,
// asymmetry, out-of-range neighbors, unsorted or duplicated entries).
void check_graph(const Graph& g);

// Result of identifying a vertex set S into one vertex. The contracted graph
// is simple; vmap sends every original vertex to its contracted id (the
// merged class lands on the slot of min(S), other ids compact in order).
// lift maps every contracted edge to an original edge whose endpoint images
// are the contracted endpoints; for edges at the merged vertex the original
// with the smallest S-side endpoint is chosen, so lift is injective.
struct ContractionResult {
    Graph graph;
    std::vector<int> vmap;
    std::map<Edge, Edge> lift;
    int merged = -1;  // contracted id of the identified class
};

// Piece of a cut-vertex split: induced subgraph plus its vertex ids in the
// parent graph (orig[local] = parent id).
struct InducedPiece {
    Graph graph;
    std::vector<int> orig;
};

Graph delete_vertex(const Graph& g, int v);
ContractionResult identify(const Graph& g, const std::vector<int>& s);
bool is_connected(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);
std::vector<InducedPiece> split_at_cut_vertex(const Graph& g, int v);

std::optional<std::vector<int>> find_clique(const Graph& g, int k);
std::optional<std::pair<int, int>> find_nonadjacent_pair(const Graph& g,
                                                         const std::vector<int>& s);
std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>>
find_two_disjoint_nonadjacent_pairs(const Graph& g, const std::vector<int>& s);
std::optional<std::array<int, 3>> find_nonadjacent_triple(const Graph& g,
                                                          const std::vector<int>& s);

}  // namespace treebound
