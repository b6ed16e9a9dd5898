#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polymatch {

// Structured vertex name. The gon families use a_i, b_{i,j}, c_{i,j};
// everything else (line-graph vertices, generic inputs) is opaque with a
// numeric id. Labels survive induced subgraphs and deletions so reduction
// traces stay readable.
struct VertexLabel {
    enum class Kind : uint8_t { A, B, C, Opaque };

    Kind kind = Kind::Opaque;
    int i = 0; // gon index for A/B/C, the id for Opaque
    int j = 0; // strand position for B/C, unused otherwise

    static VertexLabel a(int i) { return {Kind::A, i, 0}; }
    static VertexLabel b(int i, int j) { return {Kind::B, i, j}; }
    static VertexLabel c(int i, int j) { return {Kind::C, i, j}; }
    static VertexLabel opaque(int id) { return {Kind::Opaque, id, 0}; }

    std::string to_string() const; // "a_0", "b_1,2", "v17"

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

// Finite simple undirected graph with labeled vertices.
//
// Vertex order is the construction order and is part of the value: all
// derived graphs (induced subgraphs, deletions, components) inherit it, so
// every serialization is reproducible byte for byte.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<VertexLabel> labels);
    explicit Graph(int n); // n opaque vertices labeled 0..n-1

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    void add_edge(int u, int v); // rejects loops; duplicate edges are ignored
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const; // sorted ascending
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const VertexLabel& label(int v) const;
    int index_of_label(const VertexLabel& l) const; // -1 if absent

    std::vector<std::pair<int, int>> edges() const; // u < v, sorted lexicographically

    // Stable digest over vertex count, labels and the sorted edge list.
    uint64_t digest() const;

    friend bool operator==(const Graph&, const Graph&); // same labels, same edges

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;

    void check_vertex(int v) const;
};

// -- constructions ----------------------------------------------------------

Graph path_graph(int k);  // k >= 0 vertices; k = 0 is the empty graph
Graph cycle_graph(int k); // k >= 3

// t (2n)-gons glued in a row along shared vertical edges; t = 0 is a single
// edge. Vertices are opaque, numbered: junctions top_0..top_t, bottom
// bot_0..bot_t, then per gon the top strand interiors followed by the bottom
// strand interiors. Vertical edge i joins top_i and bot_i.
Graph polygon_line_tiling(int n, int t);

// Line graph: one opaque vertex per edge (id = position in edges()), adjacent
// iff the underlying edges share an endpoint.
Graph line_graph(const Graph& g);

// The line graph of polygon_line_tiling(n, t), built directly on labeled
// vertices a_i, b_{i,j}, c_{i,j}. t = 0 is the single vertex a_0.
Graph g_graph(int n, int t);

// g_graph(n, t) extended by b_{t+1,1} and c_{t+1,1}, i.e. the induced
// subgraph of g_graph(n, t+1) on those vertices.
Graph h_graph(int n, int t);

// -- operations --------------------------------------------------------------

Graph induced_subgraph(const Graph& g, const std::vector<int>& s);
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);
Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);

// Maximal connected induced subgraphs, ordered by smallest contained vertex.
std::vector<Graph> connected_components(const Graph& g);
std::vector<std::vector<int>> component_vertex_sets(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b); // labels of b shifted if opaque

bool is_path_graph(const Graph& g);  // connected, includes the 1-vertex path
bool is_cycle_graph(const Graph& g); // connected, >= 3 vertices

// Checks that map_1to2 (a bijection on vertex indices) carries edges of g1
// exactly onto edges of g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map_1to2);

} // namespace polymatch
