#include "polymatch/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace polymatch {

std::string VertexLabel::to_string() const {
    switch (kind) {
        case Kind::A: return "a_" + std::to_string(i);
        case Kind::B: return "b_" + std::to_string(i) + "," + std::to_string(j);
        case Kind::C: return "c_" + std::to_string(i) + "," + std::to_string(j);
        case Kind::Opaque: return "v" + std::to_string(i);
    }
    return "?";
}

Graph::Graph(std::vector<VertexLabel> labels)
    : labels_(std::move(labels)), adj_(labels_.size()) {}

Graph::Graph(int n) : adj_(n >= 0 ? n : 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back(VertexLabel::opaque(v));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("Graph: vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const VertexLabel& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

int Graph::index_of_label(const VertexLabel& l) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[v] == l) return v;
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out; // already lexicographic by construction
}

uint64_t Graph::digest() const {
    uint64_t h = 1469598103934665603ull; // FNV-1a
    auto mix = [&h](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(0x56u);
    mix(static_cast<uint64_t>(vertex_count()));
    for (const VertexLabel& l : labels_) {
        mix(static_cast<uint64_t>(l.kind));
        mix(static_cast<uint64_t>(static_cast<int64_t>(l.i)));
        mix(static_cast<uint64_t>(static_cast<int64_t>(l.j)));
    }
    mix(0x45u);
    for (auto [u, v] : edges()) {
        mix(static_cast<uint64_t>(u));
        mix(static_cast<uint64_t>(v));
    }
    return h;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

Graph path_graph(int k) {
    if (k < 0) throw std::invalid_argument("path_graph: k must be >= 0");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: k must be >= 3");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    g.add_edge(k - 1, 0);
    return g;
}

Graph polygon_line_tiling(int n, int t) {
    if (n < 2) throw std::invalid_argument("polygon_line_tiling: n must be >= 2");
    if (t < 0) throw std::invalid_argument("polygon_line_tiling: t must be >= 0");
    if (t == 0) {
        Graph g(2);
        g.add_edge(0, 1);
        return g;
    }
    // junctions: top_i = i, bot_i = (t+1)+i; strand interiors follow per gon
    int base = 2 * (t + 1);
    int per_gon = 2 * (n - 2);
    Graph g(base + t * per_gon);
    auto top = [&](int i) { return i; };
    auto bot = [&](int i, int t_) { return t_ + 1 + i; };
    for (int i = 0; i <= t; ++i) g.add_edge(top(i), bot(i, t)); // vertical edges
    for (int gon = 1; gon <= t; ++gon) {
        int tstart = base + (gon - 1) * per_gon;
        int bstart = tstart + (n - 2);
        // top strand: top_{gon-1} -> interiors -> top_gon
        int prev = top(gon - 1);
        for (int j = 0; j < n - 2; ++j) {
            g.add_edge(prev, tstart + j);
            prev = tstart + j;
        }
        g.add_edge(prev, top(gon));
        // bottom strand
        prev = bot(gon - 1, t);
        for (int j = 0; j < n - 2; ++j) {
            g.add_edge(prev, bstart + j);
            prev = bstart + j;
        }
        g.add_edge(prev, bot(gon, t));
    }
    return g;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    std::vector<VertexLabel> labels;
    labels.reserve(m);
    for (int e = 0; e < m; ++e) labels.push_back(VertexLabel::opaque(e));
    Graph lg(std::move(labels));
    // bucket edges by endpoint; edges sharing an endpoint become adjacent
    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int e = 0; e < m; ++e) {
        incident[es[e].first].push_back(e);
        incident[es[e].second].push_back(e);
    }
    for (const auto& bucket : incident)
        for (size_t x = 0; x < bucket.size(); ++x)
            for (size_t y = x + 1; y < bucket.size(); ++y) lg.add_edge(bucket[x], bucket[y]);
    return lg;
}

Graph g_graph(int n, int t) {
    if (n < 2) throw std::invalid_argument("g_graph: n must be >= 2");
    if (t < 0) throw std::invalid_argument("g_graph: t must be >= 0");
    std::vector<VertexLabel> labels;
    labels.push_back(VertexLabel::a(0));
    for (int i = 1; i <= t; ++i) {
        labels.push_back(VertexLabel::a(i));
        for (int j = 1; j < n; ++j) labels.push_back(VertexLabel::b(i, j));
        for (int j = 1; j < n; ++j) labels.push_back(VertexLabel::c(i, j));
    }
    Graph g(std::move(labels));
    auto at = [&](const VertexLabel& l) { return g.index_of_label(l); };
    for (int i = 0; i < t; ++i) {
        // a_i meets the near strand ends of gon i+1, a_{i+1} the far ends
        g.add_edge(at(VertexLabel::a(i)), at(VertexLabel::b(i + 1, 1)));
        g.add_edge(at(VertexLabel::a(i)), at(VertexLabel::c(i + 1, 1)));
        g.add_edge(at(VertexLabel::a(i + 1)), at(VertexLabel::b(i + 1, n - 1)));
        g.add_edge(at(VertexLabel::a(i + 1)), at(VertexLabel::c(i + 1, n - 1)));
    }
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= n - 2; ++j) {
            g.add_edge(at(VertexLabel::b(i, j)), at(VertexLabel::b(i, j + 1)));
            g.add_edge(at(VertexLabel::c(i, j)), at(VertexLabel::c(i, j + 1)));
        }
    for (int i = 1; i < t; ++i) {
        // consecutive gons meet around the shared vertical edge
        g.add_edge(at(VertexLabel::b(i, n - 1)), at(VertexLabel::b(i + 1, 1)));
        g.add_edge(at(VertexLabel::c(i, n - 1)), at(VertexLabel::c(i + 1, 1)));
    }
    return g;
}

Graph h_graph(int n, int t) {
    if (n < 2) throw std::invalid_argument("h_graph: n must be >= 2");
    if (t < 0) throw std::invalid_argument("h_graph: t must be >= 0");
    Graph big = g_graph(n, t + 1);
    std::vector<int> keep;
    for (int v = 0; v < big.vertex_count(); ++v) {
        const VertexLabel& l = big.label(v);
        bool in_gt = (l.kind == VertexLabel::Kind::A && l.i <= t) ||
                     ((l.kind == VertexLabel::Kind::B || l.kind == VertexLabel::Kind::C) && l.i <= t);
        bool extra = (l.kind == VertexLabel::Kind::B || l.kind == VertexLabel::Kind::C) &&
                     l.i == t + 1 && l.j == 1;
        if (in_gt || extra) keep.push_back(v);
    }
    return induced_subgraph(big, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<VertexLabel> labels;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v : verts) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex index out of range");
        new_id[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
        seen[v] = 1;
    }
    Graph out(std::move(labels));
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (w > v && seen[w]) out.add_edge(new_id[v], new_id[w]);
    return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("delete_vertices: vertex index out of range");
        drop[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}); }

Graph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete_closed_neighborhood: vertex index out of range");
    std::vector<int> dead = g.neighbors(v);
    dead.push_back(v);
    return delete_vertices(g, dead);
}

std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    // ordered by smallest contained vertex: DFS seeds run in index order,
    // so this already holds
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& vs : component_vertex_sets(g)) out.push_back(induced_subgraph(g, vs));
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<VertexLabel> labels;
    labels.reserve(a.vertex_count() + b.vertex_count());
    for (int v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (int v = 0; v < b.vertex_count(); ++v) {
        VertexLabel l = b.label(v);
        if (l.kind == VertexLabel::Kind::Opaque) l.i += a.vertex_count();
        labels.push_back(l);
    }
    Graph out(std::move(labels));
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return out;
}

bool is_path_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (g.edge_count() != n - 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2) return false;
    return component_vertex_sets(g).size() == 1;
}

bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return component_vertex_sets(g).size() == 1;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map_1to2) {
    int n = g1.vertex_count();
    if (n != g2.vertex_count() || static_cast<int>(map_1to2.size()) != n) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    std::vector<char> hit(n, 0);
    for (int v = 0; v < n; ++v) {
        int w = map_1to2[v];
        if (w < 0 || w >= n || hit[w]) return false;
        hit[w] = 1;
    }
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(map_1to2[u], map_1to2[v])) return false;
    return true;
}

} // namespace polymatch
