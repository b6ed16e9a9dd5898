#include <doctest.h>

#include <map>
#include <stdexcept>

#include "polymatch/graph.hpp"

using namespace polymatch;

TEST_CASE("path and cycle graphs") {
    Graph p1 = path_graph(1);
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);
    Graph p4 = path_graph(4);
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    Graph p0 = path_graph(0);
    CHECK(p0.vertex_count() == 0);

    Graph c3 = cycle_graph(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(-1), std::invalid_argument);
}

TEST_CASE("polygon line tiling counts") {
    Graph t0 = polygon_line_tiling(3, 0);
    CHECK(t0.vertex_count() == 2);
    CHECK(t0.edge_count() == 1);

    // one hexagon is a 6-cycle
    Graph hex = polygon_line_tiling(3, 1);
    CHECK(hex.vertex_count() == 6);
    CHECK(hex.edge_count() == 6);
    CHECK(is_cycle_graph(hex));

    // vertex count t(2n-2)+2, edge count t(2n-1)+1
    Graph t5n3 = polygon_line_tiling(3, 5);
    CHECK(t5n3.vertex_count() == 22);
    CHECK(t5n3.edge_count() == 26);
    Graph t4n4 = polygon_line_tiling(4, 4);
    CHECK(t4n4.vertex_count() == 26);
    CHECK(t4n4.edge_count() == 29);
    for (int n = 2; n <= 5; ++n)
        for (int t = 1; t <= 5; ++t) {
            Graph g = polygon_line_tiling(n, t);
            CHECK(g.vertex_count() == t * (2 * n - 2) + 2);
            CHECK(g.edge_count() == t * (2 * n - 1) + 1);
        }
    CHECK_THROWS_AS(polygon_line_tiling(1, 3), std::invalid_argument);
}

TEST_CASE("line graph basics") {
    // line graph of a cycle is the same cycle; of a path, one vertex shorter
    for (int k = 3; k <= 12; ++k) {
        Graph lc = line_graph(cycle_graph(k));
        CHECK(is_cycle_graph(lc));
        CHECK(lc.vertex_count() == k);
    }
    for (int k = 2; k <= 12; ++k) {
        Graph lp = line_graph(path_graph(k));
        CHECK(is_path_graph(lp));
        CHECK(lp.vertex_count() == k - 1);
    }
    CHECK(line_graph(Graph(0)).vertex_count() == 0);
    CHECK(line_graph(Graph(3)).vertex_count() == 0); // no edges, no vertices
}

TEST_CASE("g_graph vertex counts and small cases") {
    CHECK(g_graph(3, 0).vertex_count() == 1);
    CHECK(g_graph(3, 0).edge_count() == 0);
    CHECK(g_graph(3, 0).label(0) == VertexLabel::a(0));

    // 4-cycle a_0 b_{1,1} a_1 c_{1,1}
    Graph g21 = g_graph(2, 1);
    CHECK(g21.vertex_count() == 4);
    CHECK(is_cycle_graph(g21));

    CHECK(is_cycle_graph(g_graph(3, 1))); // C_6
    CHECK(is_cycle_graph(g_graph(4, 1))); // C_8
    CHECK(g_graph(3, 4).vertex_count() == 21);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t <= 5; ++t)
            CHECK(g_graph(n, t).vertex_count() == (t + 1) + 2 * t * (n - 1));
    CHECK_THROWS_AS(g_graph(1, 1), std::invalid_argument);
}

namespace {

// Explicit edge-of-tiling -> G vertex label correspondence, derived from the
// tiling's documented vertex numbering. Vertical edge i maps to a_i, the
// j-th edge of the top strand of gon i to b_{i,j}, bottom to c_{i,j}.
std::map<std::pair<int, int>, VertexLabel> tiling_edge_roles(int n, int t) {
    std::map<std::pair<int, int>, VertexLabel> role;
    auto norm = [](int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); };
    auto top = [&](int i) { return i; };
    auto bot = [&](int i) { return t + 1 + i; };
    int base = 2 * (t + 1);
    int per_gon = 2 * (n - 2);
    for (int i = 0; i <= t; ++i) role[norm(top(i), bot(i))] = VertexLabel::a(i);
    for (int gon = 1; gon <= t; ++gon) {
        int tstart = base + (gon - 1) * per_gon;
        int bstart = tstart + (n - 2);
        int prev = top(gon - 1);
        for (int j = 0; j < n - 2; ++j) {
            role[norm(prev, tstart + j)] = VertexLabel::b(gon, j + 1);
            prev = tstart + j;
        }
        role[norm(prev, top(gon))] = VertexLabel::b(gon, n - 1);
        prev = bot(gon - 1);
        for (int j = 0; j < n - 2; ++j) {
            role[norm(prev, bstart + j)] = VertexLabel::c(gon, j + 1);
            prev = bstart + j;
        }
        role[norm(prev, bot(gon))] = VertexLabel::c(gon, n - 1);
    }
    return role;
}

void check_line_graph_matches_g(int n, int t) {
    Graph tiling = polygon_line_tiling(n, t);
    Graph lg = line_graph(tiling);
    Graph gg = g_graph(n, t);
    REQUIRE(lg.vertex_count() == gg.vertex_count());

    auto roles = tiling_edge_roles(n, t);
    auto edges = tiling.edges();
    REQUIRE(edges.size() == roles.size());
    // line-graph vertex e corresponds to edges[e]; send it to the G vertex
    // carrying that edge's role label
    std::vector<int> phi(lg.vertex_count(), -1);
    for (int e = 0; e < lg.vertex_count(); ++e) {
        auto it = roles.find(edges[static_cast<size_t>(e)]);
        REQUIRE(it != roles.end());
        phi[e] = gg.index_of_label(it->second);
        REQUIRE(phi[e] >= 0);
    }
    CHECK(is_isomorphism(lg, gg, phi));
}

} // namespace

TEST_CASE("line graph of the tiling is g_graph, by explicit bijection") {
    check_line_graph_matches_g(3, 4);
    for (int n = 2; n <= 5; ++n)
        for (int t = 1; t <= 5; ++t) check_line_graph_matches_g(n, t);
}

TEST_CASE("h_graph equals the induced subgraph definition") {
    // H_{n,0} is the path a_0 - b_{1,1} / a_0 - c_{1,1}
    Graph h0 = h_graph(3, 0);
    CHECK(h0.vertex_count() == 3);
    CHECK(is_path_graph(h0));

    Graph h41 = h_graph(4, 1);
    CHECK(h41.vertex_count() == (1 + 1) + 2 * 1 * 3 + 2); // 10
    CHECK(h_graph(3, 4).vertex_count() == 23);

    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t <= 4; ++t) {
            Graph h = h_graph(n, t);
            Graph big = g_graph(n, t + 1);
            std::vector<int> keep;
            for (int v = 0; v < big.vertex_count(); ++v) {
                VertexLabel l = big.label(v);
                bool bc = l.kind == VertexLabel::Kind::B || l.kind == VertexLabel::Kind::C;
                if ((l.kind == VertexLabel::Kind::A && l.i <= t) || (bc && l.i <= t) ||
                    (bc && l.i == t + 1 && l.j == 1))
                    keep.push_back(v);
            }
            CHECK(h == induced_subgraph(big, keep));
        }
}

TEST_CASE("induced subgraphs and deletions") {
    Graph c6 = cycle_graph(6);
    Graph p3 = induced_subgraph(c6, {0, 1, 2});
    CHECK(is_path_graph(p3));
    CHECK(p3.vertex_count() == 3);

    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(induced_subgraph(c6, all) == c6);
    CHECK(induced_subgraph(induced_subgraph(c6, {0, 1, 2}), {0, 1, 2}) == p3);
    CHECK(induced_subgraph(c6, {}).vertex_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(c6, {7}), std::invalid_argument);

    // P_5 minus the closed neighborhood of its middle is two isolated points
    Graph p5 = path_graph(5);
    Graph rest = delete_closed_neighborhood(p5, 2);
    CHECK(rest.vertex_count() == 2);
    CHECK(rest.edge_count() == 0);

    Graph c6rest = delete_closed_neighborhood(c6, 0);
    CHECK(is_path_graph(c6rest));
    CHECK(c6rest.vertex_count() == 3);

    // g_graph(3,1) is C_6; removing N[a_1] leaves P_3
    Graph g31 = g_graph(3, 1);
    Graph after = delete_closed_neighborhood(g31, g31.index_of_label(VertexLabel::a(1)));
    CHECK(is_path_graph(after));
    CHECK(after.vertex_count() == 3);
    CHECK_THROWS_AS(delete_closed_neighborhood(c6, 9), std::invalid_argument);
}

TEST_CASE("connected components") {
    Graph u = disjoint_union(path_graph(2), path_graph(3));
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertex_count() == 2);
    CHECK(comps[1].vertex_count() == 3);

    CHECK(connected_components(cycle_graph(6)).size() == 1);
    CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("labels survive deletions") {
    Graph g = g_graph(3, 2);
    int a1 = g.index_of_label(VertexLabel::a(1));
    REQUIRE(a1 >= 0);
    Graph d = delete_vertex(g, a1);
    CHECK(d.index_of_label(VertexLabel::a(1)) == -1);
    CHECK(d.index_of_label(VertexLabel::b(2, 2)) >= 0);
    CHECK(d.label(0).to_string() == "a_0");
}

TEST_CASE("graph digest is label- and edge-sensitive") {
    CHECK(path_graph(3).digest() == path_graph(3).digest());
    CHECK(path_graph(3).digest() != path_graph(4).digest());
    CHECK(path_graph(3).digest() != cycle_graph(3).digest());
    // same shape, different labels
    CHECK(g_graph(2, 1).digest() != cycle_graph(4).digest());
    // isolated vertices must matter
    CHECK(Graph(2).digest() != Graph(3).digest());
}
