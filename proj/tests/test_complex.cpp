#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "polymatch/complex.hpp"
#include "polymatch/graph.hpp"

using namespace polymatch;

namespace {

// Independent oracle: all independent sets by brute subset enumeration.
// Only for graphs small enough to sweep 2^n subsets.
std::vector<std::vector<int>> all_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    REQUIRE(n <= 20);
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        bool ok = true;
        for (size_t x = 0; x < s.size() && ok; ++x)
            for (size_t y = x + 1; y < s.size() && ok; ++y)
                if (g.has_edge(s[x], s[y])) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<long long> oracle_f_vector(const Graph& g) {
    std::vector<long long> f;
    for (const auto& s : all_independent_sets(g)) {
        size_t d = s.size() - 1;
        if (d >= f.size()) f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// sparse product is zero, for the boundary-of-boundary check
bool composes_to_zero(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    REQUIRE(a.cols == b.rows);
    std::map<std::pair<int, int>, long long> prod;
    std::vector<std::vector<std::pair<int, long long>>> brows(b.rows);
    for (auto [r, c, v] : b.entries) brows[r].emplace_back(c, v);
    for (auto [r, k, v] : a.entries)
        for (auto [c, w] : brows[k]) prod[{r, c}] += v * w;
    for (auto& [rc, v] : prod)
        if (v != 0) return false;
    return true;
}

} // namespace

TEST_CASE("independence complex pinned f-vectors") {
    // frozen from the subset-enumeration oracle
    CHECK(f_vector(independence_complex(cycle_graph(4))) == std::vector<long long>{4, 2});
    CHECK(f_vector(independence_complex(path_graph(2))) == std::vector<long long>{2});
    CHECK(f_vector(independence_complex(cycle_graph(6))) == std::vector<long long>{6, 9, 2});
    CHECK(oracle_f_vector(cycle_graph(6)) == std::vector<long long>{6, 9, 2});

    CHECK(independence_complex(Graph(0)).empty());
    CHECK(f_vector(independence_complex(Graph(0))).empty());
}

TEST_CASE("independence complex matches the subset oracle on random graphs") {
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + iter % 9;
        Graph g = random_graph(n, 0.2 + 0.06 * (iter % 10), 555 + iter);
        SimplicialComplex k = independence_complex(g);
        auto faces = all_independent_sets(g);
        CHECK(k.face_count() == static_cast<long long>(faces.size()));
        CHECK(f_vector(k) == oracle_f_vector(g));
        // exact face sets agree
        std::set<std::vector<int>> want(faces.begin(), faces.end());
        long long hits = 0;
        for (const auto& fd : k.faces_by_dim)
            for (const auto& f : fd) hits += want.count(f);
        CHECK(hits == k.face_count());
        CHECK(is_closed_under_subsets(k));
    }
}

TEST_CASE("faces come out sorted within each dimension") {
    Graph g = random_graph(9, 0.3, 99);
    SimplicialComplex k = independence_complex(g);
    for (const auto& fd : k.faces_by_dim) CHECK(std::is_sorted(fd.begin(), fd.end()));
}

TEST_CASE("matching complex basics") {
    // one hexagon: same complex as the independence complex of C_6
    CHECK(f_vector(matching_complex(polygon_line_tiling(3, 1))) ==
          std::vector<long long>{6, 9, 2});
    // a single edge has a single matching
    CHECK(f_vector(matching_complex(path_graph(2))) == std::vector<long long>{1});
    // no two edges of a triangle are disjoint
    CHECK(f_vector(matching_complex(cycle_graph(3))) == std::vector<long long>{3});
}

TEST_CASE("simplex budget aborts loudly") {
    Graph free20(20); // no edges: 2^20 - 1 faces, way over a budget of 10
    CHECK_THROWS_AS(independence_complex(free20, 10), budget_exceeded);
    try {
        independence_complex(free20, 10);
    } catch (const budget_exceeded& e) {
        CHECK(e.budget == 10);
    }
}

TEST_CASE("chain complex shapes and signs") {
    // two points: only the augmentation, one row of ones
    ChainComplex s0 = chain_complex(independence_complex(path_graph(2)));
    REQUIRE(s0.boundary.size() == 1);
    CHECK(s0.boundary[0].rows == 1);
    CHECK(s0.boundary[0].cols == 2);
    CHECK(smith_normal_form(s0.boundary[0]).rank == 1);

    // hollow triangle, built by hand: boundary rank 2
    SimplicialComplex hollow;
    hollow.vertex_count = 3;
    hollow.faces_by_dim = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
    ChainComplex cc = chain_complex(hollow);
    REQUIRE(cc.boundary.size() == 2);
    CHECK(cc.boundary[1].rows == 3);
    CHECK(cc.boundary[1].cols == 3);
    CHECK(smith_normal_form(cc.boundary[1]).rank == 2);
    // every column of a 1-boundary has one +1 and one -1
    std::map<int, long long> colsum;
    for (auto [r, c, v] : cc.boundary[1].entries) colsum[c] += v;
    for (auto& [c, v] : colsum) CHECK(v == 0);
}

TEST_CASE("boundary of boundary vanishes") {
    ChainComplex cc = chain_complex(independence_complex(cycle_graph(6)));
    REQUIRE(cc.boundary.size() == 3);
    CHECK(composes_to_zero(cc.boundary[0], cc.boundary[1]));
    CHECK(composes_to_zero(cc.boundary[1], cc.boundary[2]));

    for (int iter = 0; iter < 10; ++iter) {
        Graph g = random_graph(8, 0.25, 31 + iter);
        ChainComplex rc = chain_complex(independence_complex(g));
        for (size_t d = 1; d < rc.boundary.size(); ++d)
            CHECK(composes_to_zero(rc.boundary[d - 1], rc.boundary[d]));
    }
}

TEST_CASE("complex of a disjoint union is the join of the complexes") {
    for (int iter = 0; iter < 20; ++iter) {
        Graph g1 = random_graph(2 + iter % 5, 0.4, 1000 + iter);
        Graph g2 = random_graph(2 + (iter / 2) % 5, 0.35, 2000 + iter);
        Graph u = disjoint_union(g1, g2);
        SimplicialComplex ku = independence_complex(u);

        // join as face sets: unions of a face (or nothing) from each side
        std::set<std::vector<int>> want;
        auto f1 = all_independent_sets(g1);
        auto f2 = all_independent_sets(g2);
        f1.push_back({});
        f2.push_back({});
        int off = g1.vertex_count();
        for (const auto& a : f1)
            for (const auto& b : f2) {
                std::vector<int> face = a;
                for (int v : b) face.push_back(off + v);
                if (face.empty()) continue;
                std::sort(face.begin(), face.end());
                want.insert(face);
            }
        std::set<std::vector<int>> got;
        for (const auto& fd : ku.faces_by_dim)
            for (const auto& f : fd) got.insert(f);
        CHECK(got == want);
    }
}

TEST_CASE("euler characteristic bookkeeping") {
    // f = (6, 9, 2): -1 + 6 - 9 + 2 = -2, matching S^1 v S^1
    CHECK(reduced_euler_from_f_vector(independence_complex(cycle_graph(6))) == -2);
    CHECK(reduced_euler_from_f_vector(independence_complex(Graph(0))) == -1);
    CHECK(reduced_euler_from_f_vector(independence_complex(Graph(1))) == 0);
}
