#include <doctest.h>

#include "polymatch/complex.hpp"
#include "polymatch/graph.hpp"
#include "polymatch/homology.hpp"
#include "polymatch/homotopy.hpp"

using namespace polymatch;

namespace {

HomologyProfile homology_of(const Graph& g) {
    return reduced_homology(chain_complex(independence_complex(g)));
}

} // namespace

// A broad but cheap sweep: brute force against the predictors on instances
// beyond the ones the acceptance gate pins down.
TEST_CASE("predictions hold across families on a wider sweep") {
    struct Row {
        char family;
        int n, t;
    };
    const Row rows[] = {
        {'G', 2, 7}, {'G', 2, 8},              // deep m = 0 recursion
        {'G', 6, 1}, {'G', 6, 2},              // n = 3m at m = 2
        {'H', 6, 0}, {'H', 6, 1},
        {'G', 7, 1},                           // n = 3m+1 at m = 2
        {'G', 8, 1},                           // n = 3m+2 at m = 2
    };
    for (const Row& r : rows) {
        Graph g = r.family == 'H' ? h_graph(r.n, r.t) : g_graph(r.n, r.t);
        HomotopyType predicted =
            r.family == 'H' ? predict_H(r.n, r.t) : predict_G(r.n, r.t);
        HomologyProfile h = homology_of(g);
        CAPTURE(r.family);
        CAPTURE(r.n);
        CAPTURE(r.t);
        CHECK(profile_matches_type(h, predicted));
        if (r.family == 'G' && r.t >= 1)
            CHECK(connectivity_of_profile(h) == connectivity_G(r.n, r.t));
    }
}

TEST_CASE("deep m = 0 predictions trace the recursion") {
    // sigma^2 G_4 twice plus sigma^3 G_3, and one level deeper
    CHECK(predict_G(2, 7) == HomotopyType::wedge_of({{4, 4}, {5, 1}}));
    CHECK(predict_G(2, 8) == HomotopyType::wedge_of({{5, 12}}));
}
