#pragma once

#include <stdexcept>
#include <vector>

#include "polymatch/graph.hpp"
#include "polymatch/smith.hpp"

namespace polymatch {

// Hard cap on the number of faces a single enumeration may produce. The
// complexes grow exponentially in the graph, so the guard fails loudly
// instead of truncating.
inline constexpr long long kDefaultSimplexBudget = 500000;

struct budget_exceeded : std::runtime_error {
    long long budget;
    explicit budget_exceeded(long long b)
        : std::runtime_error("simplex budget exceeded (" + std::to_string(b) + " faces)"),
          budget(b) {}
};

// Full graded face list of a finite simplicial complex. faces_by_dim[d]
// holds the d-faces as sorted vertex tuples, in lexicographic order, so a
// face's index is recoverable by binary search. The void/empty complex is
// represented by vertex_count = 0 and no faces.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    int dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    bool empty() const { return faces_by_dim.empty(); }
    long long face_count() const;
    long long face_index(int d, const std::vector<int>& face) const; // -1 if absent
};

std::vector<long long> f_vector(const SimplicialComplex& k);

// Reduced Euler characteristic (the empty face counts as one (-1)-face).
long long reduced_euler_from_f_vector(const SimplicialComplex& k);

// Every (d-1)-subset of every listed d-face is listed.
bool is_closed_under_subsets(const SimplicialComplex& k);

// All independent vertex sets of g of size >= 1, in lexicographic order.
// Throws budget_exceeded once more than `budget` faces have been produced.
SimplicialComplex independence_complex(const Graph& g, long long budget = kDefaultSimplexBudget);

// independence_complex(line_graph(g)).
SimplicialComplex matching_complex(const Graph& g, long long budget = kDefaultSimplexBudget);

// Boundary matrices with the standard alternating-sign rule over the
// lexicographic face order. boundary[0] is the augmentation (1 x vertices);
// boundary[d] has shape (#(d-1)-faces) x (#d-faces).
struct ChainComplex {
    int vertex_count = 0;
    std::vector<long long> face_counts;     // per dimension 0..dim
    std::vector<SparseIntMatrix> boundary;  // indices 0..dim

    int top_dim() const { return static_cast<int>(face_counts.size()) - 1; }
};

ChainComplex chain_complex(const SimplicialComplex& k);

} // namespace polymatch
