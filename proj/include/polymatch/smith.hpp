#pragma once

#include <tuple>
#include <vector>

#include "polymatch/bigint.hpp"

namespace polymatch {

// Sparse integer matrix in coordinate form. Duplicate (row, col) pairs are
// not allowed; callers build each entry once.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, long long>> entries;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c) {}

    void add(int r, int c, long long v);
};

struct SmithForm {
    long long rank = 0;
    // Positive, d_1 | d_2 | ... | d_rank.
    std::vector<BigInt> invariant_factors;

    std::vector<BigInt> nontrivial_factors() const; // factors > 1
};

// Exact Smith normal form over the integers.
//
// Elimination runs on checked 64-bit arithmetic first and transparently
// retries with arbitrary-precision integers if any intermediate value
// overflows, so the result is always exact. Unit pivots are consumed
// greedily with Markowitz-style pivot selection; whatever remains (no
// unit entries) goes through a classic invariant-factor reduction.
SmithForm smith_normal_form(const SparseIntMatrix& m);

} // namespace polymatch
