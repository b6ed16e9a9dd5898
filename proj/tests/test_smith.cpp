#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "polymatch/smith.hpp"

using polymatch::BigInt;
using polymatch::SmithForm;
using polymatch::SparseIntMatrix;
using polymatch::smith_normal_form;

namespace {

// Oracle 1: naive dense elementary row/column operations, straight off the
// blackboard. Centered remainders keep the entries from blowing up.
void centered_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    BigInt::divmod(a, b, q, r);
    BigInt twice = r + r;
    if (twice.cmp_abs(b) > 0) {
        BigInt babs = b.abs();
        if (r.sign() > 0) {
            r -= babs;
            q += (b.sign() > 0) ? BigInt(1) : BigInt(-1);
        } else {
            r += babs;
            q += (b.sign() > 0) ? BigInt(-1) : BigInt(1);
        }
    }
}

// Re-selecting the global minimum before every sweep keeps the entries
// small; remainders stay in place and become the next pivot candidates.
std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> m) {
    std::vector<BigInt> factors;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t off = 0;
    while (off < rows && off < cols) {
        size_t pr = off, pc = off;
        bool found = false;
        for (size_t i = off; i < rows; ++i)
            for (size_t j = off; j < cols; ++j)
                if (!m[i][j].is_zero() && (!found || m[i][j].cmp_abs(m[pr][pc]) < 0)) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[pr], m[off]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][off]);
        const BigInt piv = m[off][off];
        bool touched = false;
        for (size_t i = off + 1; i < rows; ++i) {
            if (m[i][off].is_zero()) continue;
            touched = true;
            BigInt q, r;
            centered_divmod(m[i][off], piv, q, r);
            if (!q.is_zero())
                for (size_t j = off; j < cols; ++j) m[i][j] -= q * m[off][j];
        }
        for (size_t j = off + 1; j < cols; ++j) {
            if (m[off][j].is_zero()) continue;
            touched = true;
            BigInt q, r;
            centered_divmod(m[off][j], piv, q, r);
            if (!q.is_zero())
                for (size_t i = off; i < rows; ++i) m[i][j] -= q * m[i][off];
        }
        if (touched) continue; // remainders (if any) become the next pivot
        bool fixup = false;
        for (size_t i = off + 1; i < rows && !fixup; ++i)
            for (size_t j = off + 1; j < cols && !fixup; ++j)
                if (!(m[i][j] % piv).is_zero()) {
                    for (size_t jj = off; jj < cols; ++jj) m[off][jj] += m[i][jj];
                    fixup = true;
                }
        if (fixup) continue;
        factors.push_back(piv.abs());
        ++off;
    }
    return factors;
}

// Oracle 2, straight from the definition: the k-th determinant divisor d_k
// is the gcd of all k x k minors, and the invariant factors are
// s_k = d_k / d_{k-1}. Determinants via fraction-free (Bareiss) elimination.
// Only usable for small matrices; that is all the oracle needs.

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    size_t k = m.size();
    if (k == 0) return BigInt(1);
    BigInt denom(1);
    int sign = 1;
    for (size_t p = 0; p + 1 < k; ++p) {
        if (m[p][p].is_zero()) {
            size_t q = p + 1;
            while (q < k && m[q][p].is_zero()) ++q;
            if (q == k) return BigInt(0);
            std::swap(m[p], m[q]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < k; ++i) {
            for (size_t j = p + 1; j < k; ++j)
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / denom; // exact
            m[i][p] = BigInt(0);
        }
        denom = m[p][p];
    }
    BigInt d = m[k - 1][k - 1];
    return sign < 0 ? -d : d;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    // iterative k-subset enumeration
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::vector<BigInt> minor_gcd_snf(const std::vector<std::vector<long long>>& m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> divisors{BigInt(1)}; // d_0
    for (int k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<int>> rsets, csets;
        subsets_of_size(r, k, rsets);
        subsets_of_size(c, k, csets);
        BigInt g(0);
        for (const auto& rs : rsets) {
            for (const auto& cs : csets) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = BigInt(m[rs[i]][cs[j]]);
                g = BigInt::gcd(g, bareiss_det(std::move(sub)));
                if (g.is_unit()) break;
            }
            if (g.is_unit()) break;
        }
        if (g.is_zero()) break; // rank reached
        divisors.push_back(g);
    }
    std::vector<BigInt> factors;
    for (size_t k = 1; k < divisors.size(); ++k)
        factors.push_back(divisors[k] / divisors[k - 1]);
    return factors;
}

SparseIntMatrix to_sparse(const std::vector<std::vector<long long>>& m) {
    SparseIntMatrix s(static_cast<int>(m.size()),
                      m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j]) s.add(static_cast<int>(i), static_cast<int>(j), m[i][j]);
    return s;
}

std::vector<long long> factors_ll(const SmithForm& f) {
    std::vector<long long> out;
    for (const BigInt& d : f.invariant_factors) out.push_back(d.to_int64());
    return out;
}

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const BigInt& d : v) out.push_back(d.to_int64());
    return out;
}

} // namespace

TEST_CASE("smith normal form: pinned examples") {
    CHECK(factors_ll(smith_normal_form(to_sparse({{1, 0}, {0, 1}}))) ==
          std::vector<long long>{1, 1});
    // gcd of entries 2, |det| = 8, so the chain is (2, 4)
    CHECK(factors_ll(smith_normal_form(to_sparse({{2, 4}, {6, 8}}))) ==
          std::vector<long long>{2, 4});
    SmithForm z = smith_normal_form(to_sparse({{0, 0}, {0, 0}}));
    CHECK(z.rank == 0);
    CHECK(z.invariant_factors.empty());
    SmithForm empty = smith_normal_form(SparseIntMatrix(0, 5));
    CHECK(empty.rank == 0);
}

TEST_CASE("smith normal form: torsion-bearing examples") {
    // diag(2, 3) has invariant factors (1, 6)
    CHECK(factors_ll(smith_normal_form(to_sparse({{2, 0}, {0, 3}}))) ==
          std::vector<long long>{1, 6});
    CHECK(factors_ll(smith_normal_form(to_sparse({{4, 0, 0}, {0, 6, 0}, {0, 0, 10}}))) ==
          std::vector<long long>{2, 2, 60});
}

TEST_CASE("oracle sanity") {
    CHECK(to_ll(minor_gcd_snf({{2, 4}, {6, 8}})) == std::vector<long long>{2, 4});
    CHECK(to_ll(minor_gcd_snf({{2, 0}, {0, 3}})) == std::vector<long long>{1, 6});
    CHECK(minor_gcd_snf({{0, 0}, {0, 0}}).empty());
    std::vector<std::vector<BigInt>> d{{BigInt(2), BigInt(4)}, {BigInt(6), BigInt(8)}};
    CHECK(to_ll(dense_snf(d)) == std::vector<long long>{2, 4});
}

TEST_CASE("smith normal form agrees with both oracles on 200 random matrices") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        int r = dim(rng), c = dim(rng);
        std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
        std::vector<std::vector<BigInt>> mb(r, std::vector<BigInt>(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                m[i][j] = entry(rng);
                mb[i][j] = BigInt(m[i][j]);
            }
        SmithForm got = smith_normal_form(to_sparse(m));
        std::vector<BigInt> dense = dense_snf(std::move(mb));
        CHECK(got.rank == static_cast<long long>(dense.size()));
        CHECK(factors_ll(got) == to_ll(dense));
        if (r <= 6 && c <= 6) {
            std::vector<BigInt> minors = minor_gcd_snf(m);
            CHECK(factors_ll(got) == to_ll(minors));
        }
    }
}

TEST_CASE("smith normal form handles large entries exactly") {
    long long big = (1LL << 31);
    // det = 2^62 - (2^62 - 1) = 1
    CHECK(factors_ll(smith_normal_form(
              to_sparse({{big, big + 1}, {big - 1, big}}))) ==
          std::vector<long long>{1, 1});

    // circulant-ish matrix whose determinant is 2^93 + 1: the last factor
    // does not fit in 64 bits, so compare as strings
    std::vector<std::vector<long long>> m = {{big, 1, 0}, {0, big, 1}, {1, 0, big}};
    SmithForm got = smith_normal_form(to_sparse(m));
    std::vector<BigInt> want = minor_gcd_snf(m);
    REQUIRE(got.rank == static_cast<long long>(want.size()));
    for (size_t i = 0; i < want.size(); ++i)
        CHECK(got.invariant_factors[i].to_string() == want[i].to_string());
    BigInt det93 = BigInt::from_string("9903520314283042199192993793"); // 2^93 + 1
    CHECK(got.invariant_factors.back().to_string() == det93.to_string());
}
