#include "polymatch/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

namespace polymatch {

void SparseIntMatrix::add(int r, int c, long long v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::invalid_argument("SparseIntMatrix::add: index out of range");
    if (v != 0) entries.emplace_back(r, c, v);
}

std::vector<BigInt> SmithForm::nontrivial_factors() const {
    std::vector<BigInt> out;
    for (const BigInt& d : invariant_factors)
        if (!d.is_unit()) out.push_back(d);
    return out;
}

namespace {

// Raised by the checked 64-bit path; smith_normal_form retries with BigInt.
struct Overflow64 {};

struct C64 {
    long long v = 0;
    C64() = default;
    C64(long long x) : v(x) {}

    bool is_zero() const { return v == 0; }
    bool is_unit() const { return v == 1 || v == -1; }

    friend C64 operator+(C64 a, C64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow64{};
        return r;
    }
    friend C64 operator-(C64 a, C64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow64{};
        return r;
    }
    friend C64 operator*(C64 a, C64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow64{};
        return r;
    }
    C64 operator-() const {
        if (v == INT64_MIN) throw Overflow64{};
        return -v;
    }
    friend bool operator==(C64 a, C64 b) { return a.v == b.v; }
};

void int_divmod(C64 a, C64 b, C64& q, C64& r) {
    if (a.v == INT64_MIN && b.v == -1) throw Overflow64{};
    q = a.v / b.v;
    r = a.v % b.v;
}
void int_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    BigInt::divmod(a, b, q, r);
}

// -1 / 0 / +1 comparison of absolute values.
int int_cmp_abs(C64 a, C64 b) {
    unsigned long long ua = a.v < 0 ? 0ULL - static_cast<unsigned long long>(a.v)
                                    : static_cast<unsigned long long>(a.v);
    unsigned long long ub = b.v < 0 ? 0ULL - static_cast<unsigned long long>(b.v)
                                    : static_cast<unsigned long long>(b.v);
    return ua < ub ? -1 : ua > ub ? 1 : 0;
}
int int_cmp_abs(const BigInt& a, const BigInt& b) { return a.cmp_abs(b); }

BigInt to_bigint(C64 a) { return BigInt(a.v); }
BigInt to_bigint(const BigInt& a) { return a; }

template <class I>
using Row = std::vector<std::pair<int, I>>;

template <class I>
struct ElimState {
    int nrows, ncols;
    std::vector<Row<I>> row;          // sorted by column
    std::vector<std::vector<int>> col_rows; // may hold stale row ids
    std::vector<int> row_nnz;
    std::vector<char> row_alive, col_alive;

    explicit ElimState(const SparseIntMatrix& m)
        : nrows(m.rows), ncols(m.cols), row(m.rows), col_rows(m.cols),
          row_nnz(m.rows, 0), row_alive(m.rows, 1), col_alive(m.cols, 1) {
        std::vector<std::vector<std::pair<int, long long>>> tmp(m.rows);
        for (const auto& [r, c, v] : m.entries) tmp[r].emplace_back(c, v);
        for (int r = 0; r < m.rows; ++r) {
            std::sort(tmp[r].begin(), tmp[r].end());
            row[r].reserve(tmp[r].size());
            for (auto& [c, v] : tmp[r]) {
                row[r].emplace_back(c, I(v));
                col_rows[c].push_back(r);
            }
            row_nnz[r] = static_cast<int>(row[r].size());
        }
    }

    const I* entry_at(int r, int c) const {
        auto it = std::lower_bound(row[r].begin(), row[r].end(), c,
                                   [](const std::pair<int, I>& e, int col) { return e.first < col; });
        if (it == row[r].end() || it->first != c) return nullptr;
        return &it->second;
    }

    // Rewrites col_rows[c] to the rows that genuinely hold an entry there.
    std::vector<int>& clean_col(int c) {
        auto& v = col_rows[c];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        size_t out = 0;
        for (int r : v)
            if (row_alive[r] && entry_at(r, c)) v[out++] = r;
        v.resize(out);
        return v;
    }

    // row[dst] -= q * row[src]; returns columns that newly appeared in dst.
    void axpy_row(int dst, const I& q, int src) {
        Row<I> merged;
        merged.reserve(row[dst].size() + row[src].size());
        auto a = row[dst].begin(), ae = row[dst].end();
        auto b = row[src].begin(), be = row[src].end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                I nv = I(0) - q * b->second;
                if (!nv.is_zero()) {
                    merged.emplace_back(b->first, nv);
                    col_rows[b->first].push_back(dst);
                }
                ++b;
            } else {
                I nv = a->second - q * b->second;
                if (!nv.is_zero()) merged.emplace_back(a->first, nv);
                ++a;
                ++b;
            }
        }
        row[dst] = std::move(merged);
        row_nnz[dst] = static_cast<int>(row[dst].size());
    }
};

// Classic invariant-factor reduction for the (small) residue with no unit
// entries. Dense map-of-maps representation.
template <class I>
std::vector<BigInt> smith_residual(std::map<int, std::map<int, I>> rows) {
    std::vector<BigInt> factors;
    auto prune = [&](int r) {
        if (rows.count(r) && rows[r].empty()) rows.erase(r);
    };
    while (!rows.empty()) {
        // pivot = smallest absolute value
        int pr = -1, pc = -1;
        const I* pv = nullptr;
        for (auto& [r, cols] : rows)
            for (auto& [c, v] : cols)
                if (!pv || int_cmp_abs(v, *pv) < 0) {
                    pr = r;
                    pc = c;
                    pv = &v;
                }
        bool again = true;
        while (again) {
            again = false;
            // clear pivot column by row operations
            for (auto it = rows.begin(); it != rows.end();) {
                int r = it->first;
                auto& cols = it->second;
                ++it;
                if (r == pr) continue;
                auto ce = cols.find(pc);
                if (ce == cols.end()) continue;
                I q, rem;
                int_divmod(ce->second, rows[pr][pc], q, rem);
                if (!q.is_zero()) {
                    for (auto& [c, v] : rows[pr]) {
                        auto& cell = cols[c];
                        cell = cell - q * v;
                        if (cell.is_zero()) cols.erase(c);
                    }
                }
                if (!rem.is_zero()) {
                    // strictly smaller remainder becomes the new pivot
                    pr = r;
                    again = true;
                    break;
                }
                prune(r);
            }
            if (again) continue;
            // clear pivot row by column operations
            I piv = rows[pr][pc];
            for (auto ce = rows[pr].begin(); ce != rows[pr].end();) {
                int c = ce->first;
                if (c == pc) {
                    ++ce;
                    continue;
                }
                I q, rem;
                int_divmod(ce->second, piv, q, rem);
                if (!q.is_zero())
                    for (auto& [r, cols] : rows) {
                        if (r == pr) continue;
                        auto hit = cols.find(pc);
                        if (hit == cols.end()) continue;
                        auto& cell = cols[c];
                        cell = cell - q * hit->second;
                        if (cell.is_zero()) cols.erase(c);
                    }
                if (rem.is_zero()) {
                    ce = rows[pr].erase(ce);
                } else {
                    ce->second = rem;
                    pc = c;
                    again = true;
                    break;
                }
            }
        }
        // pivot now alone in its row and column; enforce divisibility
        I piv = rows[pr][pc];
        bool restart = false;
        for (auto& [r, cols] : rows) {
            if (r == pr) continue;
            for (auto& [c, v] : cols) {
                I q, rem;
                int_divmod(v, piv, q, rem);
                if (!rem.is_zero()) {
                    // fold the offending row into the pivot row and redo
                    for (auto& [cc, vv] : cols) {
                        auto& cell = rows[pr][cc];
                        cell = cell + vv;
                        if (cell.is_zero()) rows[pr].erase(cc);
                    }
                    restart = true;
                    break;
                }
            }
            if (restart) break;
        }
        if (restart) continue;
        factors.push_back(to_bigint(piv).abs());
        rows[pr].erase(pc);
        prune(pr);
        for (auto it = rows.begin(); it != rows.end();) {
            it->second.erase(pc);
            if (it->second.empty())
                it = rows.erase(it);
            else
                ++it;
        }
    }
    return factors;
}

template <class I>
SmithForm snf_impl(const SparseIntMatrix& m) {
    ElimState<I> st(m);

    // phase 1: unit pivots, smallest-row-first with lazy heap
    using QE = std::pair<int, int>; // (nnz, row)
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    for (int r = 0; r < st.nrows; ++r)
        if (st.row_nnz[r] > 0) pq.emplace(st.row_nnz[r], r);
    long long unit_rank = 0;

    while (!pq.empty()) {
        auto [sz, r] = pq.top();
        pq.pop();
        if (!st.row_alive[r] || sz != st.row_nnz[r] || st.row_nnz[r] == 0) continue;
        // pick the unit entry whose column is sparsest
        int best_c = -1;
        size_t best_cost = SIZE_MAX;
        for (auto& [c, v] : st.row[r]) {
            if (!v.is_unit()) continue;
            size_t cost = st.clean_col(c).size();
            if (cost < best_cost) {
                best_cost = cost;
                best_c = c;
            }
        }
        if (best_c < 0) continue; // no unit entry; revisited if modified
        int c = best_c;
        const I piv = *st.entry_at(r, c); // +1 or -1
        auto rows_here = st.clean_col(c); // copy: axpy mutates col_rows[c]
        for (int r2 : rows_here) {
            if (r2 == r) continue;
            const I* a2 = st.entry_at(r2, c);
            if (!a2) continue;
            // piv is ±1, so a2 / piv = a2 * piv
            I q = (*a2) * piv;
            st.axpy_row(r2, q, r);
            // a modified row may have (re)gained a unit entry
            if (st.row_nnz[r2] > 0) pq.emplace(st.row_nnz[r2], r2);
        }
        st.row_alive[r] = 0;
        st.col_alive[c] = 0;
        ++unit_rank;
    }

    // phase 2: residual without unit entries
    std::map<int, std::map<int, I>> rest;
    for (int r = 0; r < st.nrows; ++r) {
        if (!st.row_alive[r]) continue;
        for (auto& [c, v] : st.row[r])
            if (st.col_alive[c]) rest[r][c] = v;
        if (rest.count(r) && rest[r].empty()) rest.erase(r);
    }
    std::vector<BigInt> tail = smith_residual<I>(std::move(rest));
    std::sort(tail.begin(), tail.end());

    SmithForm out;
    out.rank = unit_rank + static_cast<long long>(tail.size());
    out.invariant_factors.assign(static_cast<size_t>(unit_rank), BigInt(1));
    out.invariant_factors.insert(out.invariant_factors.end(), tail.begin(), tail.end());
    for (size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
        if (!(out.invariant_factors[i + 1] % out.invariant_factors[i]).is_zero())
            throw std::logic_error("smith_normal_form: divisibility chain violated");
    return out;
}

} // namespace

SmithForm smith_normal_form(const SparseIntMatrix& m) {
    try {
        return snf_impl<C64>(m);
    } catch (const Overflow64&) {
        return snf_impl<BigInt>(m);
    }
}

} // namespace polymatch
