#include "polymatch/complex.hpp"

#include <algorithm>

namespace polymatch {

long long SimplicialComplex::face_count() const {
    long long n = 0;
    for (const auto& fd : faces_by_dim) n += static_cast<long long>(fd.size());
    return n;
}

long long SimplicialComplex::face_index(int d, const std::vector<int>& face) const {
    if (d < 0 || d > dim()) return -1;
    const auto& fd = faces_by_dim[d];
    auto it = std::lower_bound(fd.begin(), fd.end(), face);
    if (it == fd.end() || *it != face) return -1;
    return it - fd.begin();
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
    std::vector<long long> f;
    f.reserve(k.faces_by_dim.size());
    for (const auto& fd : k.faces_by_dim) f.push_back(static_cast<long long>(fd.size()));
    return f;
}

long long reduced_euler_from_f_vector(const SimplicialComplex& k) {
    long long chi = -1;
    int sign = 1;
    for (const auto& fd : k.faces_by_dim) {
        chi += sign * static_cast<long long>(fd.size());
        sign = -sign;
    }
    return chi;
}

bool is_closed_under_subsets(const SimplicialComplex& k) {
    for (int d = 1; d <= k.dim(); ++d)
        for (const auto& face : k.faces_by_dim[d]) {
            std::vector<int> sub(face.size() - 1);
            for (size_t omit = 0; omit < face.size(); ++omit) {
                size_t w = 0;
                for (size_t p = 0; p < face.size(); ++p)
                    if (p != omit) sub[w++] = face[p];
                if (k.face_index(d - 1, sub) < 0) return false;
            }
        }
    return true;
}

namespace {

struct IndepEnumerator {
    const Graph& g;
    long long budget;
    int words;
    std::vector<uint64_t> adj_bits; // row-major n x words
    SimplicialComplex out;
    std::vector<int> stack;
    long long produced = 0;

    IndepEnumerator(const Graph& g_, long long budget_) : g(g_), budget(budget_) {
        int n = g.vertex_count();
        words = (n + 63) / 64;
        adj_bits.assign(static_cast<size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v))
                adj_bits[static_cast<size_t>(v) * words + w / 64] |= uint64_t(1) << (w % 64);
        out.vertex_count = n;
    }

    void emit() {
        int d = static_cast<int>(stack.size()) - 1;
        if (d >= static_cast<int>(out.faces_by_dim.size())) out.faces_by_dim.resize(d + 1);
        out.faces_by_dim[d].push_back(stack);
        if (++produced > budget) throw budget_exceeded(budget);
    }

    // cand: vertices > last chosen and non-adjacent to all chosen
    void extend(int v, std::vector<uint64_t>& cand) {
        stack.push_back(v);
        emit();
        std::vector<uint64_t> next(words);
        for (int w = 0; w < words; ++w)
            next[w] = cand[w] & ~adj_bits[static_cast<size_t>(v) * words + w];
        // clear bits <= v
        for (int w = 0; w <= v / 64 && w < words; ++w) {
            if (w < v / 64)
                next[w] = 0;
            else
                next[w] &= ~((v % 64 == 63) ? ~uint64_t(0) : ((uint64_t(1) << (v % 64 + 1)) - 1));
        }
        for (int w = 0; w < words; ++w) {
            uint64_t bits = next[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                extend(w * 64 + b, next);
            }
        }
        stack.pop_back();
    }

    SimplicialComplex run() {
        int n = g.vertex_count();
        std::vector<uint64_t> all(words, 0);
        for (int v = 0; v < n; ++v) all[v / 64] |= uint64_t(1) << (v % 64);
        for (int v = 0; v < n; ++v) extend(v, all);
        return std::move(out);
    }
};

} // namespace

SimplicialComplex independence_complex(const Graph& g, long long budget) {
    // faces come out in lexicographic order within each dimension: the
    // DFS walks extensions in ascending vertex order
    return IndepEnumerator(g, budget).run();
}

SimplicialComplex matching_complex(const Graph& g, long long budget) {
    return independence_complex(line_graph(g), budget);
}

ChainComplex chain_complex(const SimplicialComplex& k) {
    ChainComplex cc;
    cc.vertex_count = k.vertex_count;
    cc.face_counts = f_vector(k);
    int top = k.dim();
    cc.boundary.reserve(static_cast<size_t>(top >= 0 ? top + 1 : 1));

    // augmentation: one row of ones over the vertices
    int n0 = top >= 0 ? static_cast<int>(k.faces_by_dim[0].size()) : 0;
    SparseIntMatrix aug(1, n0);
    for (int j = 0; j < n0; ++j) aug.add(0, j, 1);
    cc.boundary.push_back(std::move(aug));

    for (int d = 1; d <= top; ++d) {
        const auto& faces = k.faces_by_dim[d];
        SparseIntMatrix bd(static_cast<int>(k.faces_by_dim[d - 1].size()),
                           static_cast<int>(faces.size()));
        std::vector<int> sub(static_cast<size_t>(d));
        for (size_t j = 0; j < faces.size(); ++j) {
            const auto& face = faces[j];
            long long sign = 1;
            for (size_t omit = 0; omit <= static_cast<size_t>(d); ++omit) {
                size_t w = 0;
                for (size_t p = 0; p < face.size(); ++p)
                    if (p != omit) sub[w++] = face[p];
                long long r = k.face_index(d - 1, sub);
                bd.add(static_cast<int>(r), static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        cc.boundary.push_back(std::move(bd));
    }
    return cc;
}

} // namespace polymatch
