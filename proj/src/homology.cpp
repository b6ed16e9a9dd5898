#include "polymatch/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polymatch {

long long HomologyProfile::betti_at(int d) const {
    auto it = betti.find(d);
    return it == betti.end() ? 0 : it->second;
}

long long HomologyProfile::reduced_euler() const {
    long long chi = 0;
    for (auto [d, b] : betti) chi += (d % 2 == 0 ? b : -b);
    return chi;
}

HomologyProfile reduced_homology(const ChainComplex& c) {
    int top = c.top_dim();
    std::vector<SmithForm> snf;
    snf.reserve(c.boundary.size());
    for (const auto& m : c.boundary) snf.push_back(smith_normal_form(m));

    auto rank_of = [&](int d) -> long long {
        // d indexes the boundary map out of dimension d; above top it is zero
        if (d < 0 || d > top) return 0;
        return snf[static_cast<size_t>(d)].rank;
    };

    HomologyProfile h;
    long long bm1 = 1 - rank_of(0);
    if (bm1 != 0) h.betti[-1] = bm1;
    for (int d = 0; d <= top; ++d) {
        long long b = c.face_counts[static_cast<size_t>(d)] - rank_of(d) - rank_of(d + 1);
        if (b != 0) h.betti[d] = b;
    }
    for (int d = -1; d < top; ++d) {
        std::vector<long long> tor;
        for (const BigInt& f : snf[static_cast<size_t>(d + 1)].nontrivial_factors()) {
            if (!f.fits_int64())
                throw std::overflow_error("reduced_homology: torsion factor exceeds int64");
            tor.push_back(f.to_int64());
        }
        if (!tor.empty()) h.torsion[d] = std::move(tor);
    }
    return h;
}

bool is_contractible_profile(const HomologyProfile& h) { return h.trivial(); }

Connectivity connectivity_of_profile(const HomologyProfile& h) {
    if (!h.torsion_free())
        throw std::domain_error("connectivity_of_profile: torsion present, not a wedge of spheres");
    if (h.betti.empty()) return Connectivity::inf();
    return Connectivity::of(h.betti.begin()->first - 1);
}

namespace {

std::vector<std::pair<long long, int>> prime_powers(long long v) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

} // namespace

std::vector<long long> normalize_torsion(std::vector<long long> orders) {
    std::map<long long, std::vector<int>> exps; // prime -> exponents, descending
    size_t slots = 0;
    for (long long v : orders) {
        if (v <= 1) throw std::invalid_argument("normalize_torsion: orders must be > 1");
        for (auto [p, e] : prime_powers(v)) exps[p].push_back(e);
    }
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<>());
        slots = std::max(slots, es.size());
    }
    // slot 0 collects the largest exponent of every prime (the last factor)
    std::vector<long long> chain(slots, 1);
    for (auto& [p, es] : exps)
        for (size_t s = 0; s < es.size(); ++s) {
            long long pw = 1;
            for (int e = 0; e < es[s]; ++e) pw *= p;
            chain[s] *= pw;
        }
    std::reverse(chain.begin(), chain.end()); // ascending, d_i | d_{i+1}
    return chain;
}

HomologyProfile profile_wedge(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.betti_at(-1) != 0 || b.betti_at(-1) != 0)
        throw std::invalid_argument("profile_wedge: empty complex has no basepoint");
    HomologyProfile out = a;
    for (auto [d, v] : b.betti) {
        out.betti[d] += v;
        if (out.betti[d] == 0) out.betti.erase(d);
    }
    for (auto& [d, tor] : b.torsion) {
        auto& acc = out.torsion[d];
        acc.insert(acc.end(), tor.begin(), tor.end());
    }
    for (auto& [d, tor] : out.torsion) tor = normalize_torsion(tor);
    return out;
}

HomologyProfile profile_suspend(const HomologyProfile& a, int k) {
    if (k < 0) throw std::invalid_argument("profile_suspend: k must be >= 0");
    HomologyProfile out;
    for (auto [d, v] : a.betti) out.betti[d + k] = v;
    for (auto& [d, tor] : a.torsion) out.torsion[d + k] = tor;
    return out;
}

HomologyProfile profile_join(const HomologyProfile& a, const HomologyProfile& b) {
    // groups per dimension as (free rank, torsion orders)
    auto group = [](const HomologyProfile& p, int d) {
        std::pair<long long, std::vector<long long>> g{p.betti_at(d), {}};
        auto it = p.torsion.find(d);
        if (it != p.torsion.end()) g.second = it->second;
        return g;
    };
    auto dims = [](const HomologyProfile& p) {
        std::vector<int> ds;
        for (auto [d, _] : p.betti) ds.push_back(d);
        for (auto& [d, _] : p.torsion) ds.push_back(d);
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    };

    HomologyProfile out;
    std::map<int, std::vector<long long>> tor_acc;
    for (int i : dims(a))
        for (int j : dims(b)) {
            auto [ra, ta] = group(a, i);
            auto [rb, tb] = group(b, j);
            // tensor lands in dimension i + j + 1
            int d = i + j + 1;
            if (ra * rb != 0) out.betti[d] += ra * rb;
            auto& td = tor_acc[d];
            for (long long x : ta)
                for (long long k = 0; k < rb; ++k) td.push_back(x);
            for (long long y : tb)
                for (long long k = 0; k < ra; ++k) td.push_back(y);
            for (long long x : ta)
                for (long long y : tb) {
                    long long g = std::gcd(x, y);
                    if (g > 1) td.push_back(g);
                }
            // Tor lands one dimension higher
            auto& te = tor_acc[d + 1];
            for (long long x : ta)
                for (long long y : tb) {
                    long long g = std::gcd(x, y);
                    if (g > 1) te.push_back(g);
                }
        }
    for (auto it = out.betti.begin(); it != out.betti.end();)
        it = it->second == 0 ? out.betti.erase(it) : std::next(it);
    for (auto& [d, tor] : tor_acc)
        if (!tor.empty()) out.torsion[d] = normalize_torsion(tor);
    return out;
}

bool profile_matches_type(const HomologyProfile& h, const HomotopyType& t) {
    return h.torsion_free() && h.betti == t.betti_pattern();
}

} // namespace polymatch
