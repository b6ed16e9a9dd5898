#include "polymatch/homotopy.hpp"

#include <mutex>
#include <stdexcept>

namespace polymatch {

HomotopyType HomotopyType::sphere(int dim) {
    if (dim < -1) throw std::invalid_argument("HomotopyType::sphere: dim must be >= -1");
    if (dim == -1) return empty();
    HomotopyType h;
    h.kind = Kind::Wedge;
    h.spheres[dim] = 1;
    return h;
}

HomotopyType HomotopyType::wedge_of(std::map<int, long long> spheres) {
    for (auto it = spheres.begin(); it != spheres.end();) {
        if (it->first < 0) throw std::invalid_argument("wedge_of: sphere dimension < 0");
        if (it->second < 0) throw std::invalid_argument("wedge_of: negative multiplicity");
        it = it->second == 0 ? spheres.erase(it) : std::next(it);
    }
    if (spheres.empty()) return point();
    HomotopyType h;
    h.kind = Kind::Wedge;
    h.spheres = std::move(spheres);
    return h;
}

std::map<int, long long> HomotopyType::betti_pattern() const {
    switch (kind) {
        case Kind::Point: return {};
        case Kind::Empty: return {{-1, 1}};
        case Kind::Wedge: return spheres;
    }
    return {};
}

std::string HomotopyType::to_string() const {
    if (kind == Kind::Point) return "pt";
    if (kind == Kind::Empty) return "S^-1";
    std::string out;
    for (auto it = spheres.rbegin(); it != spheres.rend(); ++it)
        for (long long c = 0; c < it->second; ++c) {
            if (!out.empty()) out += " v ";
            out += "S^" + std::to_string(it->first);
        }
    return out;
}

Connectivity connectivity_of_type(const HomotopyType& h) {
    switch (h.kind) {
        case HomotopyType::Kind::Point: return Connectivity::inf();
        case HomotopyType::Kind::Empty: return Connectivity::of(-2);
        case HomotopyType::Kind::Wedge: return Connectivity::of(h.spheres.begin()->first - 1);
    }
    return Connectivity::inf();
}

HomotopyType suspend(const HomotopyType& h, int k) {
    if (k < 0) throw std::invalid_argument("suspend: k must be >= 0");
    if (k == 0) return h;
    switch (h.kind) {
        case HomotopyType::Kind::Point: return HomotopyType::point();
        case HomotopyType::Kind::Empty: return HomotopyType::sphere(k - 1);
        case HomotopyType::Kind::Wedge: {
            std::map<int, long long> shifted;
            for (auto [d, c] : h.spheres) shifted[d + k] = c;
            return HomotopyType::wedge_of(std::move(shifted));
        }
    }
    return HomotopyType::point();
}

HomotopyType wedge(const std::vector<HomotopyType>& hs) {
    std::map<int, long long> acc;
    for (const HomotopyType& h : hs) {
        if (h.is_empty())
            throw std::invalid_argument("wedge: the empty complex has no basepoint");
        for (auto [d, c] : h.spheres) acc[d] += c;
    }
    return HomotopyType::wedge_of(std::move(acc));
}

HomotopyType join(const HomotopyType& a, const HomotopyType& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.is_point() || b.is_point()) return HomotopyType::point();
    std::map<int, long long> acc;
    for (auto [da, ca] : a.spheres)
        for (auto [db, cb] : b.spheres) acc[da + db + 1] += ca * cb;
    return HomotopyType::wedge_of(std::move(acc));
}

HomotopyType kozlov(CurveFamily family, int k) {
    if (family == CurveFamily::Path) {
        if (k < 0) throw std::invalid_argument("kozlov: paths need k >= 0");
        int q = k / 3;
        switch (k % 3) {
            case 0: return HomotopyType::sphere(q - 1);
            case 1: return HomotopyType::point();
            default: return HomotopyType::sphere(q);
        }
    }
    if (k < 3) throw std::invalid_argument("kozlov: cycles need k >= 3");
    int q = k / 3;
    switch (k % 3) {
        case 0: return wedge({HomotopyType::sphere(q - 1), HomotopyType::sphere(q - 1)});
        case 1: return HomotopyType::sphere(q - 1);
        default: return HomotopyType::sphere(q);
    }
}

namespace {

std::mutex memo_mu;
std::map<std::pair<int, int>, HomotopyType> memo_g, memo_h;

HomotopyType predict_g_rec(int n, int t);
HomotopyType predict_h_rec(int n, int t);

HomotopyType predict_g_rec(int n, int t) {
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_g.find({n, t});
        if (it != memo_g.end()) return it->second;
    }
    HomotopyType out;
    if (t == 0) {
        out = HomotopyType::point();
    } else if (n % 3 == 1) {
        // closed form: wedge of t copies of S^{2tm}
        int m = (n - 1) / 3;
        out = HomotopyType::wedge_of({{2 * t * m, t}});
    } else if (n % 3 == 2) {
        int m = (n - 2) / 3;
        switch (t) {
            case 1: out = HomotopyType::sphere(2 * m); break;
            case 2: out = HomotopyType::wedge_of({{4 * m + 1, 2}}); break;
            case 3: out = HomotopyType::sphere(6 * m + 2); break;
            default: {
                HomotopyType g3 = suspend(predict_g_rec(n, t - 3), 6 * m + 2);
                HomotopyType g4 = suspend(predict_g_rec(n, t - 4), 8 * m + 3);
                out = wedge({g3, g3, g4});
                break;
            }
        }
    } else {
        int m = n / 3;
        switch (t) {
            case 1: out = HomotopyType::wedge_of({{2 * m - 1, 2}}); break;
            case 2: out = HomotopyType::wedge_of({{4 * m - 2, 2}}); break;
            case 3:
                out = wedge({HomotopyType::sphere(6 * m - 2), HomotopyType::sphere(6 * m - 3)});
                break;
            default: {
                HomotopyType h2 = suspend(predict_h_rec(n, t - 2), 4 * m - 2);
                HomotopyType g3 = suspend(predict_g_rec(n, t - 3), 6 * m - 2);
                HomotopyType h4 = suspend(predict_h_rec(n, t - 4), 8 * m - 3);
                out = wedge({h2, g3, h4});
                break;
            }
        }
    }
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_g.emplace(std::make_pair(n, t), out);
    return out;
}

HomotopyType predict_h_rec(int n, int t) {
    {
        std::lock_guard<std::mutex> lk(memo_mu);
        auto it = memo_h.find({n, t});
        if (it != memo_h.end()) return it->second;
    }
    int m = n / 3;
    HomotopyType out;
    if (t == 0) {
        out = HomotopyType::sphere(0);
    } else {
        HomotopyType g1 = suspend(predict_g_rec(n, t - 1), 2 * m);
        HomotopyType h1 = suspend(predict_h_rec(n, t - 1), 2 * m - 1);
        out = wedge({g1, h1});
    }
    std::lock_guard<std::mutex> lk(memo_mu);
    memo_h.emplace(std::make_pair(n, t), out);
    return out;
}

} // namespace

HomotopyType predict_G(int n, int t) {
    if (n < 2) throw std::invalid_argument("predict_G: n must be >= 2");
    if (t < 0) throw std::invalid_argument("predict_G: t must be >= 0");
    return predict_g_rec(n, t);
}

HomotopyType predict_H(int n, int t) {
    if (n < 3 || n % 3 != 0)
        throw std::invalid_argument("predict_H: n must be a positive multiple of 3");
    if (t < 0) throw std::invalid_argument("predict_H: t must be >= 0");
    return predict_h_rec(n, t);
}

Connectivity connectivity_G(int n, int t) {
    if (n < 2) throw std::invalid_argument("connectivity_G: n must be >= 2");
    if (t < 0) throw std::invalid_argument("connectivity_G: t must be >= 0");
    if (t == 0) return Connectivity::inf();
    if (n % 3 == 1) {
        int m = (n - 1) / 3;
        return Connectivity::of(2 * t * m - 1);
    }
    if (n % 3 == 2) {
        int m = (n - 2) / 3;
        int e = t % 3 == 0 ? 3 : t % 3; // t = 3s + e with e in {1,2,3}
        int s = (t - e) / 3;
        return Connectivity::of(2 * m * t + 2 * (s - 1) + e);
    }
    int m = n / 3;
    return Connectivity::of((2 * m - 1) * t - 1);
}

long long jmmv_lower_bound(int n, int t) {
    if (n < 2 || n % 3 != 2)
        throw std::invalid_argument("jmmv_lower_bound: defined for n = 3m+2 only");
    if (t < 1) throw std::invalid_argument("jmmv_lower_bound: t must be >= 1");
    long long m = (n - 2) / 3;
    return 2 * m * t + t - (t + 1) / 2 - 1;
}

} // namespace polymatch
