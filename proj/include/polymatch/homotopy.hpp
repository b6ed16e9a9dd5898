#pragma once

#include <map>
#include <string>
#include <vector>

namespace polymatch {

// Formal wedge-of-spheres value.
//
// Point is the empty wedge (contractible); Empty is the empty complex,
// i.e. the (-1)-sphere, which is the join identity and is never allowed
// inside a wedge. Wedge holds a nonempty multiset of sphere dimensions
// >= 0 as dim -> multiplicity.
struct HomotopyType {
    enum class Kind { Point, Empty, Wedge };

    Kind kind = Kind::Point;
    std::map<int, long long> spheres;

    static HomotopyType point() { return {}; }
    static HomotopyType empty() { return {Kind::Empty, {}}; }
    static HomotopyType sphere(int dim); // dim = -1 gives Empty
    static HomotopyType wedge_of(std::map<int, long long> spheres);

    bool is_point() const { return kind == Kind::Point; }
    bool is_empty() const { return kind == Kind::Empty; }

    // Reduced Betti pattern: {} for Point, {-1: 1} for Empty, the sphere
    // multiset for a wedge.
    std::map<int, long long> betti_pattern() const;

    std::string to_string() const; // "pt", "S^-1", "S^4 v S^4 v S^3"

    friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

// Connectivity value: POINT -> infinite, EMPTY -> -2, wedge -> min dim - 1.
struct Connectivity {
    bool infinite = false;
    int value = 0; // >= -2 when finite

    static Connectivity inf() { return {true, 0}; }
    static Connectivity of(int v) { return {false, v}; }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
    friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

Connectivity connectivity_of_type(const HomotopyType& h);

// k-fold suspension. Sigma^k of the empty complex is S^{k-1}.
HomotopyType suspend(const HomotopyType& h, int k);

// Wedge sum; Point operands are dropped. Empty is rejected (a wedge needs
// basepoints).
HomotopyType wedge(const std::vector<HomotopyType>& hs);

// Join: Empty is the identity, Point absorbs, and spheres obey
// S^a * S^b = S^{a+b+1} (distributing over wedges).
HomotopyType join(const HomotopyType& a, const HomotopyType& b);

enum class CurveFamily { Path, Cycle };

// Homotopy type of the independence complex of a path (k >= 0 vertices) or
// cycle (k >= 3 vertices):
//   paths:  I(P_{3k}) = S^{k-1},  I(P_{3k+1}) = pt,          I(P_{3k+2}) = S^k
//   cycles: I(C_{3k}) = S^{k-1} v S^{k-1}, I(C_{3k+1}) = S^{k-1}, I(C_{3k+2}) = S^k
HomotopyType kozlov(CurveFamily family, int k);

// Predicted homotopy type of the matching complex of t glued (2n)-gons,
// i.e. of the independence complex of g_graph(n, t). Fully evaluated;
// memoized internally (thread-safe).
HomotopyType predict_G(int n, int t);

// Same for the extended family h_graph(n, t); defined for n = 3m only.
HomotopyType predict_H(int n, int t);

// Closed-form connectivity of predict_G(n, t) for t >= 1 (infinite at t = 0):
//   n = 3m+1: 2mt - 1
//   n = 3m+2: 2mt + 2(s-1) + e where t = 3s + e, e in {1,2,3}
//   n = 3m:   (2m-1)t - 1
Connectivity connectivity_G(int n, int t);

// Comparison lower bound 2mt + t - floor((t+1)/2) - 1 for n = 3m+2, t >= 1.
long long jmmv_lower_bound(int n, int t);

} // namespace polymatch
