#pragma once

#include <map>
#include <vector>

#include "polymatch/complex.hpp"
#include "polymatch/homotopy.hpp"

namespace polymatch {

// Reduced integral homology, one entry per dimension with nonzero content.
// betti holds free ranks (dimension -1 is 1 exactly for the empty complex);
// torsion holds the invariant-factor chain (> 1) of each torsion subgroup.
struct HomologyProfile {
    std::map<int, long long> betti;
    std::map<int, std::vector<long long>> torsion;

    long long betti_at(int d) const;
    bool torsion_free() const { return torsion.empty(); }
    long long reduced_euler() const;
    bool trivial() const { return betti.empty() && torsion.empty(); }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Exact reduced homology via Smith normal form of every boundary matrix.
HomologyProfile reduced_homology(const ChainComplex& c);

// True iff all reduced Betti numbers vanish and there is no torsion. A
// necessary condition for contractibility, not a certificate of it.
bool is_contractible_profile(const HomologyProfile& h);

// Infinite when all Betti numbers vanish, else (lowest nonzero dim) - 1.
// Only meaningful for wedges of spheres; torsion raises std::domain_error.
Connectivity connectivity_of_profile(const HomologyProfile& h);

// Homology algebra on profiles (free-and-torsion Kunneth):
//   wedge    -> dimension-wise direct sum (inputs must be nonempty complexes)
//   suspend  -> degree shift by k
//   join     -> degree-shifted tensor plus Tor terms
HomologyProfile profile_wedge(const HomologyProfile& a, const HomologyProfile& b);
HomologyProfile profile_suspend(const HomologyProfile& a, int k);
HomologyProfile profile_join(const HomologyProfile& a, const HomologyProfile& b);

// Canonical invariant-factor chain of a finite abelian group given as any
// multiset of cyclic orders (> 1).
std::vector<long long> normalize_torsion(std::vector<long long> orders);

// True iff the Betti pattern equals the type's sphere multiset and the
// profile is torsion-free.
bool profile_matches_type(const HomologyProfile& h, const HomotopyType& t);

} // namespace polymatch
