#pragma once

#include <vector>

#include "repcoh/complex.hpp"
#include "repcoh/snf.hpp"

namespace repcoh {

struct CohomologyGroup {
    int dim = 0;
    long long free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, t1 | t2 | ...

    bool operator==(const CohomologyGroup&) const = default;
};

// H^n over the integers: free_rank = dim C^n - rank d[n] - rank d[n-1],
// torsion from the Smith normal form of d[n-1]. Degrees past the
// materialized range are zero for check variants and an error for the
// truncated simplicial ones.
CohomologyGroup cohomology(const CochainComplex& c, int n);

// All degrees 0..c.max_dim, reducing each coboundary once.
std::vector<CohomologyGroup> cohomology_all(const CochainComplex& c);

// Integer basis of ker d[n], free-part representatives first (those spanning
// a complement of im d[n-1] over Q).
std::vector<std::vector<mpz_class>> cocycle_representatives(
    const CochainComplex& c, int n);

}  // namespace repcoh
