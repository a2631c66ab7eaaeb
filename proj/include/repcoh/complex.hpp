#pragma once

#include <map>
#include <vector>

#include "repcoh/levels.hpp"
#include "repcoh/matrix.hpp"
#include "repcoh/poset.hpp"

namespace repcoh {

// A finite integer combination of interval classes in one level poset.
// Keys are sorted object-index supports; zero coefficients are never stored.
struct VirtualClass {
    int level = 0;
    std::map<std::vector<int>, long long> coeffs;

    void add(const std::vector<int>& support, long long c);
    bool operator==(const VirtualClass&) const = default;
};

enum class BasisMode { Intervals, Singletons, SingletonsReduced, Nerve };

std::string basis_mode_name(BasisMode m);
bool parse_basis_mode(const std::string& token, BasisMode& out);

// Cochain complex of the chosen basis over levels 0..top, with coboundaries
// d[n] : C^n -> C^{n+1} for n = 0..top-1. Degrees up to max_dim have both
// neighbouring differentials materialized.
struct CochainComplex {
    Poset base;
    Variant variant = Variant::CheckG;
    BasisMode mode = BasisMode::Intervals;
    int max_dim = 0;
    std::vector<LevelPoset> levels;
    std::vector<std::vector<Interval>> bases;  // per level, (size, lex) order
    std::vector<IntegerMatrix> d;

    int top() const { return int(levels.size()) - 1; }
    int basis_index(int level, const std::vector<int>& support) const;
};

// Preimage of an interval under a monotone map, decomposed into connected
// components (one interval class each, coefficient 1). Audits convexity of
// every component and, for simplicial E-rule sources, connectivity of the
// whole preimage.
VirtualClass pullback_class(const Interval& q, const ObjectMap& f);

IntegerMatrix coboundary_matrix(const Poset& base, Variant variant, int n,
                                uint64_t cap = kDefaultIntervalCap,
                                int threads = 1);

CochainComplex build_complex(const Poset& base, Variant variant, int max_dim,
                             BasisMode mode = BasisMode::Intervals,
                             uint64_t cap = kDefaultIntervalCap,
                             int threads = 1);

// Singleton subcomplex (weak-chain G-rule variant only): bases are the
// non-constant chains; the reduced form keeps strict chains only.
CochainComplex singleton_complex(const Poset& base, int max_dim,
                                 bool reduced = false);

// Simplicial cochain complex of the nerve on strict-chain bases.
CochainComplex nerve_complex(const Poset& base, int max_dim);

// Identity-on-strict-chains map from the reduced singleton complex into the
// nerve complex, one matrix per level >= 1, plus the cochain-map certificate.
struct NerveComparison {
    CochainComplex reduced;
    CochainComplex nerve;
    std::vector<IntegerMatrix> maps;  // maps[n] : reduced C^n -> nerve C^n
    bool is_cochain_map = false;
};

NerveComparison nerve_comparison(const Poset& base, int max_dim);

// Cup product of classes at levels p and q, landing at level p + q (which
// must be materialized in c).
VirtualClass cup(const CochainComplex& c, const VirtualClass& a,
                 const VirtualClass& b);

// Two-sided unit: the sum of the whole-component intervals at level 0.
VirtualClass cup_unit(const CochainComplex& c);

// For a level-0 class: pair (a <= b) -> rank of the induced map, which for
// interval classes counts supports containing both endpoints.
std::map<std::pair<int, int>, long long> rank_invariant(
    const CochainComplex& c, const VirtualClass& x);

enum class ComponentRule { Line, Square };

// Connected components of the level-1 poset under the G-rule (Line) or the
// E-rule (Square); a partition of the strict 1-chains.
std::vector<std::vector<Chain>> morphism_components(const Poset& base,
                                                    ComponentRule rule);

}  // namespace repcoh
