#pragma once

#include <string>
#include <vector>

#include "repcoh/poset.hpp"

namespace repcoh {

// The four level-category families. Tilde variants are simplicial (weak
// chains, degeneracies exist); check variants are semi-simplicial (strict
// chains only).
enum class Variant { TildeE, TildeG, CheckE, CheckG };

inline bool is_simplicial(Variant v) {
    return v == Variant::TildeE || v == Variant::TildeG;
}
inline bool is_e_rule(Variant v) {
    return v == Variant::TildeE || v == Variant::CheckE;
}

std::string variant_name(Variant v);
bool parse_variant(const std::string& token, Variant& out);

// The level-n category of a variant over a finite poset base: a finite poset
// whose elements are chains.
//   E-rule: u <= v iff u_i <= v_i in base for every i.
//   G-rule: u <= v iff u = v or last(u) <= first(v) in base.
struct LevelPoset {
    Variant variant;
    int level = 0;
    std::vector<Chain> objects;
    Poset order;  // element i of `order` is objects[i]

    int object_index(const Chain& c) const;  // -1 if absent
};

LevelPoset level_poset(const Poset& base, Variant variant, int n);

// Face deletes vertex i (relations compose automatically in a poset);
// degeneracy duplicates vertex i.
Chain face(const Chain& c, int i);
Chain degeneracy(const Chain& c, int i);

struct MapKind {
    enum Tag { Face, Degeneracy, Front, Back } tag;
    int index;
};

// A monotone total map between level posets (all structure maps are
// functors; monotonicity is auditable via audit_monotone).
struct ObjectMap {
    const LevelPoset* source = nullptr;
    const LevelPoset* target = nullptr;
    std::vector<int> map;  // source object index -> target object index

    bool audit_monotone() const;
};

// Face i: level n+1 -> n. Degeneracy i: n -> n+1 (simplicial variants only).
// Front p / Back q: n -> p, n -> q keep the first p+1 / last q+1 vertices.
// `source` and `target` must be the appropriate materialized level posets.
ObjectMap structure_map(const LevelPoset& source, const LevelPoset& target,
                        MapKind kind);

// Order-rule audit used by property tests: antisymmetry and transitivity of
// the constructed relation (the Poset constructor already guarantees these;
// this re-derives the relation from the rule and cross-checks).
bool audit_level_order(const Poset& base, const LevelPoset& lp);

}  // namespace repcoh
