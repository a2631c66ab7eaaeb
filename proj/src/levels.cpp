#include "repcoh/levels.hpp"

#include <algorithm>
#include <map>

namespace repcoh {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::TildeE: return "tildeE";
        case Variant::TildeG: return "tildeG";
        case Variant::CheckE: return "E";
        case Variant::CheckG: return "G";
    }
    return "?";
}

bool parse_variant(const std::string& token, Variant& out) {
    if (token == "tildeE" || token == "TildeE") out = Variant::TildeE;
    else if (token == "tildeG" || token == "TildeG") out = Variant::TildeG;
    else if (token == "E" || token == "checkE" || token == "CheckE") out = Variant::CheckE;
    else if (token == "G" || token == "checkG" || token == "CheckG") out = Variant::CheckG;
    else return false;
    return true;
}

int LevelPoset::object_index(const Chain& c) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), c);
    if (it == objects.end() || !(*it == c)) return -1;
    return int(it - objects.begin());
}

namespace {

bool level_leq(const Poset& base, Variant variant, const Chain& u, const Chain& v) {
    if (is_e_rule(variant)) {
        for (size_t i = 0; i < u.vertices.size(); ++i)
            if (!base.leq(u.vertices[i], v.vertices[i])) return false;
        return true;
    }
    // G-rule. For constant chains the explicit u == v clause and the
    // last(u) <= first(v) clause agree; for non-constant chains only the
    // latter produces non-identity relations.
    return u == v || base.leq(u.last(), v.first());
}

std::string chain_label(const Poset& base, const Chain& c) {
    std::string s;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) s += '.';
        s += base.name(c.vertices[i]);
    }
    return s;
}

}  // namespace

LevelPoset level_poset(const Poset& base, Variant variant, int n) {
    if (n < 0) throw IndexOutOfRangeError("level must be non-negative");
    LevelPoset lp;
    lp.variant = variant;
    lp.level = n;
    lp.objects = enumerate_chains(base, n, is_simplicial(variant));

    const int m = int(lp.objects.size());
    std::vector<std::string> names(m);
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < m; ++i) names[i] = chain_label(base, lp.objects[i]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && level_leq(base, variant, lp.objects[i], lp.objects[j]))
                rels.emplace_back(i, j);
    lp.order = Poset(std::move(names), rels);
    return lp;
}

Chain face(const Chain& c, int i) {
    if (c.length() < 1) throw IndexOutOfRangeError("face of a 0-chain");
    if (i < 0 || i > c.length()) throw IndexOutOfRangeError("face index");
    Chain out = c;
    out.vertices.erase(out.vertices.begin() + i);
    return out;
}

Chain degeneracy(const Chain& c, int i) {
    if (i < 0 || i > c.length()) throw IndexOutOfRangeError("degeneracy index");
    Chain out = c;
    out.vertices.insert(out.vertices.begin() + i, c.vertices[i]);
    return out;
}

bool ObjectMap::audit_monotone() const {
    for (auto [a, b] : source->order.covers())
        if (!target->order.leq(map[a], map[b])) return false;
    return true;
}

ObjectMap structure_map(const LevelPoset& source, const LevelPoset& target,
                        MapKind kind) {
    const int n = source.level;
    switch (kind.tag) {
        case MapKind::Face:
            if (target.level != n - 1)
                throw IndexOutOfRangeError("face map needs target level n-1");
            if (kind.index < 0 || kind.index > n)
                throw IndexOutOfRangeError("face index");
            break;
        case MapKind::Degeneracy:
            if (!is_simplicial(source.variant))
                throw DegeneracyOnSemiSimplicialError(
                    "degeneracy on a check variant");
            if (target.level != n + 1)
                throw IndexOutOfRangeError("degeneracy map needs target level n+1");
            if (kind.index < 0 || kind.index > n)
                throw IndexOutOfRangeError("degeneracy index");
            break;
        case MapKind::Front:
        case MapKind::Back:
            if (kind.index < 0 || kind.index > n || target.level != kind.index)
                throw IndexOutOfRangeError("front/back map needs target level p<=n");
            break;
    }

    ObjectMap om;
    om.source = &source;
    om.target = &target;
    om.map.resize(source.objects.size());
    for (size_t i = 0; i < source.objects.size(); ++i) {
        const Chain& c = source.objects[i];
        Chain image;
        switch (kind.tag) {
            case MapKind::Face:
                image = face(c, kind.index);
                break;
            case MapKind::Degeneracy:
                image = degeneracy(c, kind.index);
                break;
            case MapKind::Front:
                image.vertices.assign(c.vertices.begin(),
                                      c.vertices.begin() + kind.index + 1);
                break;
            case MapKind::Back:
                image.vertices.assign(c.vertices.end() - kind.index - 1,
                                      c.vertices.end());
                break;
        }
        int t = target.object_index(image);
        if (t < 0) throw IndexOutOfRangeError("structure map image not in target");
        om.map[i] = t;
    }
    return om;
}

bool audit_level_order(const Poset& base, const LevelPoset& lp) {
    const auto& obj = lp.objects;
    const int m = int(obj.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            bool rule = level_leq(base, lp.variant, obj[i], obj[j]);
            if (rule != lp.order.leq(i, j)) return false;  // closure added nothing
            if (i != j && rule && level_leq(base, lp.variant, obj[j], obj[i]))
                return false;  // antisymmetry
            for (int k = 0; rule && k < m; ++k)
                if (level_leq(base, lp.variant, obj[j], obj[k]) &&
                    !level_leq(base, lp.variant, obj[i], obj[k]))
                    return false;  // transitivity
        }
    return true;
}

}  // namespace repcoh
