// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "repcoh/cohomology.hpp"
#include "repcoh/families.hpp"
#include "repcoh/run.hpp"

using namespace repcoh;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& note = "") {
    std::cout << "criterion " << criterion << ": " << (ok ? "pass" : "FAIL")
              << " - " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

bool groups_are(const std::vector<CohomologyGroup>& got,
                std::vector<long long> ranks) {
    if (got.size() != ranks.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (got[i].free_rank != ranks[i] || !got[i].torsion.empty()) return false;
    return true;
}

std::vector<CohomologyGroup> groups_of(const Poset& base, Variant v, int max_dim) {
    return cohomology_all(build_complex(base, v, max_dim));
}

bool check_chain_table(Variant v, const std::vector<std::vector<long long>>& table) {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        std::vector<long long> want = table[n - 1];
        want.resize(n + 1, 0);  // zeros through the top degree
        ok = ok && groups_are(groups_of(family("chain", {n}), v, n), want);
    }
    return ok;
}

std::vector<Poset> suite_posets() {
    return {family("chain", {1}),     family("chain", {2}),
            family("chain", {3}),     family("dandelion", {2}),
            family("dandelion", {3}), family("corolla", {2}),
            family("corolla", {3}),   family("pseudo_circle", {}),
            family("antichain", {2}), family("antichain", {3}),
            family("tree", {0, 1, 1, 2, 1, 3, 0, 4})};
}

const std::vector<Variant> kAll = {Variant::TildeE, Variant::TildeG,
                                   Variant::CheckE, Variant::CheckG};

VirtualClass from_coords(const CochainComplex& c, int level,
                         const std::vector<mpz_class>& v) {
    VirtualClass out;
    out.level = level;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.add(c.bases[level][j].support, v[j].get_si());
    return out;
}

std::vector<mpz_class> coords(const CochainComplex& c, const VirtualClass& vc) {
    std::vector<mpz_class> out(c.bases[vc.level].size(), 0);
    for (const auto& [supp, coef] : vc.coeffs)
        out[c.basis_index(vc.level, supp)] = mpz_class(long(coef));
    return out;
}

VirtualClass apply_d(const CochainComplex& c, const VirtualClass& vc) {
    return from_coords(c, vc.level + 1, c.d[vc.level].apply(coords(c, vc)));
}

long property_suite_violations() {
    long bad = 0;

    // order and structure-map audits, levels <= 4, every variant
    for (const Poset& base : suite_posets())
        for (Variant v : kAll) {
            std::vector<LevelPoset> lv;
            for (int n = 0; n <= 4; ++n) lv.push_back(level_poset(base, v, n));
            for (int n = 0; n <= 4; ++n)
                if (!audit_level_order(base, lv[n])) ++bad;
            for (int n = 0; n <= 3; ++n) {
                for (int i = 0; i <= n + 1; ++i)
                    if (!structure_map(lv[n + 1], lv[n], {MapKind::Face, i})
                             .audit_monotone())
                        ++bad;
                for (int p = 0; p <= n; ++p) {
                    if (!structure_map(lv[n], lv[p], {MapKind::Front, p})
                             .audit_monotone())
                        ++bad;
                    if (!structure_map(lv[n], lv[p], {MapKind::Back, p})
                             .audit_monotone())
                        ++bad;
                }
                if (is_simplicial(v))
                    for (int i = 0; i <= n; ++i) {
                        ObjectMap s =
                            structure_map(lv[n], lv[n + 1], {MapKind::Degeneracy, i});
                        ObjectMap f =
                            structure_map(lv[n + 1], lv[n], {MapKind::Face, i});
                        if (!s.audit_monotone()) ++bad;
                        for (size_t x = 0; x < s.map.size(); ++x)
                            if (f.map[s.map[x]] != int(x)) ++bad;
                    }
            }
        }

    // interval complexes: d.d = 0 plus the inline convexity/connectivity
    // audits inside every pullback; check variants everywhere, the weak-chain
    // variants on the small bases (the larger ones are covered separately)
    auto dd_zero = [&](const CochainComplex& c) {
        for (int n = 0; n + 1 < int(c.d.size()); ++n)
            if (c.d[n + 1].multiply(c.d[n]).nnz() != 0) ++bad;
    };
    try {
        for (const Poset& base : suite_posets()) {
            for (Variant v : {Variant::CheckE, Variant::CheckG})
                dd_zero(build_complex(base, v, std::min(composition_length(base), 3)));
            if (base.size() <= 4 && composition_length(base) <= 2)
                for (Variant v : {Variant::TildeE, Variant::TildeG}) {
                    // weak-chain G-rule interval counts can pass the cap by
                    // level 4 even on four elements; drop one level if so
                    try {
                        dd_zero(build_complex(base, v, 3));
                    } catch (const IntervalExplosionError&) {
                        dd_zero(build_complex(base, v, 2));
                    }
                }
            dd_zero(singleton_complex(base, 3));
            dd_zero(singleton_complex(base, 3, true));
            dd_zero(nerve_complex(base, 3));
            if (!nerve_comparison(base, 3).is_cochain_map) ++bad;
        }
    } catch (const std::logic_error&) {
        ++bad;  // a pullback audit tripped
    }

    // cup product: unit, Leibniz, associativity
    std::mt19937 rng(2026);
    {
        CochainComplex c = build_complex(family("chain", {3}), Variant::CheckG, 2);
        VirtualClass unit = cup_unit(c);
        for (int q = 0; q <= 3; ++q)
            for (const Interval& iv : c.bases[q]) {
                VirtualClass x;
                x.level = q;
                x.add(iv.support, 1);
                if (!(cup(c, unit, x) == x) || !(cup(c, x, unit) == x)) ++bad;
            }
    }
    std::vector<std::pair<Poset, Variant>> setups = {
        {family("chain", {3}), Variant::CheckG},
        {family("chain", {4}), Variant::CheckE},
        {family("dandelion", {3}), Variant::CheckG},
    };
    for (const auto& [base, v] : setups) {
        CochainComplex c = build_complex(base, v, 2);
        auto random_class = [&](int level) {
            const auto& b = c.bases[level];
            VirtualClass x;
            x.level = level;
            x.add(b[rng() % b.size()].support, 1 + int(rng() % 2));
            x.add(b[rng() % b.size()].support, -1);
            return x;
        };
        for (int t = 0; t < 80; ++t) {
            int p = int(rng() % 2), q = int(rng() % 2);
            VirtualClass a = random_class(p), b = random_class(q);
            VirtualClass lhs = apply_d(c, cup(c, a, b));
            VirtualClass rhs = cup(c, apply_d(c, a), b);
            VirtualClass da_b = cup(c, a, apply_d(c, b));
            int sign = p % 2 == 0 ? 1 : -1;
            for (const auto& [supp, coef] : da_b.coeffs) rhs.add(supp, sign * coef);
            if (!(lhs == rhs)) ++bad;
        }
        for (int t = 0; t < 30; ++t) {
            int p = int(rng() % 2), q = int(rng() % 2), r = int(rng() % 2);
            VirtualClass a = random_class(p), b = random_class(q),
                         cc = random_class(r);
            if (!(cup(c, cup(c, a, b), cc) == cup(c, a, cup(c, b, cc)))) ++bad;
        }
    }

    // rank constancy of 0-cocycles on line components
    for (const Poset& base : suite_posets()) {
        CochainComplex c = build_complex(base, Variant::CheckG, 0);
        auto comps = morphism_components(base, ComponentRule::Line);
        for (const auto& vec : integer_kernel_basis(c.d[0])) {
            auto rk = rank_invariant(c, from_coords(c, 0, vec));
            for (const auto& comp : comps) {
                std::set<long long> strict_vals, ident_vals;
                for (const Chain& ch : comp) {
                    strict_vals.insert(rk[{ch.first(), ch.last()}]);
                    ident_vals.insert(rk[{ch.first(), ch.first()}]);
                    ident_vals.insert(rk[{ch.last(), ch.last()}]);
                }
                if (strict_vals.size() > 1 || ident_vals.size() > 1) ++bad;
            }
        }
    }

    return bad;
}

}  // namespace

int main() {
    report(1, check_chain_table(Variant::CheckG,
                                {{2}, {3}, {3, 6}, {3, 78}, {3, 841, 44}}),
           "strict-chain G-rule cohomology over [1]..[5]");

    report(2, check_chain_table(Variant::CheckE,
                                {{2}, {2, 1}, {2, 7}, {2, 28, 27}, {2, 103, 686, 75}}),
           "strict-chain E-rule cohomology over [1]..[5]");

    {
        bool ok = true;
        std::vector<long long> h1 = {6, 21, 68, 215, 670};
        for (int n = 2; n <= 6; ++n) {
            auto g = groups_of(family("dandelion", {n}), Variant::CheckE, 1);
            ok = ok && groups_are(g, {1LL << n, h1[n - 2]});
        }
        for (int n = 2; n <= 8; ++n) {
            auto g = groups_of(family("dandelion", {n}), Variant::CheckG, 0);
            ok = ok && groups_are(g, {(1LL << n) + 1});
        }
        report(3, ok, "dandelion degree-0 and degree-1 tables");
    }

    {
        bool ok = true;
        for (int n = 2; n <= 5; ++n) {
            CochainComplex c = singleton_complex(family("chain", {n}), 1);
            long long kernel =
                c.d[1].cols() - (long long)smith_normal_form(c.d[1]).size();
            ok = ok && kernel == n;
        }
        report(4, ok, "singleton d1 kernel rank over [n] equals n");
    }

    {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            auto g = cohomology_all(singleton_complex(family("chain", {n}), 3, true));
            for (int i = 2; i <= 3; ++i)
                ok = ok && g[i].free_rank == 0 && g[i].torsion.empty();
        }
        report(5, ok, "reduced singleton complex vanishes in degrees 2..3");
    }

    {
        bool ok = true;
        std::vector<Poset> bases = {family("chain", {1}), family("chain", {2}),
                                    family("chain", {3}), family("dandelion", {2})};
        for (const Poset& base : bases)
            ok = ok && groups_are(groups_of(base, Variant::TildeE, 3), {1, 0, 0, 0});
        report(6, ok, "weak-chain E-rule acyclicity through degree 3",
               ok ? "expected property" : "FLAGGED: review before release");
    }

    {
        Poset pc = family("pseudo_circle", {});
        auto cg = groups_of(pc, Variant::CheckG, 1);
        auto nv = cohomology_all(nerve_complex(pc, 1));
        bool ok = cg[1] == CohomologyGroup{1, 1, {}} &&
                  nv[1] == CohomologyGroup{1, 1, {}};
        for (int n = 1; n <= 4 && ok; ++n) {
            Poset base = family("chain", {n});
            auto g = groups_of(base, Variant::CheckG, n);
            auto h = cohomology_all(nerve_complex(base, n));
            for (int i = n / 2 + 1; i <= n; ++i)
                ok = ok && g[i] == CohomologyGroup{i, 0, {}} && h[i] == g[i];
        }
        for (int n = 2; n <= 4 && ok; ++n) {
            Poset base = family("dandelion", {n});
            auto g = groups_of(base, Variant::CheckG, 2);
            auto h = cohomology_all(nerve_complex(base, 2));
            ok = ok && g[2] == CohomologyGroup{2, 0, {}} && h[2] == g[2];
        }
        report(7, ok, "stable-range agreement with nerve cohomology");
    }

    {
        long bad = property_suite_violations();
        report(8, bad == 0, "property suites",
               bad == 0 ? "" : std::to_string(bad) + " violations");
    }

    {
        RunConfig cfg;
        cfg.variant = Variant::CheckG;
        cfg.threads = 2;
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            cfg.base = family("chain", {n});
            ok = ok && run(cfg).result.dump() == run(cfg).result.dump();
        }
        report(9, ok, "byte-identical result objects across reruns");
    }

    return failures == 0 ? 0 : 1;
}
