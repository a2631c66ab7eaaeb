#include "repcoh/complex.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace repcoh {

void VirtualClass::add(const std::vector<int>& support, long long c) {
    if (c == 0) return;
    auto it = coeffs.find(support);
    if (it == coeffs.end()) {
        coeffs.emplace(support, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

std::string basis_mode_name(BasisMode m) {
    switch (m) {
        case BasisMode::Intervals: return "intervals";
        case BasisMode::Singletons: return "singletons";
        case BasisMode::SingletonsReduced: return "singletons_reduced";
        case BasisMode::Nerve: return "nerve";
    }
    return "";
}

bool parse_basis_mode(const std::string& token, BasisMode& out) {
    if (token == "intervals") out = BasisMode::Intervals;
    else if (token == "singletons") out = BasisMode::Singletons;
    else if (token == "singletons_reduced") out = BasisMode::SingletonsReduced;
    else if (token == "nerve") out = BasisMode::Nerve;
    else return false;
    return true;
}

namespace {

// Interval basis order: support size first, then lexicographic support.
bool basis_less(const Interval& a, const Interval& b) {
    if (a.support.size() != b.support.size())
        return a.support.size() < b.support.size();
    return a.support < b.support;
}

bool basis_less_support(const Interval& a, const std::vector<int>& s) {
    if (a.support.size() != s.size()) return a.support.size() < s.size();
    return a.support < s;
}

}  // namespace

int CochainComplex::basis_index(int level, const std::vector<int>& support) const {
    const auto& b = bases[level];
    auto it = std::lower_bound(b.begin(), b.end(), support, basis_less_support);
    if (it == b.end() || it->support != support) return -1;
    return int(it - b.begin());
}

VirtualClass pullback_class(const Interval& q, const ObjectMap& f) {
    const LevelPoset& src = *f.source;
    const LevelPoset& tgt = *f.target;

    Bitset in_q(tgt.objects.size());
    for (int x : q.support) in_q.set(x);

    Bitset pre(src.objects.size());
    for (size_t x = 0; x < f.map.size(); ++x)
        if (in_q.test(f.map[x])) pre.set(int(x));

    VirtualClass out;
    out.level = src.level;
    if (!pre.any()) return out;

    std::vector<Bitset> comps = connected_components(src.order, pre);
    if (src.variant == Variant::TildeE && tgt.variant == Variant::TildeE &&
        src.level == tgt.level + 1 && comps.size() > 1)
        throw ConvexityViolationError(
            "face-map preimage split in a simplicial E-rule level");
    for (const Bitset& comp : comps) {
        if (!is_convex_in(src.order, comp))
            throw ConvexityViolationError("non-convex pullback component");
        out.add(comp.to_vector(), 1);
    }
    return out;
}

namespace {

struct LevelBasis {
    std::vector<Interval> intervals;
    // object index -> basis index, for the singleton-style modes where every
    // basis element is a single object
    std::vector<int> singleton_of;
};

LevelBasis make_basis(const LevelPoset& lp, BasisMode mode, uint64_t cap) {
    LevelBasis out;
    if (mode == BasisMode::Intervals) {
        out.intervals = enumerate_intervals(lp.order, cap);
        std::sort(out.intervals.begin(), out.intervals.end(), basis_less);
        return out;
    }
    out.singleton_of.assign(lp.objects.size(), -1);
    for (size_t i = 0; i < lp.objects.size(); ++i) {
        const Chain& c = lp.objects[i];
        bool keep = false;
        switch (mode) {
            case BasisMode::Singletons: keep = !c.is_constant(); break;
            case BasisMode::SingletonsReduced: keep = !c.is_constant() && c.is_strict(); break;
            case BasisMode::Nerve: keep = true; break;
            case BasisMode::Intervals: break;
        }
        if (keep) {
            out.singleton_of[i] = int(out.intervals.size());
            out.intervals.push_back(Interval{{int(i)}});
        }
    }
    return out;
}

// d[n] column for one interval: alternating sum of face pullbacks.
void interval_column(const CochainComplex& c, int n,
                     const std::vector<ObjectMap>& faces, int col,
                     std::vector<std::tuple<int, int, long long>>& out) {
    const Interval& q = c.bases[n][col];
    long long sign = 1;
    for (const ObjectMap& f : faces) {
        VirtualClass vc = pullback_class(q, f);
        for (const auto& [supp, coef] : vc.coeffs) {
            int row = c.basis_index(n + 1, supp);
            if (row < 0)
                throw ConvexityViolationError("pullback component missing from basis");
            out.emplace_back(row, col, sign * coef);
        }
        sign = -sign;
    }
}

IntegerMatrix build_d(const CochainComplex& c, const LevelBasis& src,
                      const LevelBasis& dst, int n, int threads) {
    const LevelPoset& hi = c.levels[n + 1];
    const LevelPoset& lo = c.levels[n];
    std::vector<ObjectMap> faces;
    for (int i = 0; i <= n + 1; ++i)
        faces.push_back(structure_map(hi, lo, MapKind{MapKind::Face, i}));

    IntegerMatrix d(int(dst.intervals.size()), int(src.intervals.size()));

    if (c.mode == BasisMode::Nerve) {
        for (size_t y = 0; y < hi.objects.size(); ++y) {
            long long sign = 1;
            for (const ObjectMap& f : faces) {
                d.add(dst.singleton_of[y], src.singleton_of[f.map[y]],
                      mpz_class((long)sign));
                sign = -sign;
            }
        }
        return d;
    }

    if (c.mode == BasisMode::Singletons || c.mode == BasisMode::SingletonsReduced) {
        for (size_t col = 0; col < src.intervals.size(); ++col) {
            const Interval& q = src.intervals[col];
            long long sign = 1;
            for (const ObjectMap& f : faces) {
                VirtualClass vc = pullback_class(q, f);
                for (const auto& [supp, coef] : vc.coeffs) {
                    // cofaces of non-constant singletons stay singleton and
                    // non-constant; anything else is a bug upstream
                    if (supp.size() != 1 || hi.objects[supp[0]].is_constant())
                        throw ConvexityViolationError(
                            "singleton coface left the singleton span");
                    int row = dst.singleton_of[supp[0]];
                    if (row >= 0) d.add(row, int(col), mpz_class(long(sign * coef)));
                    // row < 0 in reduced mode: projection kills weak chains
                }
                sign = -sign;
            }
        }
        return d;
    }

    // interval mode: columns are independent
    int cols = int(src.intervals.size());
    if (threads <= 1 || cols < 64) {
        std::vector<std::tuple<int, int, long long>> acc;
        for (int col = 0; col < cols; ++col) interval_column(c, n, faces, col, acc);
        for (auto& [r, cc, v] : acc) d.add(r, cc, mpz_class(long(v)));
        return d;
    }

    std::vector<std::vector<std::tuple<int, int, long long>>> per_col(cols);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (int col = next++; col < cols; col = next++)
                    interval_column(c, n, faces, col, per_col[col]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    for (const auto& colv : per_col)
        for (const auto& [r, cc, v] : colv) d.add(r, cc, mpz_class(long(v)));
    return d;
}

CochainComplex build_generic(const Poset& base, Variant variant, int max_dim,
                             BasisMode mode, uint64_t cap, int threads) {
    if (max_dim < 0) throw IndexOutOfRangeError("max_dim must be >= 0");
    CochainComplex c;
    c.base = base;
    c.variant = variant;
    c.mode = mode;
    c.max_dim = max_dim;

    int top = max_dim + 1;
    std::vector<LevelBasis> lb;
    for (int n = 0; n <= top; ++n) {
        c.levels.push_back(level_poset(base, variant, n));
        lb.push_back(make_basis(c.levels.back(), mode, cap));
        c.bases.push_back(lb.back().intervals);
    }
    for (int n = 0; n < top; ++n) c.d.push_back(build_d(c, lb[n], lb[n + 1], n, threads));
    return c;
}

}  // namespace

CochainComplex build_complex(const Poset& base, Variant variant, int max_dim,
                             BasisMode mode, uint64_t cap, int threads) {
    if (mode == BasisMode::Nerve) return nerve_complex(base, max_dim);
    if (mode != BasisMode::Intervals && variant != Variant::TildeG)
        throw BadParamsError("singleton bases exist for the tildeG variant only");
    return build_generic(base, variant, max_dim, mode, cap, threads);
}

IntegerMatrix coboundary_matrix(const Poset& base, Variant variant, int n,
                                uint64_t cap, int threads) {
    return build_generic(base, variant, n, BasisMode::Intervals, cap, threads)
        .d[n];
}

CochainComplex singleton_complex(const Poset& base, int max_dim, bool reduced) {
    return build_generic(base, Variant::TildeG, max_dim,
                         reduced ? BasisMode::SingletonsReduced
                                 : BasisMode::Singletons,
                         kDefaultIntervalCap, 1);
}

CochainComplex nerve_complex(const Poset& base, int max_dim) {
    return build_generic(base, Variant::CheckE, max_dim, BasisMode::Nerve,
                         kDefaultIntervalCap, 1);
}

NerveComparison nerve_comparison(const Poset& base, int max_dim) {
    NerveComparison out;
    out.reduced = singleton_complex(base, max_dim, true);
    out.nerve = nerve_complex(base, max_dim);

    for (int n = 0; n <= out.reduced.top(); ++n) {
        const auto& rb = out.reduced.bases[n];
        IntegerMatrix m(int(out.nerve.bases[n].size()), int(rb.size()));
        for (size_t j = 0; j < rb.size(); ++j) {
            const Chain& ch = out.reduced.levels[n].objects[rb[j].support[0]];
            int obj = out.nerve.levels[n].object_index(ch);
            if (obj < 0 || out.nerve.basis_index(n, {obj}) < 0)
                throw IndexOutOfRangeError("strict chain missing from nerve basis");
            m.set(out.nerve.basis_index(n, {obj}), int(j), 1);
        }
        out.maps.push_back(std::move(m));
    }

    out.is_cochain_map = true;
    for (int n = 1; n < out.reduced.top(); ++n)
        if (!(out.maps[n + 1].multiply(out.reduced.d[n]) ==
              out.nerve.d[n].multiply(out.maps[n])))
            out.is_cochain_map = false;
    return out;
}

VirtualClass cup(const CochainComplex& c, const VirtualClass& a,
                 const VirtualClass& b) {
    int p = a.level, q = b.level;
    if (p + q > c.top())
        throw TruncationExceededError("cup product lands beyond materialized levels");
    const LevelPoset& lvl = c.levels[p + q];
    ObjectMap front = structure_map(lvl, c.levels[p], MapKind{MapKind::Front, p});
    ObjectMap back = structure_map(lvl, c.levels[q], MapKind{MapKind::Back, q});

    VirtualClass out;
    out.level = p + q;
    for (const auto& [sa, ca] : a.coeffs) {
        Bitset in_a(c.levels[p].objects.size());
        for (int x : sa) in_a.set(x);
        for (const auto& [sb, cb] : b.coeffs) {
            Bitset in_b(c.levels[q].objects.size());
            for (int x : sb) in_b.set(x);
            Bitset meet(lvl.objects.size());
            for (size_t x = 0; x < lvl.objects.size(); ++x)
                if (in_a.test(front.map[x]) && in_b.test(back.map[x]))
                    meet.set(int(x));
            if (!meet.any()) continue;
            for (const Bitset& comp : connected_components(lvl.order, meet)) {
                if (!is_convex_in(lvl.order, comp))
                    throw ConvexityViolationError("non-convex cup component");
                out.add(comp.to_vector(), ca * cb);
            }
        }
    }
    return out;
}

VirtualClass cup_unit(const CochainComplex& c) {
    VirtualClass out;
    out.level = 0;
    std::vector<int> all(c.levels[0].objects.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    for (const auto& comp : connected_components(c.levels[0].order, all))
        out.add(comp, 1);
    return out;
}

std::map<std::pair<int, int>, long long> rank_invariant(
    const CochainComplex& c, const VirtualClass& x) {
    if (x.level != 0) throw IndexOutOfRangeError("rank invariant needs a level-0 class");
    // level-0 objects are the base elements, in base index order
    int n = c.levels[0].order.size();
    std::map<std::pair<int, int>, long long> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!c.levels[0].order.leq(a, b)) continue;
            long long total = 0;
            for (const auto& [supp, coef] : x.coeffs) {
                bool has_a = std::binary_search(supp.begin(), supp.end(), a);
                bool has_b = std::binary_search(supp.begin(), supp.end(), b);
                if (has_a && has_b) total += coef;
            }
            out[{a, b}] = total;
        }
    return out;
}

std::vector<std::vector<Chain>> morphism_components(const Poset& base,
                                                    ComponentRule rule) {
    Variant v = rule == ComponentRule::Line ? Variant::CheckG : Variant::CheckE;
    LevelPoset lp = level_poset(base, v, 1);
    std::vector<int> all(lp.objects.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    std::vector<std::vector<Chain>> out;
    for (const auto& comp : connected_components(lp.order, all)) {
        std::vector<Chain> chains;
        for (int i : comp) chains.push_back(lp.objects[i]);
        out.push_back(std::move(chains));
    }
    return out;
}

}  // namespace repcoh
