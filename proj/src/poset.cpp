#include "repcoh/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace repcoh {

Poset::Poset(std::vector<std::string> names,
             const std::vector<std::pair<int, int>>& relations)
    : names_(std::move(names)) {
    const int m = int(names_.size());
    std::vector<std::vector<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (auto [a, b] : relations) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw IndexOutOfRangeError("relation endpoint out of range");
        if (a == b) continue;  // reflexive pairs are implicit
        succ[a].push_back(b);
        ++indeg[b];
    }

    // Kahn's algorithm: topological order, and cycle detection.
    std::vector<int> topo;
    topo.reserve(m);
    std::vector<int> indeg_work = indeg;
    std::queue<int> ready;
    for (int i = 0; i < m; ++i)
        if (indeg_work[i] == 0) ready.push(i);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        topo.push_back(v);
        for (int w : succ[v])
            if (--indeg_work[w] == 0) ready.push(w);
    }
    if (int(topo.size()) != m)
        throw CyclicInputError("directed cycle among declared relations");

    // Reachability closure: sweep in reverse topological order.
    up_.assign(m, Bitset(m));
    for (int i = m - 1; i >= 0; --i) {
        int v = topo[i];
        up_[v].set(v);
        for (int w : succ[v]) up_[v] |= up_[w];
    }
    down_.assign(m, Bitset(m));
    for (int a = 0; a < m; ++a)
        for (int b = up_[a].next(0); b >= 0; b = up_[a].next(b + 1))
            down_[b].set(a);

    // Transitive reduction: a covered pair has no two-step witness.
    hasse_adj_.assign(m, Bitset(m));
    for (int a = 0; a < m; ++a)
        for (int b = up_[a].next(0); b >= 0; b = up_[a].next(b + 1)) {
            if (a == b) continue;
            Bitset mid = between(a, b);
            mid.reset(a);
            mid.reset(b);
            if (!mid.any()) {
                covers_.emplace_back(a, b);
                hasse_adj_[a].set(b);
                hasse_adj_[b].set(a);
            }
        }
    std::sort(covers_.begin(), covers_.end());
}

bool is_connected_in(const Poset& p, const Bitset& subset) {
    int start = subset.next(0);
    if (start < 0) return false;
    Bitset seen(p.size());
    std::vector<int> stack{start};
    seen.set(start);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = subset.next(0); w >= 0; w = subset.next(w + 1)) {
            if (!seen.test(w) && p.comparable(v, w)) {
                seen.set(w);
                stack.push_back(w);
            }
        }
    }
    return seen == subset;
}

bool is_convex_in(const Poset& p, const Bitset& subset) {
    for (int a = subset.next(0); a >= 0; a = subset.next(a + 1))
        for (int b = subset.next(0); b >= 0; b = subset.next(b + 1)) {
            if (!p.leq(a, b)) continue;
            if (!p.between(a, b).is_subset_of(subset)) return false;
        }
    return true;
}

Poset parse_poset(const std::string& text) {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> relations;

    auto declare = [&](const std::string& n, bool explicit_decl, int line) {
        auto it = index.find(n);
        if (it != index.end()) {
            if (explicit_decl)
                throw DuplicateElementError("line " + std::to_string(line) +
                                            ": duplicate element '" + n + "'");
            return it->second;
        }
        index[n] = int(names.size());
        names.push_back(n);
        return int(names.size()) - 1;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "element") {
            std::string n;
            if (!(ls >> n)) throw SyntaxError(lineno, "element: missing name");
            std::string extra;
            if (ls >> extra) throw SyntaxError(lineno, "element: trailing tokens");
            declare(n, true, lineno);
        } else if (tok == "rel") {
            std::string a, b;
            if (!(ls >> a >> b)) throw SyntaxError(lineno, "rel: expected two names");
            std::string extra;
            if (ls >> extra) throw SyntaxError(lineno, "rel: trailing tokens");
            int ia = declare(a, false, lineno);  // left name declared first
            int ib = declare(b, false, lineno);
            relations.emplace_back(ia, ib);
        } else {
            throw SyntaxError(lineno, "unknown directive '" + tok + "'");
        }
    }
    return Poset(std::move(names), relations);
}

std::string serialize_poset(const Poset& p) {
    std::ostringstream out;
    for (const auto& n : p.names()) out << "element " << n << "\n";
    for (auto [a, b] : p.covers())
        out << "rel " << p.name(a) << " " << p.name(b) << "\n";
    return out.str();
}

namespace {

void extend_chain(const Poset& p, int target_len, bool allow_repeats,
                  std::vector<int>& cur, std::vector<Chain>& out) {
    if (int(cur.size()) == target_len + 1) {
        out.push_back(Chain{cur});
        return;
    }
    int last = cur.back();
    for (int x = 0; x < p.size(); ++x) {
        if (!p.leq(last, x)) continue;
        if (!allow_repeats && x == last) continue;
        cur.push_back(x);
        extend_chain(p, target_len, allow_repeats, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Chain> enumerate_chains(const Poset& p, int n, bool allow_repeats) {
    if (n < 0) throw IndexOutOfRangeError("chain length must be non-negative");
    std::vector<Chain> out;
    std::vector<int> cur;
    for (int x = 0; x < p.size(); ++x) {
        cur.assign(1, x);
        extend_chain(p, n, allow_repeats, cur, out);
    }
    return out;
}

std::vector<Bitset> connected_components(const Poset& p, const Bitset& subset) {
    std::vector<Bitset> comps;
    Bitset remaining = subset;
    for (int s = remaining.next(0); s >= 0; s = remaining.next(s + 1)) {
        Bitset comp(p.size());
        std::vector<int> stack{s};
        comp.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = remaining.next(0); w >= 0; w = remaining.next(w + 1)) {
                if (!comp.test(w) && p.comparable(v, w)) {
                    comp.set(w);
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(comp);
        remaining.subtract(comp);
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Poset& p,
                                                   const std::vector<int>& subset) {
    Bitset s(p.size());
    for (int x : subset) {
        if (x < 0 || x >= p.size())
            throw IndexOutOfRangeError("subset element out of range");
        s.set(x);
    }
    std::vector<std::vector<int>> out;
    for (const Bitset& c : connected_components(p, s)) out.push_back(c.to_vector());
    return out;
}

namespace {

// Convex closure of a connected set: repeatedly add all mediators between
// members. Mediators of elements of a convex superset stay inside it, and
// they connect to the set through cover chains, so closure preserves both
// properties.
void convex_close(const Poset& p, Bitset& s, std::vector<int> fresh) {
    while (!fresh.empty()) {
        int v = fresh.back();
        fresh.pop_back();
        for (int a = s.next(0); a >= 0; a = s.next(a + 1)) {
            if (a == v) continue;
            Bitset mid(p.size());
            if (p.leq(a, v))
                mid = p.between(a, v);
            else if (p.leq(v, a))
                mid = p.between(v, a);
            else
                continue;
            mid.subtract(s);
            for (int z = mid.next(0); z >= 0; z = mid.next(z + 1)) {
                s.set(z);
                fresh.push_back(z);
            }
        }
    }
}

}  // namespace

std::vector<Interval> enumerate_intervals(const Poset& p, uint64_t cap) {
    const int m = p.size();
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> queue;

    auto emit = [&](const Bitset& s) {
        if (seen.insert(s).second) {
            if (seen.size() > cap)
                throw IntervalExplosionError("interval count exceeds cap of " +
                                             std::to_string(cap));
            queue.push_back(s);
        }
    };

    for (int v = 0; v < m; ++v) {
        Bitset s(m);
        s.set(v);
        emit(s);
    }
    // Every interval is reachable from a singleton by repeatedly adding one
    // comparability neighbor and convex-closing inside the target.
    for (size_t head = 0; head < queue.size(); ++head) {
        Bitset s = queue[head];
        Bitset frontier(m);
        for (int v = s.next(0); v >= 0; v = s.next(v + 1))
            frontier |= p.hasse_adjacent(v);
        frontier.subtract(s);
        for (int u = frontier.next(0); u >= 0; u = frontier.next(u + 1)) {
            Bitset t = s;
            t.set(u);
            convex_close(p, t, {u});
            emit(t);
        }
    }

    std::vector<Interval> out;
    out.reserve(seen.size());
    for (const Bitset& s : seen) out.push_back(Interval{s.to_vector()});
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.support < b.support; });
    return out;
}

int composition_length(const Poset& p) {
    // Longest path in the cover DAG, via memoized DFS.
    std::vector<std::vector<int>> succ(p.size());
    for (auto [a, b] : p.covers()) succ[a].push_back(b);
    std::vector<int> memo(p.size(), -1);
    auto dfs = [&](auto&& self, int v) -> int {
        if (memo[v] >= 0) return memo[v];
        int best = 0;
        for (int w : succ[v]) best = std::max(best, 1 + self(self, w));
        return memo[v] = best;
    };
    int best = 0;
    for (int v = 0; v < p.size(); ++v) best = std::max(best, dfs(dfs, v));
    return best;
}

}  // namespace repcoh
