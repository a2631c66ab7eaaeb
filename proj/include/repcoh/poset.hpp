#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repcoh/bitset.hpp"
#include "repcoh/errors.hpp"

namespace repcoh {

// A weakly or strictly increasing tuple of poset elements (an n-simplex of
// the nerve). length() counts steps, so a single vertex is a 0-chain.
struct Chain {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()) - 1; }
    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }

    bool is_strict() const {
        for (size_t i = 1; i < vertices.size(); ++i)
            if (vertices[i] == vertices[i - 1]) return false;
        return true;
    }
    // Constant chains (a,a,...,a) carry no strict step at all.
    bool is_constant() const {
        for (size_t i = 1; i < vertices.size(); ++i)
            if (vertices[i] != vertices[i - 1]) return false;
        return true;
    }

    auto operator<=>(const Chain&) const = default;
};

// Finite poset: element names, cover relations, and the full order relation
// as per-element reachability bitsets (O(1) leq queries).
class Poset {
  public:
    Poset() = default;

    // Builds the reflexive-transitive closure of the declared relations and
    // recomputes covers by transitive reduction. Relations may be any subset
    // of the intended order. Throws CyclicInputError on a directed cycle
    // among distinct elements.
    Poset(std::vector<std::string> names,
          const std::vector<std::pair<int, int>>& relations);

    int size() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    bool leq(int a, int b) const { return up_[a].test(b); }
    bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    // up(a) = {b : a <= b}, down(a) = {b : b <= a}; both include a.
    const Bitset& up(int a) const { return up_[a]; }
    const Bitset& down(int a) const { return down_[a]; }

    // {z : a <= z <= b}, including the endpoints.
    Bitset between(int a, int b) const { return up_[a] & down_[b]; }

    // Transitive reduction, lexicographically sorted pairs (a, b) with b
    // covering a.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Neighbors in the Hasse diagram viewed as an undirected graph.
    const Bitset& hasse_adjacent(int a) const { return hasse_adj_[a]; }

    bool operator==(const Poset& o) const {
        return names_ == o.names_ && covers_ == o.covers_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<Bitset> up_, down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Bitset> hasse_adj_;
};

// Connected convex full subposet of an ambient poset, held as a canonically
// sorted support. In a poset the object set determines the subcategory, so
// no morphism data is stored (see docs/intervals.md).
struct Interval {
    std::vector<int> support;

    bool contains(int x) const {
        for (int s : support)
            if (s == x) return true;
        return false;
    }
};

// Independent checker used both by enumeration audits and by tests.
bool is_connected_in(const Poset& p, const Bitset& subset);
bool is_convex_in(const Poset& p, const Bitset& subset);
inline bool is_interval_in(const Poset& p, const Bitset& s) {
    return s.any() && is_connected_in(p, s) && is_convex_in(p, s);
}

// --- poset-core operations ---

// Line-oriented grammar: `# comment`, `element NAME`, `rel A B`.
// Undeclared names are auto-declared in order of first appearance.
Poset parse_poset(const std::string& text);
std::string serialize_poset(const Poset& p);

// All (n+1)-tuples weakly (allow_repeats) or strictly increasing under leq,
// in lexicographic order of vertex indices.
std::vector<Chain> enumerate_chains(const Poset& p, int n, bool allow_repeats);

// Connected components of the comparability graph of the induced full
// subposet, in order of smallest member.
std::vector<std::vector<int>> connected_components(const Poset& p,
                                                   const std::vector<int>& subset);
std::vector<Bitset> connected_components(const Poset& p, const Bitset& subset);

inline constexpr uint64_t kDefaultIntervalCap = 5'000'000;

// Every nonempty connected convex full subposet exactly once, as sorted
// supports in lexicographic order. Throws IntervalExplosionError past cap.
std::vector<Interval> enumerate_intervals(const Poset& p,
                                          uint64_t cap = kDefaultIntervalCap);

// Length in cover steps of the longest cover-chain; 0 for an antichain.
int composition_length(const Poset& p);

}  // namespace repcoh
