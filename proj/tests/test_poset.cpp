#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "repcoh/families.hpp"
#include "repcoh/poset.hpp"

using namespace repcoh;

namespace {

// Exhaustive oracle: every subset of a small poset, classified by the
// definition checkers directly.
std::set<std::vector<int>> intervals_by_brute_force(const Poset& p) {
    std::set<std::vector<int>> out;
    int n = p.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Bitset s(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.set(i);
        if (is_interval_in(p, s)) out.insert(s.to_vector());
    }
    return out;
}

}  // namespace

TEST_CASE("parse: auto-declaration, comments, round-trip") {
    Poset p = parse_poset("# a comment\nrel a b\nrel b c\nelement d\n");
    CHECK(p.size() == 4);
    CHECK(p.name(0) == "a");
    CHECK(p.leq(0, 2));  // closure a <= c
    CHECK(!p.comparable(0, 3));

    Poset q = parse_poset(serialize_poset(p));
    CHECK(p == q);
}

TEST_CASE("parse: reflexive relation is a no-op") {
    Poset p = parse_poset("rel x x\n");
    CHECK(p.size() == 1);
    CHECK(p.covers().empty());
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_poset("rel 0 1\nrel 1 0\n"), CyclicInputError);
    CHECK_THROWS_AS(parse_poset("rel 0 1\nrel 1 2\nrel 2 0\n"), CyclicInputError);
    CHECK_THROWS_AS(parse_poset("element a\nelement a\n"), DuplicateElementError);
    CHECK_THROWS_AS(parse_poset("rel a\n"), SyntaxError);
    CHECK_THROWS_AS(parse_poset("frobnicate a b\n"), SyntaxError);
    try {
        parse_poset("element a\nbogus\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("closure and transitive reduction") {
    // declaring the composite relation should not add a cover
    Poset p(std::vector<std::string>{"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.between(0, 2).count() == 3);
}

TEST_CASE("chain enumeration counts") {
    Poset p = family("chain", {2});
    CHECK(enumerate_chains(p, 0, true).size() == 3);
    CHECK(enumerate_chains(p, 1, true).size() == 6);
    CHECK(enumerate_chains(p, 1, false).size() == 3);
    CHECK(enumerate_chains(p, 2, false).size() == 1);
    CHECK(enumerate_chains(p, 3, false).empty());

    // lexicographic order, weak 1-chains over [1]
    Poset q = family("chain", {1});
    auto ch = enumerate_chains(q, 1, true);
    REQUIRE(ch.size() == 3);
    CHECK(ch[0].vertices == std::vector<int>{0, 0});
    CHECK(ch[1].vertices == std::vector<int>{0, 1});
    CHECK(ch[2].vertices == std::vector<int>{1, 1});
}

TEST_CASE("connected components") {
    Poset anti = family("antichain", {3});
    std::vector<int> all{0, 1, 2};
    CHECK(connected_components(anti, all).size() == 3);

    Poset pc = family("pseudo_circle", {});
    std::vector<int> four{0, 1, 2, 3};
    CHECK(connected_components(pc, four).size() == 1);
    // a and b only touch through c, d
    CHECK(connected_components(pc, std::vector<int>{0, 1}).size() == 2);
}

TEST_CASE("interval enumeration matches the exhaustive oracle") {
    for (const Poset& p :
         {family("chain", {3}), family("pseudo_circle", {}),
          family("dandelion", {2}), family("corolla", {3}),
          family("antichain", {4}), family("tree", {0, 1, 1, 2, 1, 3, 0, 4})}) {
        auto got = enumerate_intervals(p);
        std::set<std::vector<int>> got_set;
        for (const auto& iv : got) got_set.insert(iv.support);
        CHECK(got_set.size() == got.size());  // no duplicates
        CHECK(got_set == intervals_by_brute_force(p));
        CHECK(std::is_sorted(got.begin(), got.end(),
                             [](const Interval& a, const Interval& b) {
                                 return a.support < b.support;
                             }));
    }
}

TEST_CASE("interval counts on known posets") {
    // contiguous segments of a total order
    for (int n = 1; n <= 5; ++n) {
        Poset p = family("chain", {n});
        CHECK(int(enumerate_intervals(p).size()) == (n + 1) * (n + 2) / 2);
    }
    CHECK(enumerate_intervals(family("pseudo_circle", {})).size() == 13);
}

TEST_CASE("interval cap triggers the explosion error") {
    Poset p = family("chain", {4});
    CHECK_THROWS_AS(enumerate_intervals(p, 3), IntervalExplosionError);
}

TEST_CASE("composition length") {
    CHECK(composition_length(family("chain", {4})) == 4);
    CHECK(composition_length(family("antichain", {3})) == 0);
    CHECK(composition_length(family("dandelion", {5})) == 2);
    CHECK(composition_length(family("corolla", {3})) == 1);
    CHECK(composition_length(family("pseudo_circle", {})) == 1);
}

TEST_CASE("family generators") {
    Poset c3 = family("chain", {3});
    CHECK(c3.size() == 4);
    int strict_pairs = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (c3.strictly_less(a, b)) ++strict_pairs;
    CHECK(strict_pairs == 6);

    Poset d2 = family("dandelion", {2});
    CHECK(d2.size() == 4);
    CHECK(d2.leq(0, 2));
    CHECK(!d2.comparable(2, 3));

    Poset co2 = family("corolla", {2});
    CHECK(co2.size() == 3);
    CHECK(co2.covers().size() == 2);

    CHECK_THROWS_AS(family("moebius", {1}), UnknownFamilyError);
    CHECK_THROWS_AS(family("chain", {-1}), BadParamsError);
    CHECK_THROWS_AS(family("chain", {1, 2}), BadParamsError);
    CHECK_THROWS_AS(family("tree", {0, 1, 2}), BadParamsError);
}
