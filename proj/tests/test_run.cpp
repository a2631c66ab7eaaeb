#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "repcoh/cohomology.hpp"
#include "repcoh/families.hpp"
#include "repcoh/run.hpp"

using namespace repcoh;

namespace {

int exit_code_of(const std::string& shell_command) {
    int status = std::system(shell_command.c_str());
    return WEXITSTATUS(status);
}

const char* cli() { return std::getenv("REPCOH_CLI"); }

}  // namespace

TEST_CASE("run reproduces the published [4] ranks") {
    RunConfig cfg;
    cfg.variant = Variant::CheckG;
    cfg.base = family("chain", {4});
    RunResult r = run(cfg);
    const auto& groups = r.result["groups"];
    REQUIRE(groups.size() == 5);
    std::vector<long long> want = {3, 78, 0, 0, 0};
    for (int n = 0; n < 5; ++n) {
        CHECK(groups[n]["dim"] == n);
        CHECK(groups[n]["rank"] == want[n]);
        CHECK(groups[n]["torsion"].empty());
    }
    CHECK(r.result["variant"] == "G");
    CHECK(r.result["basis"] == "intervals");
    CHECK(r.result["max_dim"] == 4);
    CHECK(r.result["base"]["elements"].size() == 5);
    CHECK(r.meta.contains("wall_ms"));
}

TEST_CASE("identical configs give byte-identical result objects") {
    RunConfig cfg;
    cfg.variant = Variant::CheckG;
    cfg.base = family("chain", {3});
    cfg.generators = true;
    std::string a = run(cfg).result.dump();
    std::string b = run(cfg).result.dump();
    CHECK(a == b);

    // thread count must not leak into the result either
    cfg.generators = false;
    cfg.threads = 1;
    std::string one = run(cfg).result.dump();
    cfg.threads = 4;
    CHECK(run(cfg).result.dump() == one);
}

TEST_CASE("csv and json agree") {
    RunConfig cfg;
    cfg.variant = Variant::CheckE;
    cfg.base = family("chain", {3});
    RunResult r = run(cfg);
    cfg.emit = EmitFormat::Csv;
    std::string csv = emit_report(cfg, r);
    std::string want = "dim,rank,torsion\n";
    for (const auto& g : r.result["groups"])
        want += g["dim"].dump() + "," + g["rank"].dump() + ",\n";
    CHECK(csv == want);
}

TEST_CASE("simplicial variants refuse an implicit truncation") {
    RunConfig cfg;
    cfg.variant = Variant::TildeG;
    cfg.base = family("chain", {2});
    CHECK_THROWS_AS(run(cfg), BadParamsError);
    cfg.max_dim = 1;
    CHECK(run(cfg).result["max_dim"] == 1);
}

TEST_CASE("cocycle representatives") {
    // connected nerve: one representative, the constant function
    CochainComplex nerve = nerve_complex(family("chain", {2}), 1);
    auto reps = cocycle_representatives(nerve, 0);
    REQUIRE(reps.size() == 1);
    for (const auto& x : reps[0]) CHECK(abs(x) == 1);
    CHECK(std::set<mpz_class>(reps[0].begin(), reps[0].end()).size() == 1);

    // strict-chain G-rule over [3] at degree 0
    CochainComplex c = build_complex(family("chain", {3}), Variant::CheckG, 1);
    auto k = cocycle_representatives(c, 0);
    REQUIRE(k.size() == 3);
    for (const auto& v : k)
        for (const auto& x : c.d[0].apply(v)) CHECK(x == 0);

    auto coord = [&](const VirtualClass& vc) {
        std::vector<mpz_class> out(c.bases[0].size(), 0);
        for (const auto& [supp, coef] : vc.coeffs)
            out[c.basis_index(0, supp)] = mpz_class(long(coef));
        return out;
    };
    VirtualClass whole, singletons, mixed;
    whole.level = singletons.level = mixed.level = 0;
    whole.add({0, 1, 2, 3}, 1);
    for (int v = 0; v <= 3; ++v) singletons.add({v}, 1);
    mixed.add({0, 1, 2}, 1);
    mixed.add({1, 2, 3}, 1);
    mixed.add({1, 2}, -1);
    for (const auto& target : {whole, singletons, mixed})
        CHECK(in_rational_span(k, coord(target)));
}

TEST_CASE("truncation guard on simplicial complexes") {
    CochainComplex c = build_complex(family("chain", {2}), Variant::TildeG, 1);
    CHECK_THROWS_AS(cohomology(c, 2), TruncationExceededError);
    CHECK(cohomology(c, 1).dim == 1);

    CochainComplex g = build_complex(family("chain", {2}), Variant::CheckG, 1);
    CHECK(cohomology(g, 5) == CohomologyGroup{5, 0, {}});
}

TEST_CASE("cli exit codes and piping") {
    REQUIRE(cli() != nullptr);
    std::string bin = cli();
    CHECK(exit_code_of(bin + " family chain 4 | " + bin +
                       " compute --variant G --emit json > /dev/null 2>&1") == 0);
    CHECK(exit_code_of(bin + " family moebius 2 > /dev/null 2>&1") == 2);
    CHECK(exit_code_of("printf 'rel 0 1\\nrel 1 0\\n' | " + bin +
                       " compute --variant E > /dev/null 2>&1") == 2);
    CHECK(exit_code_of(bin + " family chain 4 | " + bin +
                       " compute --variant G --cap 3 > /dev/null 2>&1") == 3);
    CHECK(exit_code_of(bin + " family chain 4 | REPCOH_INTERVAL_CAP=3 " + bin +
                       " compute --variant G > /dev/null 2>&1") == 3);
    CHECK(exit_code_of(bin + " family chain 2 | " + bin +
                       " compute --variant tildeG --max-dim 2 --basis "
                       "singletons --emit csv > /dev/null 2>&1") == 0);
}
