#include "repcoh/cohomology.hpp"

namespace repcoh {

namespace {

CohomologyGroup assemble(int n, long long dim_cn,
                         const std::vector<mpz_class>& snf_below,
                         long long rank_above) {
    CohomologyGroup g;
    g.dim = n;
    g.free_rank = dim_cn - rank_above - (long long)snf_below.size();
    for (const mpz_class& f : snf_below)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

void check_degree(const CochainComplex& c, int n) {
    if (n < 0) throw IndexOutOfRangeError("negative cohomology degree");
    if (n + 1 > c.top())
        throw TruncationExceededError(
            "degree " + std::to_string(n) + " needs level " +
            std::to_string(n + 1) + "; raise max_dim");
}

}  // namespace

CohomologyGroup cohomology(const CochainComplex& c, int n) {
    if (n >= 0 && n + 1 > c.top() && !is_simplicial(c.variant) &&
        n > composition_length(c.base))
        return CohomologyGroup{n, 0, {}};
    check_degree(c, n);
    std::vector<mpz_class> below =
        n == 0 ? std::vector<mpz_class>{} : smith_normal_form(c.d[n - 1]);
    long long rank_above = (long long)smith_normal_form(c.d[n]).size();
    return assemble(n, (long long)c.bases[n].size(), below, rank_above);
}

std::vector<CohomologyGroup> cohomology_all(const CochainComplex& c) {
    std::vector<std::vector<mpz_class>> snf(c.d.size());
    for (size_t n = 0; n < c.d.size(); ++n) snf[n] = smith_normal_form(c.d[n]);
    std::vector<CohomologyGroup> out;
    for (int n = 0; n <= c.max_dim; ++n)
        out.push_back(assemble(n, (long long)c.bases[n].size(),
                               n == 0 ? std::vector<mpz_class>{} : snf[n - 1],
                               (long long)snf[n].size()));
    return out;
}

std::vector<std::vector<mpz_class>> cocycle_representatives(
    const CochainComplex& c, int n) {
    check_degree(c, n);
    std::vector<std::vector<mpz_class>> kernel = integer_kernel_basis(c.d[n]);

    std::vector<std::vector<mpz_class>> image;
    if (n > 0) {
        const IntegerMatrix& m = c.d[n - 1];
        std::vector<std::vector<mpz_class>> cols(m.cols());
        for (auto& col : cols) col.assign(m.rows(), 0);
        for (const auto& [rc, v] : m.entries()) cols[rc.second][rc.first] = v;
        image = std::move(cols);
    }

    std::vector<std::vector<mpz_class>> front, rest;
    std::vector<std::vector<mpz_class>> span = image;
    for (auto& v : kernel) {
        if (!in_rational_span(span, v)) {
            span.push_back(v);
            front.push_back(std::move(v));
        } else {
            rest.push_back(std::move(v));
        }
    }
    for (auto& v : rest) front.push_back(std::move(v));
    return front;
}

}  // namespace repcoh
