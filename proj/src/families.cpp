#include "repcoh/families.hpp"

#include <algorithm>

#include "repcoh/errors.hpp"

namespace repcoh {

namespace {

std::vector<std::string> numbered(long long count) {
    std::vector<std::string> names;
    for (long long i = 0; i < count; ++i) names.push_back(std::to_string(i));
    return names;
}

void want(const std::vector<long long>& params, size_t count,
          const std::string& name) {
    if (params.size() != count)
        throw BadParamsError(name + " takes " + std::to_string(count) +
                             " parameter(s)");
}

}  // namespace

Poset family(const std::string& name, const std::vector<long long>& params) {
    std::vector<std::pair<int, int>> rels;

    if (name == "chain") {
        want(params, 1, name);
        long long n = params[0];
        if (n < 0) throw BadParamsError("chain length must be >= 0");
        for (int i = 0; i < n; ++i) rels.emplace_back(i, i + 1);
        return Poset(numbered(n + 1), rels);
    }
    if (name == "dandelion") {
        want(params, 1, name);
        long long n = params[0];
        if (n < 1) throw BadParamsError("dandelion needs at least one petal");
        rels.emplace_back(0, 1);
        for (int j = 2; j <= n + 1; ++j) rels.emplace_back(1, j);
        return Poset(numbered(n + 2), rels);
    }
    if (name == "corolla") {
        want(params, 1, name);
        long long n = params[0];
        if (n < 1) throw BadParamsError("corolla needs at least one leaf");
        for (int j = 1; j <= n; ++j) rels.emplace_back(0, j);
        return Poset(numbered(n + 1), rels);
    }
    if (name == "pseudo_circle") {
        want(params, 0, name);
        return Poset({"a", "b", "c", "d"},
                     {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    }
    if (name == "antichain") {
        want(params, 1, name);
        long long m = params[0];
        if (m < 1) throw BadParamsError("antichain needs at least one element");
        return Poset(numbered(m), {});
    }
    if (name == "tree") {
        if (params.empty() || params.size() % 2 != 0)
            throw BadParamsError("tree takes cover pairs: parent child ...");
        long long hi = 0;
        for (long long p : params) {
            if (p < 0) throw BadParamsError("tree labels must be >= 0");
            hi = std::max(hi, p);
        }
        for (size_t i = 0; i < params.size(); i += 2)
            rels.emplace_back(int(params[i]), int(params[i + 1]));
        return Poset(numbered(hi + 1), rels);
    }
    throw UnknownFamilyError("unknown family: " + name);
}

}  // namespace repcoh
