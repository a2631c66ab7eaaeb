#pragma once

#include <string>
#include <vector>

#include "repcoh/poset.hpp"

namespace repcoh {

// Named generators:
//   chain n         total order 0 < 1 < ... < n
//   dandelion n     0 < 1 < j for j = 2..n+1 (n petals)
//   corolla n       one root 0 below leaves 1..n
//   pseudo_circle   a, b < c, d (complete bipartite; nerve is a circle)
//   antichain m     m incomparable elements
//   tree a b c d... cover pairs, read two at a time
Poset family(const std::string& name, const std::vector<long long>& params);

}  // namespace repcoh
