#pragma once

#include "repcoh/matrix.hpp"

namespace repcoh {

// Invariant factors d1 | d2 | ... | dr (all positive), r = rank.
std::vector<mpz_class> smith_normal_form(const IntegerMatrix& m);

inline int integer_rank(const IntegerMatrix& m) {
    return int(smith_normal_form(m).size());
}

// Dense variant that also produces unimodular U, V with U*m*V diagonal.
// Intended for small matrices (tests, kernel extraction).
struct SnfCertificate {
    std::vector<mpz_class> factors;
    IntegerMatrix U, V;  // U: rows x rows, V: cols x cols
};
SnfCertificate smith_normal_form_certified(const IntegerMatrix& m);

// Basis of the saturated integer kernel lattice {v : m v = 0}, as columns.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntegerMatrix& m);

// Rank over Q of the column span of `vectors` (each of dimension dim).
int rational_rank(const std::vector<std::vector<mpz_class>>& vectors, int dim);

// True iff target lies in the Q-span of `vectors`.
bool in_rational_span(const std::vector<std::vector<mpz_class>>& vectors,
                      const std::vector<mpz_class>& target);

}  // namespace repcoh
