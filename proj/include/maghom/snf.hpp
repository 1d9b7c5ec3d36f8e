#pragma once

#include <gmpxx.h>

#include <vector>

#include "maghom/chains.hpp"

namespace maghom {

// Smith normal form: unimodular U (rows x rows) and V (cols x cols) with
// U*A*V = diag(factors), factors positive with d1 | d2 | ... | dr.
struct snf_result {
    std::vector<mpz_class> factors;
    std::size_t rank = 0;
    // Present only when requested.
    std::vector<std::vector<mpz_class>> u, v;
};

// want_transforms selects a dense elimination that carries U and V along
// (meant for small matrices); otherwise a sparse elimination that prefers
// +-1 pivots and returns factors only.
snf_result snf(const int_matrix& a, bool want_transforms = false);

// Rank over the integers (= rank over Q).
std::size_t int_rank(const int_matrix& a);

}  // namespace maghom
