#pragma once

#include <map>
#include <optional>
#include <vector>

#include "maghom/chains.hpp"
#include "maghom/snf.hpp"

namespace maghom {

// One graded homology group: H_n at a fixed grading.
struct homology_group {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

// rank H_n = dim C_n - rank d_n - rank d_{n+1}; torsion = invariant factors
// of d_{n+1} exceeding 1.  Throws incomplete_complex when the grading lies
// beyond the enumerated bound.
homology_group homology_at(const fin_metric& x, const chain_basis& basis, std::size_t n,
                           const rat& grading);

// All groups with a nonzero chain group, keyed by (degree, grading key).
// Boundary ranks are computed once per key.  max_degree optionally caps the
// reported degree.
using homology_table =
    std::map<std::pair<std::size_t, std::size_t>, homology_group>;
homology_table compute_homology_table(const fin_metric& x, const chain_basis& basis,
                                      std::optional<std::size_t> max_degree = {});

}  // namespace maghom
