#include "maghom/homology.hpp"

#include <stdexcept>

#include "maghom/errors.hpp"

namespace maghom {

namespace {

homology_group group_from(std::size_t dim, const snf_result& d_n, const snf_result& d_n1) {
    if (d_n.rank + d_n1.rank > dim)
        throw std::logic_error("homology: boundary ranks exceed chain dimension");
    homology_group g;
    g.rank = dim - d_n.rank - d_n1.rank;
    for (const auto& f : d_n1.factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

}  // namespace

homology_group homology_at(const fin_metric& x, const chain_basis& basis, std::size_t n,
                           const rat& grading) {
    if (grading > basis.max_grading)
        throw incomplete_complex("homology at grading " + grading.str() +
                                 " needs enumeration beyond the bound " +
                                 basis.max_grading.str());
    auto key = basis.key_of(grading);
    if (!key) return {};
    snf_result d_n = snf(boundary_matrix(x, basis, n, grading));
    snf_result d_n1 = snf(boundary_matrix(x, basis, n + 1, grading));
    return group_from(basis.dim(n, *key), d_n, d_n1);
}

homology_table compute_homology_table(const fin_metric& x, const chain_basis& basis,
                                      std::optional<std::size_t> max_degree) {
    homology_table table;
    std::size_t top = basis.max_degree();
    if (max_degree && *max_degree < top) top = *max_degree;
    for (std::size_t key : basis.grading_keys()) {
        rat grading = basis.grading_of(key);
        snf_result below = snf(boundary_matrix(x, basis, 0, grading));  // zero map
        for (std::size_t n = 0; n <= top; ++n) {
            snf_result above = snf(boundary_matrix(x, basis, n + 1, grading));
            if (basis.dim(n, key) > 0)
                table[{n, key}] = group_from(basis.dim(n, key), below, above);
            below = std::move(above);
        }
    }
    return table;
}

}  // namespace maghom
