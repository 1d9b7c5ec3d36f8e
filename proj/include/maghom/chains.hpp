#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "maghom/metric.hpp"
#include "maghom/rat.hpp"

namespace maghom {

inline constexpr std::size_t default_generator_budget = 10'000'000;

using tuple_t = std::vector<std::uint32_t>;

// Basis of the normalized magnitude chain complex up to grading max_grading:
// per degree n and integer grading key k (the grading is k/scale), the
// lexicographically sorted tuples (x_0,...,x_n) with consecutive points
// distinct and total length k/scale.  Enumeration always runs until no tuple
// of length <= max_grading extends, so the basis is complete for every degree
// at gradings <= max_grading.
struct chain_basis {
    unsigned long scale = 1;
    rat max_grading;
    std::vector<std::map<std::size_t, std::vector<tuple_t>>> by_degree;

    std::size_t max_degree() const { return by_degree.empty() ? 0 : by_degree.size() - 1; }

    // Realized grading keys <= max_grading*scale, sorted (the set G(L)).
    std::vector<std::size_t> grading_keys() const;

    rat grading_of(std::size_t key) const {
        return rat(static_cast<long>(key), static_cast<long>(scale));
    }

    // Integer key of an exact grading, or no value if it is off the exponent
    // lattice (then every chain group at that grading is zero).
    std::optional<std::size_t> key_of(const rat& grading) const;

    static const std::vector<tuple_t> no_tuples;
    const std::vector<tuple_t>& tuples(std::size_t n, std::size_t key) const;
    std::size_t dim(std::size_t n, std::size_t key) const { return tuples(n, key).size(); }
};

// Depth- and budget-bounded breadth-first extension of tuples.  Throws
// budget_exceeded when the generator count passes the cap, not_skeletal for
// non-skeletal input.
chain_basis enumerate_generators(const fin_metric& x, const rat& max_grading,
                                 std::size_t budget = default_generator_budget);

// Sparse integer matrix in coordinate form.
struct int_matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    struct entry {
        std::size_t row, col;
        long value;
    };
    std::vector<entry> entries;
};

// Boundary map from basis(n, grading) to basis(n-1, grading): the column of
// an n-generator holds (-1)^i at each interior face i = 1..n-1 obtained by
// deleting x_i when d(x_{i-1},x_i) + d(x_i,x_{i+1}) = d(x_{i-1},x_{i+1}).
// Throws missing_basis when grading > basis.max_grading (the enumeration
// never saw that grading).
int_matrix boundary_matrix(const fin_metric& x, const chain_basis& basis, std::size_t n,
                           const rat& grading);

}  // namespace maghom
