#pragma once

#include <utility>
#include <vector>

#include "maghom/genpoly.hpp"
#include "maghom/metric.hpp"
#include "maghom/polynomial.hpp"
#include "maghom/ratfun.hpp"

namespace maghom {

// Zeta matrix of a skeletal space: entry (x,y) is t^(D*d(x,y)) where
// t = q^(1/D) and D clears all distance denominators.
struct zeta {
    unsigned long scale = 1;
    std::vector<std::vector<poly>> entries;

    std::size_t size() const { return entries.size(); }
};

// Throws not_skeletal if two distinct points sit at mutual distance zero.
zeta zeta_matrix(const fin_metric& x);

// Magnitude with its witnesses: value = sum of all entries of the inverse
// zeta matrix; weighting solves Z*w = 1 (row sums of the inverse),
// coweighting the transposed system (column sums).
struct magnitude_result {
    rat_fun value;
    std::vector<rat_fun> weighting;
    std::vector<rat_fun> coweighting;
    std::vector<std::vector<rat_fun>> inverse;
    unsigned long scale = 1;
};

// Exact Gauss-Jordan inversion over the rational-function field.  Throws
// singular_zeta on a zero pivot column (impossible for valid skeletal input;
// kept as a defensive check).
magnitude_result magnitude(const fin_metric& x);

// Power-series coefficients of the magnitude, reported as (grading, value)
// pairs for each nonzero coefficient at gradings k/D <= max_grading.
std::vector<std::pair<rat, rat>> magnitude_series(const fin_metric& x, const rat& max_grading);

// Sum over all (n+1)-tuples of the weight product
// prod_k (q^d(x_{k-1},x_k) - delta), i.e. the entry sum of (Z - I)^n.  For
// skeletal input this is sum over consecutively-distinct tuples of
// q^(total length).
gen_poly weight_sum(const fin_metric& x, std::size_t n);

// Alternating partial sum  sum_{n=0}^{N} (-1)^n weight_sum(x, n).
gen_poly partial_euler(const fin_metric& x, std::size_t max_degree);

// The geometric-series closed form: p(u) = det(I - (Z-I)u) and
// s(u) = entry sum of adj(I - (Z-I)u), both polynomials in the auxiliary
// variable u with polynomial-in-t coefficients, plus their ratio at u = -1
// (which must equal the magnitude).
struct divergent_series {
    unsigned long scale = 1;
    std::vector<poly> det_u;      // coefficients of p(u)
    std::vector<poly> adj_sum_u;  // coefficients of s(u)
    rat_fun value;                // s(-1) / p(-1)
};

divergent_series divergent_series_magnitude(const fin_metric& x);

// det(Z) by fraction-free elimination; checked to have constant term exactly
// one (a zero-length permutation contributes 1, everything else is
// infinitesimal).  A mismatch is an arithmetic bug, reported as logic_error.
poly det_leading_term(const fin_metric& x);

// Sum of the entries of the inverse of the real matrix [exp(-tval*d(x,y))]
// by floating LU decomposition.  Throws singular_evaluation near a pole.
double magnitude_at(const fin_metric& x, double tval);

}  // namespace maghom
