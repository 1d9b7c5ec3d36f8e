#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maghom/rat.hpp"

namespace maghom {

// Finite quasi-pseudo-metric space: zero self-distances, nonnegative
// distances, triangle inequality.  Asymmetry (quasi) and zero distances
// between distinct points (pseudo) are allowed; the flags record what the
// matrix actually satisfies.
struct fin_metric {
    std::vector<std::string> labels;
    std::vector<std::vector<rat>> dist;
    bool symmetric = true;
    bool skeletal = true;

    std::size_t size() const { return labels.size(); }
    const rat& d(std::size_t i, std::size_t j) const { return dist[i][j]; }

    // Minimum positive distance (the epsilon of the degree bound n <= l/eps);
    // empty for a single point.
    std::optional<rat> min_positive_distance() const;
};

// Least common multiple of the denominators of all distances: the D with
// t = q^(1/D) under which every distance becomes an integer degree.
unsigned long distance_scale(const fin_metric& x);

// Checks the metric axioms and derives the flags.  Throws
// nonzero_self_distance, negative_distance, triangle_violation (with the
// witnessing triple), or input_error for shape problems.
fin_metric validate(std::vector<std::vector<rat>> dist, std::vector<std::string> labels);

// Shortest-path metric of an undirected simple graph.  Vertices appear in
// first-mention order; isolated_vertices lets callers name vertices with no
// edges (which makes any 2+-vertex graph disconnected).  Throws
// disconnected_graph when some pair has no path.
fin_metric graph_to_metric(const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::vector<std::string>& isolated_vertices = {});

// Multiply every distance by t > 0; flags are preserved.
fin_metric scale_space(const fin_metric& x, const rat& t);

// Quotient identifying points at mutual distance zero.  Returns the skeletal
// space plus the map original index -> class index.  Class representative is
// the lexicographically smallest label; classes keep the order of their first
// member.
std::pair<fin_metric, std::vector<std::size_t>> skeletonize(const fin_metric& x);

// d(x,y) + d(y,z) = d(x,z).
bool between(const fin_metric& m, std::size_t x, std::size_t y, std::size_t z);

// Between with x != y and y != z.
bool strictly_between(const fin_metric& m, std::size_t x, std::size_t y, std::size_t z);

// No point strictly between x and y.  Throws same_point when x = y.
bool adjacent(const fin_metric& m, std::size_t x, std::size_t y);

// A quadruple x, y1, y2, z (y1 != y2) where between(x,y1,y2) and
// between(y1,y2,z) hold but d(x,z) != d(x,y1) + d(y1,y2) + d(y2,z).
struct four_cut {
    std::size_t x, y1, y2, z;
};
std::optional<four_cut> find_4cut(const fin_metric& m);
inline bool has_no_4cuts(const fin_metric& m) { return !find_4cut(m).has_value(); }

// A pair x, z with two betweenness witnesses y1, y2 that are not themselves
// ordered by betweenness in either direction.
struct geodetic_failure {
    std::size_t x, z, y1, y2;
};
std::optional<geodetic_failure> find_geodetic_failure(const fin_metric& m);
inline bool is_geodetic(const fin_metric& m) { return !find_geodetic_failure(m).has_value(); }

}  // namespace maghom
