#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace maghom {

// Base of all library errors; the CLI maps subclasses to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Anything wrong with user-supplied data (files, matrices, flags).
struct input_error : error {
    using error::error;
};

// --- exact arithmetic ---

struct zero_constant_denominator : error {
    zero_constant_denominator()
        : error("series expansion undefined: denominator has zero constant term") {}
};

struct singular_evaluation : error {
    singular_evaluation() : error("denominator vanishes at the evaluation point") {}
};

// --- metric spaces ---

struct nonzero_self_distance : input_error {
    explicit nonzero_self_distance(std::size_t point)
        : input_error("nonzero self-distance at point index " + std::to_string(point)),
          point(point) {}
    std::size_t point;
};

struct negative_distance : input_error {
    negative_distance(std::size_t from, std::size_t to)
        : input_error("negative distance at (" + std::to_string(from) + ", " +
                      std::to_string(to) + ")"),
          from(from), to(to) {}
    std::size_t from, to;
};

struct triangle_violation : input_error {
    triangle_violation(std::size_t x, std::size_t y, std::size_t z)
        : input_error("triangle inequality violated: d(" + std::to_string(x) + "," +
                      std::to_string(z) + ") > d(" + std::to_string(x) + "," +
                      std::to_string(y) + ") + d(" + std::to_string(y) + "," +
                      std::to_string(z) + ")"),
          triple{x, y, z} {}
    std::array<std::size_t, 3> triple;  // (x, y, z) with d(x,z) > d(x,y) + d(y,z)
};

struct infinite_distance : input_error {
    infinite_distance() : input_error("infinite distances are not supported") {}
};

struct disconnected_graph : input_error {
    disconnected_graph(const std::string& u, const std::string& v)
        : input_error("graph is disconnected: no path between '" + u + "' and '" + v + "'") {}
};

struct same_point : error {
    same_point() : error("adjacency is undefined for a point with itself") {}
};

// --- magnitude ---

struct not_skeletal : error {
    not_skeletal() : error("space is not skeletal; skeletonize first") {}
};

struct singular_zeta : error {
    singular_zeta() : error("zeta matrix is singular (arithmetic bug: impossible for a valid skeletal space)") {}
};

// --- chain complex ---

struct budget_exceeded : error {
    explicit budget_exceeded(std::size_t budget)
        : error("generator count exceeds budget of " + std::to_string(budget)),
          budget(budget) {}
    std::size_t budget;
};

struct missing_basis : error {
    using error::error;
};

struct incomplete_complex : error {
    using error::error;
};

}  // namespace maghom
