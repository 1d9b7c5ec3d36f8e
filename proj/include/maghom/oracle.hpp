#pragma once

#include <optional>

#include "maghom/metric.hpp"

namespace maghom {

// Closed-form predictions for low homology degrees, used as independent
// checks against the Smith-normal-form computation.

// H_0 is free on the points at grading 0 and vanishes at positive gradings.
std::size_t h0_oracle(const fin_metric& x, const rat& grading);

// H_1 is free on the ordered pairs of distinct adjacent points whose
// distance is the grading.
std::size_t h1_oracle(const fin_metric& x, const rat& grading);

// For geodetic spaces without 4-cuts, H_2 is free on the ordered triples
// (x,y,z) with consecutive points distinct, d(x,y) + d(y,z) = grading, y not
// between x and z, and both pairs adjacent.  Returns no value when the
// hypotheses fail (the prediction would be unsound).
std::optional<std::size_t> h2_oracle(const fin_metric& x, const rat& grading);

}  // namespace maghom
