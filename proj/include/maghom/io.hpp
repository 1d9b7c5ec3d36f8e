#pragma once

#include <string>

#include "maghom/metric.hpp"

namespace maghom {

enum class input_format { metric_json, dist_csv, graph_edges };

// Format selection by CLI flag name; throws input_error on unknown names.
input_format parse_format(const std::string& name);

// Parsers take whole-file contents.  All three produce validated spaces;
// distance literals ("3/2", "7", "1.5", JSON numbers) are read as exact
// rationals, and "inf"/"Infinity" is rejected with infinite_distance.
fin_metric parse_metric_json(const std::string& text);
fin_metric parse_dist_csv(const std::string& text);
fin_metric parse_graph_edges(const std::string& text);

// Read the file and dispatch on the format.
fin_metric load_space(const std::string& path, input_format format);

}  // namespace maghom
