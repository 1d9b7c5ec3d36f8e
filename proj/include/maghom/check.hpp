#pragma once

#include <vector>

#include "maghom/chains.hpp"
#include "maghom/homology.hpp"
#include "maghom/magnitude.hpp"

namespace maghom {

// One grading of the Euler-characteristic reconciliation: the magnitude
// power-series coefficient must equal both the alternating sum of chain-group
// dimensions and the alternating sum of homology ranks.
struct reconciliation_row {
    rat grading;
    rat series_coeff;
    long chain_euler = 0;
    long homology_euler = 0;
    bool match = false;
};

struct check_report {
    std::vector<reconciliation_row> rows;
    bool rows_match = false;
    bool divergent_matches = false;   // closed form at u = -1 equals the magnitude
    bool weighting_matches = false;   // weighting and coweighting sums equal the magnitude

    bool passed() const { return rows_match && divergent_matches && weighting_matches; }
};

// Runs the whole reconciliation at gradings <= max_grading on a skeletal
// space.  Rows cover every realized grading and every nonzero series
// coefficient in range.
check_report run_check(const fin_metric& x, const rat& max_grading,
                       std::size_t budget = default_generator_budget);

}  // namespace maghom
