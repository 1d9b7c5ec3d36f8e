#include "maghom/check.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maghom {

check_report run_check(const fin_metric& x, const rat& max_grading, std::size_t budget) {
    check_report rep;

    magnitude_result mag = magnitude(x);

    std::map<rat, rat> series_at;
    for (const auto& [grading, coeff] : magnitude_series(x, max_grading)) series_at[grading] = coeff;

    chain_basis basis = enumerate_generators(x, max_grading, budget);
    homology_table table = compute_homology_table(x, basis);

    std::set<rat> gradings;
    for (const auto& [grading, coeff] : series_at) gradings.insert(grading);
    for (std::size_t key : basis.grading_keys()) gradings.insert(basis.grading_of(key));

    rep.rows_match = true;
    for (const rat& grading : gradings) {
        reconciliation_row row;
        row.grading = grading;
        auto s = series_at.find(grading);
        if (s != series_at.end()) row.series_coeff = s->second;

        if (auto key = basis.key_of(grading)) {
            for (std::size_t n = 0; n <= basis.max_degree(); ++n) {
                long sign = n % 2 == 0 ? 1 : -1;
                row.chain_euler += sign * static_cast<long>(basis.dim(n, *key));
                auto h = table.find({n, *key});
                if (h != table.end()) row.homology_euler += sign * static_cast<long>(h->second.rank);
            }
        }

        row.match = row.series_coeff == rat(row.chain_euler) &&
                    row.chain_euler == row.homology_euler;
        rep.rows_match = rep.rows_match && row.match;
        rep.rows.push_back(row);
    }

    rep.divergent_matches = divergent_series_magnitude(x).value == mag.value;

    rat_fun wsum, vsum;
    for (const rat_fun& w : mag.weighting) wsum = wsum + w;
    for (const rat_fun& v : mag.coweighting) vsum = vsum + v;
    rep.weighting_matches = wsum == mag.value && vsum == mag.value;

    return rep;
}

}  // namespace maghom
