#include "maghom/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "maghom/errors.hpp"

namespace maghom {

const std::vector<tuple_t> chain_basis::no_tuples{};

std::vector<std::size_t> chain_basis::grading_keys() const {
    std::set<std::size_t> keys;
    for (const auto& bins : by_degree)
        for (const auto& [k, tuples] : bins)
            if (!tuples.empty()) keys.insert(k);
    return {keys.begin(), keys.end()};
}

std::optional<std::size_t> chain_basis::key_of(const rat& grading) const {
    rat scaled = grading * rat(static_cast<long>(scale));
    if (!scaled.is_integer() || scaled.is_negative()) return std::nullopt;
    mpz_class k = scaled.numerator();
    if (!k.fits_ulong_p()) return std::nullopt;
    return k.get_ui();
}

const std::vector<tuple_t>& chain_basis::tuples(std::size_t n, std::size_t key) const {
    if (n >= by_degree.size()) return no_tuples;
    auto it = by_degree[n].find(key);
    return it == by_degree[n].end() ? no_tuples : it->second;
}

chain_basis enumerate_generators(const fin_metric& x, const rat& max_grading,
                                 std::size_t budget) {
    if (!x.skeletal) throw not_skeletal();
    if (max_grading.is_negative())
        throw std::domain_error("enumerate_generators: negative grading bound");

    chain_basis basis;
    basis.scale = distance_scale(x);
    basis.max_grading = max_grading;

    std::size_t n_pts = x.size();
    // Distances as integer multiples of 1/scale.
    std::vector<std::vector<std::size_t>> step(n_pts, std::vector<std::size_t>(n_pts, 0));
    for (std::size_t i = 0; i < n_pts; ++i)
        for (std::size_t j = 0; j < n_pts; ++j) {
            rat scaled = x.d(i, j) * rat(static_cast<long>(basis.scale));
            step[i][j] = scaled.numerator().get_ui();
        }
    rat kmax_r = max_grading * rat(static_cast<long>(basis.scale));
    mpz_class kmax_z = kmax_r.numerator() / kmax_r.denominator();
    if (!kmax_z.fits_ulong_p()) throw std::overflow_error("enumerate_generators: grading too large");
    std::size_t kmax = kmax_z.get_ui();

    // Level-by-level extension.  Tuples are kept in global lexicographic
    // order, so each per-grading bin comes out sorted for free.
    std::vector<std::pair<tuple_t, std::size_t>> level;
    for (std::uint32_t p = 0; p < n_pts; ++p) level.emplace_back(tuple_t{p}, 0);

    std::size_t total = 0;
    while (!level.empty()) {
        total += level.size();
        if (total > budget) throw budget_exceeded(budget);
        std::vector<std::pair<tuple_t, std::size_t>> next;
        for (auto& [tuple, k] : level) {
            std::uint32_t last = tuple.back();
            for (std::uint32_t y = 0; y < n_pts; ++y) {
                if (y == last) continue;
                std::size_t k2 = k + step[last][y];
                if (k2 > kmax) continue;
                tuple_t extended = tuple;
                extended.push_back(y);
                next.emplace_back(std::move(extended), k2);
            }
        }
        auto& bins = basis.by_degree.emplace_back();
        for (auto& [tuple, k] : level) bins[k].push_back(std::move(tuple));
        level = std::move(next);
    }
    return basis;
}

int_matrix boundary_matrix(const fin_metric& x, const chain_basis& basis, std::size_t n,
                           const rat& grading) {
    if (grading > basis.max_grading)
        throw missing_basis("no basis enumerated at grading " + grading.str() +
                            " (bound was " + basis.max_grading.str() + ")");
    int_matrix m;
    auto key = basis.key_of(grading);
    if (!key) return m;  // off-lattice grading: zero chain groups
    const auto& cols = basis.tuples(n, *key);
    const auto& rows = n == 0 ? chain_basis::no_tuples : basis.tuples(n - 1, *key);
    m.cols = cols.size();
    m.rows = rows.size();
    if (n == 0 || cols.empty() || rows.empty()) return m;

    for (std::size_t c = 0; c < cols.size(); ++c) {
        const tuple_t& tup = cols[c];
        tuple_t face;
        face.reserve(n);
        for (std::size_t i = 1; i < n; ++i) {
            if (x.d(tup[i - 1], tup[i]) + x.d(tup[i], tup[i + 1]) != x.d(tup[i - 1], tup[i + 1]))
                continue;
            face.assign(tup.begin(), tup.begin() + static_cast<long>(i));
            face.insert(face.end(), tup.begin() + static_cast<long>(i) + 1, tup.end());
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            if (it == rows.end() || *it != face)
                throw std::logic_error("boundary_matrix: face tuple missing from basis");
            std::size_t r = static_cast<std::size_t>(it - rows.begin());
            m.entries.push_back({r, c, i % 2 == 0 ? 1L : -1L});
        }
    }
    return m;
}

}  // namespace maghom
