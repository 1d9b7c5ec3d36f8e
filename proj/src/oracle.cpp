#include "maghom/oracle.hpp"

#include "maghom/errors.hpp"

namespace maghom {

std::size_t h0_oracle(const fin_metric& x, const rat& grading) {
    if (!x.skeletal) throw not_skeletal();
    return grading.is_zero() ? x.size() : 0;
}

std::size_t h1_oracle(const fin_metric& x, const rat& grading) {
    if (!x.skeletal) throw not_skeletal();
    std::size_t n = x.size(), count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && x.d(a, b) == grading && adjacent(x, a, b)) ++count;
    return count;
}

std::optional<std::size_t> h2_oracle(const fin_metric& x, const rat& grading) {
    if (!x.skeletal) throw not_skeletal();
    if (!is_geodetic(x) || !has_no_4cuts(x)) return std::nullopt;
    std::size_t n = x.size(), count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (b == c) continue;
                if (x.d(a, b) + x.d(b, c) != grading) continue;
                if (between(x, a, b, c)) continue;
                if (adjacent(x, a, b) && adjacent(x, b, c)) ++count;
            }
        }
    return count;
}

}  // namespace maghom
