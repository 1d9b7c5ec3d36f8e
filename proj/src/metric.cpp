#include "maghom/metric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "maghom/errors.hpp"

namespace maghom {

std::optional<rat> fin_metric::min_positive_distance() const {
    std::optional<rat> eps;
    for (const auto& row : dist)
        for (const auto& v : row)
            if (v.is_positive() && (!eps || v < *eps)) eps = v;
    return eps;
}

unsigned long distance_scale(const fin_metric& x) {
    mpz_class lcm(1);
    for (const auto& row : x.dist)
        for (const auto& v : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    if (!lcm.fits_ulong_p()) throw std::overflow_error("distance_scale: scale too large");
    return lcm.get_ui();
}

fin_metric validate(std::vector<std::vector<rat>> dist, std::vector<std::string> labels) {
    std::size_t n = labels.size();
    if (n == 0) throw input_error("space must have at least one point");
    if (dist.size() != n) throw input_error("distance matrix is not square");
    for (const auto& row : dist)
        if (row.size() != n) throw input_error("distance matrix is not square");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n) throw input_error("point labels must be distinct");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!dist[i][i].is_zero()) throw nonzero_self_distance(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dist[i][j].is_negative()) throw negative_distance(i, j);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (dist[x][y] + dist[y][z] < dist[x][z]) throw triangle_violation(x, y, z);

    fin_metric m;
    m.labels = std::move(labels);
    m.dist = std::move(dist);
    for (std::size_t i = 0; i < n && m.symmetric; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.dist[i][j] != m.dist[j][i]) {
                m.symmetric = false;
                break;
            }
    for (std::size_t i = 0; i < n && m.skeletal; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m.dist[i][j].is_zero() && m.dist[j][i].is_zero()) {
                m.skeletal = false;
                break;
            }
    return m;
}

fin_metric graph_to_metric(const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::vector<std::string>& isolated_vertices) {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    auto intern = [&](const std::string& v) {
        auto [it, fresh] = index.try_emplace(v, labels.size());
        if (fresh) labels.push_back(v);
        return it->second;
    };
    std::vector<std::vector<std::size_t>> adj;
    for (const auto& [a, b] : edges) {
        std::size_t u = intern(a), v = intern(b);
        if (u == v) throw input_error("self-loop at vertex '" + a + "'");
        adj.resize(labels.size());
        if (std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    for (const auto& v : isolated_vertices) intern(v);
    adj.resize(labels.size());

    std::size_t n = labels.size();
    if (n == 0) throw input_error("graph has no vertices");
    std::vector<std::vector<rat>> dist(n, std::vector<rat>(n, rat(-1)));
    for (std::size_t s = 0; s < n; ++s) {
        dist[s][s] = rat(0);
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : adj[u])
                if (dist[s][v].is_negative()) {
                    dist[s][v] = dist[s][u] + rat(1);
                    queue.push_back(v);
                }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (dist[s][v].is_negative()) throw disconnected_graph(labels[s], labels[v]);
    }
    return validate(std::move(dist), std::move(labels));
}

fin_metric scale_space(const fin_metric& x, const rat& t) {
    if (!t.is_positive()) throw std::domain_error("scale_space: factor must be positive");
    fin_metric m = x;
    for (auto& row : m.dist)
        for (auto& v : row) v *= t;
    return m;
}

std::pair<fin_metric, std::vector<std::size_t>> skeletonize(const fin_metric& x) {
    std::size_t n = x.size();
    // Mutual distance zero is transitive thanks to the triangle inequality,
    // so a single sweep assigns classes.
    std::vector<std::size_t> cls(n, n);
    std::vector<std::size_t> first_member;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != n) continue;
        cls[i] = first_member.size();
        for (std::size_t j = i + 1; j < n; ++j)
            if (cls[j] == n && x.d(i, j).is_zero() && x.d(j, i).is_zero()) cls[j] = cls[i];
        first_member.push_back(i);
    }

    std::size_t k = first_member.size();
    fin_metric out;
    out.labels.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        // Representative label: lexicographically smallest in the class.
        std::string best;
        for (std::size_t i = 0; i < n; ++i)
            if (cls[i] == c && (best.empty() || x.labels[i] < best)) best = x.labels[i];
        out.labels[c] = best;
    }
    out.dist.assign(k, std::vector<rat>(k, rat(0)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) out.dist[a][b] = x.d(first_member[a], first_member[b]);
    out.symmetric = x.symmetric;
    out.skeletal = true;
    return {std::move(out), std::move(cls)};
}

bool between(const fin_metric& m, std::size_t x, std::size_t y, std::size_t z) {
    return m.d(x, y) + m.d(y, z) == m.d(x, z);
}

bool strictly_between(const fin_metric& m, std::size_t x, std::size_t y, std::size_t z) {
    return x != y && y != z && between(m, x, y, z);
}

bool adjacent(const fin_metric& m, std::size_t x, std::size_t y) {
    if (x == y) throw same_point();
    for (std::size_t w = 0; w < m.size(); ++w)
        if (strictly_between(m, x, w, y)) return false;
    return true;
}

std::optional<four_cut> find_4cut(const fin_metric& m) {
    std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y1 = 0; y1 < n; ++y1)
            for (std::size_t y2 = 0; y2 < n; ++y2) {
                if (y1 == y2 || !between(m, x, y1, y2)) continue;
                for (std::size_t z = 0; z < n; ++z)
                    if (between(m, y1, y2, z) &&
                        m.d(x, z) != m.d(x, y1) + m.d(y1, y2) + m.d(y2, z))
                        return four_cut{x, y1, y2, z};
            }
    return std::nullopt;
}

std::optional<geodetic_failure> find_geodetic_failure(const fin_metric& m) {
    std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
            if (x == z) continue;
            for (std::size_t y1 = 0; y1 < n; ++y1) {
                if (!between(m, x, y1, z)) continue;
                for (std::size_t y2 = 0; y2 < n; ++y2) {
                    if (!between(m, x, y2, z)) continue;
                    bool ordered = (between(m, x, y1, y2) && between(m, y1, y2, z)) ||
                                   (between(m, x, y2, y1) && between(m, y2, y1, z));
                    if (!ordered) return geodetic_failure{x, z, y1, y2};
                }
            }
        }
    return std::nullopt;
}

}  // namespace maghom
