// Acceptance gate: one self-contained scenario per line, each printing
// PASS/FAIL with its runtime.  Every expected value is either a closed form
// checked by hand or recomputed here by an independent method; tolerances and
// seeds are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "maghom/chains.hpp"
#include "maghom/check.hpp"
#include "maghom/homology.hpp"
#include "maghom/magnitude.hpp"
#include "maghom/metric.hpp"
#include "maghom/oracle.hpp"
#include "maghom/snf.hpp"

using namespace maghom;

namespace {

constexpr unsigned random_space_seed = 1;   // criterion 1 corpus
constexpr unsigned snf_suite_seed = 20240917;  // criterion 9 corpus
constexpr double numeric_rel_tol = 1e-9;    // criterion 10

struct outcome {
    bool ok = true;
    std::vector<std::string> details;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (details.size() < 8) details.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------ fixture spaces

std::vector<fin_metric> random_spaces() {
    std::mt19937 rng(random_space_seed);
    std::vector<fin_metric> out;
    for (int i = 0; i < 25; ++i) {
        std::uniform_int_distribution<std::size_t> size(1, 5);
        out.push_back(testgen::rand_symmetric_metric(rng, size(rng)));
    }
    return out;
}

fin_metric two_point(const rat& d) {
    return validate({{rat(0), d}, {d, rat(0)}}, {"a", "b"});
}

fin_metric complete_graph(std::size_t m) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto labels = testgen::point_labels(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(labels[i], labels[j]);
    return graph_to_metric(edges);
}

fin_metric cycle_graph(std::size_t m) {
    std::vector<std::pair<std::string, std::string>> edges;
    auto labels = testgen::point_labels(m);
    for (std::size_t i = 0; i < m; ++i) edges.emplace_back(labels[i], labels[(i + 1) % m]);
    return graph_to_metric(edges);
}

// ---------------------------------------------------- tree isomorphism types

using edge_list = std::vector<std::pair<std::size_t, std::size_t>>;

edge_list prufer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t s : seq) ++degree[s];
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    edge_list edges;
    for (std::size_t s : seq) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    std::size_t a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

std::string encode_rooted(std::size_t v, std::size_t parent,
                          const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<std::string> kids;
    for (std::size_t u : adj[v])
        if (u != parent) kids.push_back(encode_rooted(u, v, adj));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

// Canonical name: minimum rooted encoding over the (at most two) centers.
std::string tree_canon(const edge_list& edges, std::size_t n) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].size();
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    std::size_t alive = n;
    while (alive > 2) {
        std::vector<std::size_t> next;
        for (std::size_t v : layer) {
            removed[v] = true;
            --alive;
            for (std::size_t u : adj[v])
                if (!removed[u] && --degree[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::string best;
    for (std::size_t v = 0; v < n; ++v) {
        if (removed[v]) continue;
        std::string enc = encode_rooted(v, n, adj);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

// One representative edge list per isomorphism class of trees on n vertices.
std::vector<edge_list> all_trees(std::size_t n) {
    if (n == 2) return {{{0, 1}}};
    std::map<std::string, edge_list> classes;
    std::vector<std::size_t> seq(n - 2, 0);
    for (;;) {
        edge_list edges = prufer_decode(seq, n);
        classes.emplace(tree_canon(edges, n), edges);
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
        if (i == seq.size()) break;
        ++seq[i];
    }
    std::vector<edge_list> out;
    for (auto& [name, edges] : classes) out.push_back(edges);
    return out;
}

fin_metric tree_metric(const edge_list& edges, std::size_t n) {
    auto labels = testgen::point_labels(n);
    std::vector<std::pair<std::string, std::string>> named;
    for (auto [a, b] : edges) named.emplace_back(labels[a], labels[b]);
    return graph_to_metric(named);
}

// ------------------------------------------------------- integer matrix bits

using dense_mat = std::vector<std::vector<mpz_class>>;

dense_mat to_dense(const int_matrix& a) {
    dense_mat m(a.rows, std::vector<mpz_class>(a.cols, 0));
    for (const auto& e : a.entries) m[e.row][e.col] += e.value;
    return m;
}

dense_mat mat_mul(const dense_mat& a, const dense_mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    dense_mat out(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// Fraction-free determinant, used only to certify unimodularity.
mpz_class det_int(dense_mat m) {
    std::size_t n = m.size();
    mpz_class prev = 1;
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpz_class d = n == 0 ? mpz_class(1) : m[n - 1][n - 1];
    return neg ? mpz_class(-d) : d;
}

// Rank/torsion table keyed by (degree, grading key); label-independent.
std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::vector<mpz_class>>>
rank_table(const fin_metric& x, const rat& bound) {
    chain_basis basis = enumerate_generators(x, bound);
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::vector<mpz_class>>>
        out;
    for (const auto& [key, group] : compute_homology_table(x, basis))
        out[key] = {group.rank, group.torsion};
    return out;
}

// ----------------------------------------------------------------- criteria

outcome criterion_euler_random(const std::vector<fin_metric>& spaces) {
    outcome r;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        check_report rep = run_check(spaces[i], rat(5));
        r.require(rep.passed(), "reconciliation failed on random space " + std::to_string(i));
    }
    return r;
}

outcome criterion_two_point(const std::vector<fin_metric>& spaces) {
    outcome r;
    for (const fin_metric& x : spaces) {
        rat d = x.d(0, 1);
        mpz_class p = d.numerator(), q = d.denominator();
        poly den = poly::monomial(rat(1), 0) +
                   poly::monomial(rat(1), static_cast<std::size_t>(p.get_ui()));
        rat_fun expected(poly(2), den, q.get_ui());
        magnitude_result mag = magnitude(x);
        r.require(mag.value == expected, "magnitude != 2/(1+q^d) for d=" + d.str());

        chain_basis basis = enumerate_generators(x, d * rat(6));
        homology_table table = compute_homology_table(x, basis);
        r.require(table.size() == 7, "expected one homology group per degree 0..6");
        for (const auto& [key, group] : table) {
            auto [n, grading_key] = key;
            r.require(basis.grading_of(grading_key) == d * rat(static_cast<long>(n)),
                      "homology off the diagonal grading n*d");
            r.require(group.rank == 2 && group.torsion.empty(),
                      "H_" + std::to_string(n) + " != Z^2 for d=" + d.str());
        }
        for (std::size_t n = 0; n + 1 <= 6; ++n) {
            homology_group off = homology_at(x, basis, n + 1, d * rat(static_cast<long>(n)));
            r.require(off.rank == 0 && off.torsion.empty(), "nonzero group off the diagonal");
        }
    }
    return r;
}

outcome criterion_complete_graphs(const std::vector<fin_metric>& spaces) {
    outcome r;
    for (const fin_metric& x : spaces) {
        long m = static_cast<long>(x.size());
        rat_fun expected(poly(m), poly(std::vector<rat>{rat(1), rat(m - 1)}), 1);
        r.require(magnitude(x).value == expected,
                  "magnitude != m/(1+(m-1)q) for m=" + std::to_string(m));

        chain_basis basis = enumerate_generators(x, rat(2));
        homology_group h1 = homology_at(x, basis, 1, rat(1));
        r.require(h1.rank == static_cast<std::size_t>(m * (m - 1)) && h1.torsion.empty(),
                  "H_1 at grading 1 != m(m-1) for m=" + std::to_string(m));

        r.require(has_no_4cuts(x) && is_geodetic(x), "complete graph predicates");
        auto predicted = h2_oracle(x, rat(2));
        homology_group h2 = homology_at(x, basis, 2, rat(2));
        r.require(predicted && *predicted == h2.rank && h2.torsion.empty(),
                  "H_2 oracle mismatch for m=" + std::to_string(m));
    }
    return r;
}

outcome criterion_trees(const std::vector<fin_metric>& trees) {
    outcome r;
    for (const fin_metric& x : trees) {
        std::string tag = "tree on " + std::to_string(x.size()) + " vertices";
        r.require(has_no_4cuts(x), tag + ": unexpected 4-cut");
        r.require(is_geodetic(x), tag + ": unexpectedly not geodetic");

        chain_basis basis = enumerate_generators(x, rat(4));
        for (long l = 0; l <= 4; ++l) {
            auto predicted = h2_oracle(x, rat(l));
            homology_group h2 = homology_at(x, basis, 2, rat(l));
            r.require(predicted.has_value(), tag + ": oracle hypotheses should hold");
            r.require(predicted && *predicted == h2.rank && h2.torsion.empty(),
                      tag + ": H_2 oracle mismatch at grading " + std::to_string(l));
        }
        r.require(run_check(x, rat(4)).passed(), tag + ": reconciliation failed");
    }
    return r;
}

outcome criterion_cycles(const fin_metric& c4, const fin_metric& c5) {
    outcome r;
    r.require(!has_no_4cuts(c4), "C4 should have a 4-cut");
    r.require(!is_geodetic(c4), "C4 should not be geodetic");
    r.require(is_geodetic(c5), "C5 should be geodetic");
    r.require(run_check(c4, rat(4)).passed(), "C4 reconciliation failed at grading 4");
    return r;
}

outcome criterion_duplicate_invariance(const std::vector<fin_metric>& spaces) {
    outcome r;
    for (const fin_metric& x : spaces) {
        auto reference = rank_table(x, rat(3));
        for (std::size_t i = 0; i < x.size(); ++i) {
            fin_metric dup = testgen::duplicate_point(x, i, "copy");
            r.require(!dup.skeletal, "duplicate should break skeletality");
            auto [sk, classes] = skeletonize(dup);
            r.require(sk.size() == x.size(), "skeleton size changed");
            r.require(rank_table(sk, rat(3)) == reference,
                      "rank/torsion table changed after duplicating point " + std::to_string(i));
        }
    }
    return r;
}

outcome criterion_divergent(const std::vector<fin_metric>& spaces) {
    outcome r;
    for (std::size_t i = 0; i < spaces.size(); ++i)
        r.require(divergent_series_magnitude(spaces[i]).value == magnitude(spaces[i]).value,
                  "closed form != magnitude on space " + std::to_string(i));
    return r;
}

outcome criterion_chain_counts(const std::vector<fin_metric>& spaces) {
    outcome r;
    const rat bound(5);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const fin_metric& x = spaces[i];
        chain_basis basis = enumerate_generators(x, bound);
        auto eps = x.min_positive_distance();
        std::size_t max_n = eps ? static_cast<std::size_t>((bound / *eps).numerator().get_ui() /
                                                           (bound / *eps).denominator().get_ui())
                                : 0;
        std::vector<std::size_t> keys = basis.grading_keys();
        for (std::size_t n = 0; n <= max_n; ++n) {
            gen_poly wn = weight_sum(x, n);
            for (std::size_t key : keys) {
                rat grading = basis.grading_of(key);
                rat counted = wn.coeff(grading);
                r.require(counted == rat(static_cast<long>(basis.dim(n, key))),
                          "space " + std::to_string(i) + ": |basis(" + std::to_string(n) + ", " +
                              grading.str() + ")| != weight-sum coefficient");
            }
        }
    }
    return r;
}

outcome criterion_snf_suite() {
    outcome r;
    std::mt19937 rng(snf_suite_seed);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int_matrix a;
        a.rows = dims(rng);
        a.cols = dims(rng);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j) {
                long v = entry(rng);
                if (v != 0) a.entries.push_back({i, j, v});
            }
        snf_result s = snf(a, true);
        std::string tag = "trial " + std::to_string(trial);

        dense_mat product = mat_mul(mat_mul(s.u, to_dense(a)), s.v);
        dense_mat expected(a.rows, std::vector<mpz_class>(a.cols, 0));
        for (std::size_t k = 0; k < s.factors.size(); ++k) expected[k][k] = s.factors[k];
        r.require(product == expected, tag + ": U*A*V != diag(factors)");
        r.require(abs(det_int(s.u)) == 1, tag + ": U not unimodular");
        r.require(abs(det_int(s.v)) == 1, tag + ": V not unimodular");
        for (std::size_t k = 0; k + 1 < s.factors.size(); ++k)
            r.require(s.factors[k] > 0 && s.factors[k + 1] % s.factors[k] == 0,
                      tag + ": divisibility chain broken");
        r.require(snf(a, false).factors == s.factors, tag + ": sparse factors differ");
    }
    return r;
}

outcome criterion_numeric(const std::vector<fin_metric>& spaces) {
    outcome r;
    const double ts[] = {0.1, 1.0, 5.0};
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        rat_fun value = magnitude(spaces[i]).value;
        for (double t : ts) {
            double lu = magnitude_at(spaces[i], t);
            double exact = value.evaluate(std::exp(-t));
            double rel = std::fabs(lu - exact) / std::max(std::fabs(exact), 1e-300);
            r.require(rel <= numeric_rel_tol,
                      "space " + std::to_string(i) + " at t=" + std::to_string(t) +
                          ": relative error " + std::to_string(rel));
        }
    }
    return r;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* label, const outcome& r, double secs, double limit) {
        bool ok = r.ok && secs < limit;
        if (!ok) ++failures;
        std::printf("%2d  %s  %6.2fs  %s\n", id, ok ? "PASS" : "FAIL", secs, label);
        for (const auto& d : r.details) std::printf("      - %s\n", d.c_str());
        if (r.ok && secs >= limit)
            std::printf("      - runtime %.2fs exceeds the %.0fs budget\n", secs, limit);
    };
    auto timed = [&](int id, const char* label, double limit, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        outcome r = fn();
        report(id, label, r, seconds_since(t0), limit);
    };

    std::vector<fin_metric> random25 = random_spaces();
    std::vector<fin_metric> two_points = {two_point(rat(1)), two_point(rat(1, 2)),
                                          two_point(rat(3))};
    std::vector<fin_metric> completes;
    for (std::size_t m = 2; m <= 5; ++m) completes.push_back(complete_graph(m));
    std::vector<fin_metric> trees;
    std::map<std::size_t, std::size_t> tree_counts;
    for (std::size_t n = 2; n <= 7; ++n)
        for (const edge_list& edges : all_trees(n)) {
            trees.push_back(tree_metric(edges, n));
            ++tree_counts[n];
        }
    fin_metric c4 = cycle_graph(4), c5 = cycle_graph(5);

    // The tree enumerator must produce the known class counts, or criterion 4
    // would silently test the wrong corpus.
    {
        outcome r;
        std::map<std::size_t, std::size_t> expected{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {7, 11}};
        r.require(tree_counts == expected, "tree isomorphism-class counts are off");
        if (!r.ok) {
            report(0, "tree corpus sanity", r, 0.0, 1.0);
            return 1;
        }
    }

    std::vector<fin_metric> spaces_1_to_5 = random25;
    spaces_1_to_5.insert(spaces_1_to_5.end(), two_points.begin(), two_points.end());
    spaces_1_to_5.insert(spaces_1_to_5.end(), completes.begin(), completes.end());
    spaces_1_to_5.insert(spaces_1_to_5.end(), trees.begin(), trees.end());
    spaces_1_to_5.push_back(c4);
    spaces_1_to_5.push_back(c5);

    std::vector<fin_metric> duplication_targets = {completes[1], trees[2]};
    for (const fin_metric& x : random25)
        if (x.size() >= 4) {
            duplication_targets.push_back(x);
            break;
        }

    timed(1, "Euler reconciliation exact on 25 random symmetric spaces at grading <= 5", 60,
          [&] { return criterion_euler_random(random25); });
    timed(2, "two-point spaces d in {1, 1/2, 3}: magnitude 2/(1+q^d), diagonal homology Z^2", 1,
          [&] { return criterion_two_point(two_points); });
    timed(3, "complete graphs K_2..K_5: magnitude, H_1 = oriented edges, predicates, H_2 oracle",
          5, [&] { return criterion_complete_graphs(completes); });
    timed(4, "all 24 tree classes on 2..7 vertices: predicates, H_2 oracle, reconciliation", 30,
          [&] { return criterion_trees(trees); });
    timed(5, "cycles: C4 fails both predicates yet reconciles; C5 geodetic", 10,
          [&] { return criterion_cycles(c4, c5); });
    timed(6, "duplicating any point then skeletonizing preserves rank/torsion tables", 10,
          [&] { return criterion_duplicate_invariance(duplication_targets); });
    timed(7, "divergent-series closed form equals magnitude on every space above", 60,
          [&] { return criterion_divergent(spaces_1_to_5); });
    timed(8, "basis sizes match weight-sum coefficients on the random corpus", 60,
          [&] { return criterion_chain_counts(random25); });
    timed(9, "200 random Smith forms: unimodular transforms, diagonal, divisibility", 5,
          [&] { return criterion_snf_suite(); });
    timed(10, "floating magnitude agrees with the exact value at t in {0.1, 1, 5}", 60,
          [&] { return criterion_numeric(random25); });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
