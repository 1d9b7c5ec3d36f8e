#include "maghom/snf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace maghom {

namespace {

// Re-establish d1 | d2 | ... by repeated adjacent gcd/lcm replacement (each
// step is realizable by unimodular operations, so the result is the true
// invariant-factor chain of the diagonal).
void fix_divisibility_chain(std::vector<mpz_class>& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] % d[i] == 0) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[i + 1].get_mpz_t());
            l = d[i] / g * d[i + 1];
            d[i] = g;
            d[i + 1] = l;
            changed = true;
        }
    }
}

// Dense classical reduction carrying the transforms; fine for small inputs.
snf_result snf_dense(const int_matrix& a) {
    std::size_t nr = a.rows, nc = a.cols;
    std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc, 0));
    for (const auto& e : a.entries) m[e.row][e.col] += e.value;
    std::vector<std::vector<mpz_class>> u(nr, std::vector<mpz_class>(nr, 0));
    std::vector<std::vector<mpz_class>> v(nc, std::vector<mpz_class>(nc, 0));
    for (std::size_t i = 0; i < nr; ++i) u[i][i] = 1;
    for (std::size_t j = 0; j < nc; ++j) v[j][j] = 1;

    auto row_sub = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < nc; ++j) m[dst][j] -= q * m[src][j];
        for (std::size_t j = 0; j < nr; ++j) u[dst][j] -= q * u[src][j];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < nr; ++i) m[i][dst] -= q * m[i][src];
        for (std::size_t i = 0; i < nc; ++i) v[i][dst] -= q * v[i][src];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(m[i], m[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < nr; ++r) std::swap(m[r][i], m[r][j]);
        for (std::size_t r = 0; r < nc; ++r) std::swap(v[r][i], v[r][j]);
    };

    std::size_t steps = std::min(nr, nc);
    std::size_t s = 0;
    for (; s < steps; ++s) {
        // Minimal-absolute-value pivot with lexicographic tie-break.
        std::size_t pi = s, pj = s;
        bool found = false;
        mpz_class best;
        for (std::size_t i = s; i < nr; ++i)
            for (std::size_t j = s; j < nc; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class av = abs(m[i][j]);
                if (!found || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != s) row_swap(s, pi);
        if (pj != s) col_swap(s, pj);

        for (;;) {
            bool again = false;
            for (std::size_t i = s + 1; i < nr && !again; ++i) {
                if (m[i][s] == 0) continue;
                mpz_class q = m[i][s] / m[s][s];
                if (q != 0) row_sub(i, s, q);
                if (m[i][s] != 0) {
                    row_swap(i, s);
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = s + 1; j < nc && !again; ++j) {
                if (m[s][j] == 0) continue;
                mpz_class q = m[s][j] / m[s][s];
                if (q != 0) col_sub(j, s, q);
                if (m[s][j] != 0) {
                    col_swap(j, s);
                    again = true;
                }
            }
            if (again) continue;
            // Row and column clear; make the pivot divide the rest of the
            // submatrix before moving on.
            bool divides = true;
            for (std::size_t i = s + 1; i < nr && divides; ++i)
                for (std::size_t j = s + 1; j < nc; ++j)
                    if (m[i][j] % m[s][s] != 0) {
                        row_sub(s, i, mpz_class(-1));  // pull row i into row s
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (m[s][s] < 0) {
            for (std::size_t j = 0; j < nc; ++j) m[s][j] = -m[s][j];
            for (std::size_t j = 0; j < nr; ++j) u[s][j] = -u[s][j];
        }
    }

    snf_result out;
    for (std::size_t k = 0; k < s; ++k)
        if (m[k][k] != 0) out.factors.push_back(m[k][k]);
    out.rank = out.factors.size();
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

// Sparse reduction, factors only.  Rows are maps column -> value; a column
// index tracks which rows touch each column; +-1 entries are preferred pivots
// (no coefficient growth, which keeps boundary-matrix reduction fast).
class sparse_reducer {
public:
    explicit sparse_reducer(const int_matrix& a) : row_(a.rows), col_rows_(a.cols) {
        for (const auto& e : a.entries) {
            mpz_class& v = row_[e.row][e.col];
            v += e.value;
        }
        for (std::size_t r = 0; r < row_.size(); ++r)
            for (auto it = row_[r].begin(); it != row_[r].end();) {
                if (it->second == 0) {
                    it = row_[r].erase(it);
                } else {
                    col_rows_[it->first].insert(r);
                    if (is_unit(it->second)) ones_.insert({r, it->first});
                    ++it;
                }
            }
    }

    std::vector<mpz_class> reduce() {
        std::vector<mpz_class> diag;
        std::size_t pr, pc;
        while (pick_pivot(pr, pc)) {
            isolate(pr, pc);
            diag.push_back(abs(row_[pr][pc]));
            erase_entry(pr, pc);
        }
        fix_divisibility_chain(diag);
        return diag;
    }

private:
    std::vector<std::map<std::size_t, mpz_class>> row_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::set<std::pair<std::size_t, std::size_t>> ones_;

    static bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

    void set_entry(std::size_t r, std::size_t c, const mpz_class& v) {
        if (v == 0) {
            erase_entry(r, c);
            return;
        }
        row_[r][c] = v;
        col_rows_[c].insert(r);
        if (is_unit(v)) ones_.insert({r, c});
    }

    void erase_entry(std::size_t r, std::size_t c) {
        row_[r].erase(c);
        col_rows_[c].erase(r);
    }

    // row[dst] -= q * row[src]
    void row_sub(std::size_t dst, std::size_t src, const mpz_class& q) {
        for (const auto& [c, v] : row_[src]) {
            auto it = row_[dst].find(c);
            mpz_class nv = (it == row_[dst].end() ? mpz_class(0) : it->second) - q * v;
            set_entry(dst, c, nv);
        }
    }

    bool pick_pivot(std::size_t& pr, std::size_t& pc) {
        while (!ones_.empty()) {
            auto [r, c] = *ones_.begin();
            auto it = row_[r].find(c);
            if (it == row_[r].end() || !is_unit(it->second)) {
                ones_.erase(ones_.begin());
                continue;
            }
            pr = r;
            pc = c;
            return true;
        }
        bool found = false;
        mpz_class best;
        for (std::size_t r = 0; r < row_.size(); ++r)
            for (const auto& [c, v] : row_[r]) {
                mpz_class av = abs(v);
                if (!found || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        return found;
    }

    // Clear column pc and row pr until (pr, pc) is the only nonzero in both;
    // every nonzero remainder strictly shrinks the pivot, so this ends.
    void isolate(std::size_t& pr, std::size_t& pc) {
        for (;;) {
            bool moved = false;
            std::vector<std::size_t> rows_here(col_rows_[pc].begin(), col_rows_[pc].end());
            for (std::size_t r : rows_here) {
                if (r == pr) continue;
                auto it = row_[r].find(pc);
                if (it == row_[r].end()) continue;
                mpz_class q = it->second / row_[pr][pc];
                if (q != 0) row_sub(r, pr, q);
                it = row_[r].find(pc);
                if (it != row_[r].end() && it->second != 0) {
                    pr = r;  // smaller remainder becomes the pivot
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // Column ops touch only row pr now that the column is clear.
            mpz_class p = row_[pr][pc];
            std::vector<std::pair<std::size_t, mpz_class>> others(row_[pr].begin(), row_[pr].end());
            for (const auto& [c, v] : others) {
                if (c == pc) continue;
                mpz_class rem = v % p;  // v - (v/p)*p, truncated like the row case
                if (rem == 0) {
                    erase_entry(pr, c);
                } else {
                    set_entry(pr, c, rem);
                    pc = c;
                    moved = true;
                    break;
                }
            }
            if (!moved) return;
        }
    }
};

}  // namespace

snf_result snf(const int_matrix& a, bool want_transforms) {
    if (want_transforms) return snf_dense(a);
    snf_result out;
    out.factors = sparse_reducer(a).reduce();
    out.rank = out.factors.size();
    return out;
}

std::size_t int_rank(const int_matrix& a) { return snf(a, false).rank; }

}  // namespace maghom
