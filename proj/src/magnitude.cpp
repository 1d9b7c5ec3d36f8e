#include "maghom/magnitude.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "maghom/errors.hpp"

namespace maghom {

namespace {

// Fraction-free (Bareiss) determinant over an integral domain.  R needs
// is_zero(), *, -, unary -, and exact static division.
template <class R>
R det_bareiss(std::vector<std::vector<R>> m, R one) {
    std::size_t n = m.size();
    if (n == 0) return one;
    R prev = std::move(one);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return R(m[k][k] - m[k][k]);  // zero of the ring
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = R::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = m[i][k] - m[i][k];
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Polynomials in an auxiliary variable u whose coefficients are polynomials
// in t; just enough ring structure for det_bareiss.
struct upol {
    std::vector<poly> c;  // c[k] multiplies u^k

    upol() = default;
    explicit upol(std::vector<poly> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    poly coeff(std::size_t k) const { return k < c.size() ? c[k] : poly(); }

    upol operator-() const {
        upol r = *this;
        for (auto& p : r.c) p = -p;
        return r;
    }
    friend upol operator-(const upol& a, const upol& b) {
        upol r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
        for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
        r.trim();
        return r;
    }
    friend upol operator*(const upol& a, const upol& b) {
        if (a.is_zero() || b.is_zero()) return upol();
        upol r;
        r.c.assign(a.c.size() + b.c.size() - 1, poly());
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    // Division known to be exact in (Q[t])[u].
    static upol exact_div(const upol& a, const upol& b) {
        if (b.is_zero()) throw std::domain_error("upol: division by zero");
        if (a.is_zero()) return upol();
        if (a.degree() < b.degree()) throw std::logic_error("upol: division not exact");
        std::vector<poly> rem = a.c;
        std::size_t db = static_cast<std::size_t>(b.degree());
        std::vector<poly> q(a.c.size() - db);
        for (std::size_t k = q.size(); k-- > 0;) {
            poly qc = poly::exact_div(rem[k + db], b.c[db]);
            q[k] = qc;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= qc * b.c[j];
        }
        for (const auto& p : rem)
            if (!p.is_zero()) throw std::logic_error("upol: division not exact");
        return upol(std::move(q));
    }
    // Value at u = -1: alternating coefficient sum.
    poly at_minus_one() const {
        poly s;
        for (std::size_t k = 0; k < c.size(); ++k) s += (k % 2 == 0) ? c[k] : -c[k];
        return s;
    }
};

std::size_t scaled_degree(const rat& distance, unsigned long d) {
    rat deg = distance * rat(static_cast<long>(d));
    mpz_class k = deg.numerator();
    if (!k.fits_ulong_p()) throw std::overflow_error("zeta_matrix: scaled distance too large");
    return k.get_ui();
}

// Z - I as a matrix of polynomials in t (zero diagonal for skeletal input).
std::vector<std::vector<poly>> zeta_minus_identity(const zeta& z) {
    std::size_t n = z.size();
    auto w = z.entries;
    for (std::size_t i = 0; i < n; ++i) w[i][i] -= poly(1);
    return w;
}

}  // namespace

zeta zeta_matrix(const fin_metric& x) {
    if (!x.skeletal) throw not_skeletal();
    zeta z;
    z.scale = distance_scale(x);
    std::size_t n = x.size();
    z.entries.assign(n, std::vector<poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            z.entries[i][j] = poly::monomial(rat(1), scaled_degree(x.d(i, j), z.scale));
    return z;
}

magnitude_result magnitude(const fin_metric& x) {
    zeta z = zeta_matrix(x);
    std::size_t n = z.size();
    std::vector<std::vector<rat_fun>> a(n, std::vector<rat_fun>(n));
    std::vector<std::vector<rat_fun>> inv(n, std::vector<rat_fun>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = rat_fun::from_poly(z.entries[i][j], z.scale);
            inv[i][j] = rat_fun::from_poly(poly(i == j ? 1 : 0), z.scale);
        }

    // Gauss-Jordan; pivot = first row with a nonzero entry in the column.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw singular_zeta();
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        rat_fun scale = rat_fun(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            rat_fun f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }

    magnitude_result res;
    res.scale = z.scale;
    res.weighting.assign(n, rat_fun());
    res.coweighting.assign(n, rat_fun());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            res.weighting[i] += inv[i][j];
            res.coweighting[j] += inv[i][j];
            res.value += inv[i][j];
        }
    res.inverse = std::move(inv);
    return res;
}

std::vector<std::pair<rat, rat>> magnitude_series(const fin_metric& x, const rat& max_grading) {
    if (max_grading.is_negative()) throw std::domain_error("magnitude_series: negative order");
    magnitude_result m = magnitude(x);
    // Gradings k/D for k = 0 .. floor(L*D).
    rat scaled = max_grading * rat(static_cast<long>(m.scale));
    mpz_class kmax_z = scaled.numerator() / scaled.denominator();
    std::size_t kmax = kmax_z.get_ui();
    std::vector<rat> coeffs = m.value.series_expand(kmax);
    std::vector<std::pair<rat, rat>> out;
    for (std::size_t k = 0; k <= kmax; ++k)
        if (!coeffs[k].is_zero())
            out.emplace_back(rat(static_cast<long>(k), static_cast<long>(m.scale)), coeffs[k]);
    return out;
}

gen_poly weight_sum(const fin_metric& x, std::size_t n) {
    zeta z = zeta_matrix(x);
    std::size_t pts = z.size();
    auto w = zeta_minus_identity(z);
    // (Z - I)^n, then sum the entries.
    std::vector<std::vector<poly>> p(pts, std::vector<poly>(pts));
    for (std::size_t i = 0; i < pts; ++i) p[i][i] = poly(1);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::vector<poly>> next(pts, std::vector<poly>(pts));
        for (std::size_t i = 0; i < pts; ++i)
            for (std::size_t j = 0; j < pts; ++j)
                for (std::size_t k = 0; k < pts; ++k) next[i][j] += p[i][k] * w[k][j];
        p = std::move(next);
    }
    poly total;
    for (const auto& row : p)
        for (const auto& v : row) total += v;
    return unscale_exponents(total, z.scale);
}

gen_poly partial_euler(const fin_metric& x, std::size_t max_degree) {
    zeta z = zeta_matrix(x);
    std::size_t pts = z.size();
    auto w = zeta_minus_identity(z);
    std::vector<std::vector<poly>> p(pts, std::vector<poly>(pts));
    for (std::size_t i = 0; i < pts; ++i) p[i][i] = poly(1);
    poly acc;
    for (std::size_t n = 0;; ++n) {
        poly total;
        for (const auto& row : p)
            for (const auto& v : row) total += v;
        acc += (n % 2 == 0) ? total : -total;
        if (n == max_degree) break;
        std::vector<std::vector<poly>> next(pts, std::vector<poly>(pts));
        for (std::size_t i = 0; i < pts; ++i)
            for (std::size_t j = 0; j < pts; ++j)
                for (std::size_t k = 0; k < pts; ++k) next[i][j] += p[i][k] * w[k][j];
        p = std::move(next);
    }
    return unscale_exponents(acc, z.scale);
}

divergent_series divergent_series_magnitude(const fin_metric& x) {
    zeta z = zeta_matrix(x);
    std::size_t n = z.size();
    auto w = zeta_minus_identity(z);

    // m = I - (Z - I)u; j = all-ones (constant in u).
    std::vector<std::vector<upol>> m(n, std::vector<upol>(n));
    std::vector<std::vector<upol>> m_plus_j(n, std::vector<upol>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = upol({poly(i == j ? 1 : 0), -w[i][j]});
            m_plus_j[i][j] = upol({poly(i == j ? 2 : 1), -w[i][j]});
        }

    upol one({poly(1)});
    upol det = det_bareiss(m, one);
    upol det_shifted = det_bareiss(m_plus_j, one);
    // Rank-one update: det(A + ones) = det(A) + entry sum of adj(A).
    upol adj_sum = det_shifted - det;

    divergent_series out;
    out.scale = z.scale;
    out.det_u = det.c;
    out.adj_sum_u = adj_sum.c;
    out.value = rat_fun(adj_sum.at_minus_one(), det.at_minus_one(), z.scale);
    return out;
}

poly det_leading_term(const fin_metric& x) {
    zeta z = zeta_matrix(x);
    poly det = det_bareiss(z.entries, poly(1));
    if (det.coeff(0) != rat(1))
        throw std::logic_error("det(Z) constant term is not 1: arithmetic bug");
    return det;
}

double magnitude_at(const fin_metric& x, double tval) {
    if (tval <= 0) throw std::domain_error("magnitude_at: tval must be positive");
    std::size_t n = x.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = std::exp(-tval * x.d(i, j).to_double());
    std::vector<double> b(n, 1.0);

    // LU solve with partial pivoting: Z * w = ones, answer is sum(w).
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12) throw singular_evaluation();
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    double total = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * b[j];
        b[i] = s / a[i][i];
        total += b[i];
    }
    return total;
}

}  // namespace maghom
