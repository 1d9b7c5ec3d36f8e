#include "maghom/ratfun.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "maghom/errors.hpp"

namespace maghom {

unsigned long common_scale(const std::vector<gen_poly>& ps) {
    mpz_class d(1);
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.denominator().get_mpz_t());
    if (!d.fits_ulong_p()) throw std::overflow_error("common_scale: scale too large");
    return d.get_ui();
}

poly scale_exponents(const gen_poly& a, unsigned long D) {
    std::vector<rat> coeffs;
    for (const auto& [e, c] : a.terms()) {
        rat deg = e * rat(static_cast<long>(D));
        if (!deg.is_integer()) throw std::logic_error("scale_exponents: D does not clear denominators");
        mpz_class k = deg.numerator();
        if (!k.fits_ulong_p()) throw std::overflow_error("scale_exponents: degree too large");
        std::size_t idx = k.get_ui();
        if (coeffs.size() <= idx) coeffs.resize(idx + 1, rat(0));
        coeffs[idx] = c;
    }
    return poly(std::move(coeffs));
}

gen_poly unscale_exponents(const poly& p, unsigned long D) {
    gen_poly g;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const rat& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        g += gen_poly::monomial(c, rat(static_cast<long>(k), static_cast<long>(D)));
    }
    return g;
}

std::pair<unsigned long, std::vector<poly>> scale_exponents(const std::vector<gen_poly>& ps) {
    unsigned long D = common_scale(ps);
    std::vector<poly> scaled;
    scaled.reserve(ps.size());
    for (const auto& p : ps) scaled.push_back(scale_exponents(p, D));
    return {D, std::move(scaled)};
}

namespace {

// Substitute t -> t^k (used to align two scales D1 | D2).
poly stretch(const poly& p, unsigned long k) {
    if (k == 1 || p.is_zero()) return p;
    std::vector<rat> c(static_cast<std::size_t>(p.degree()) * k + 1, rat(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * k] = p.coeffs()[i];
    return poly(std::move(c));
}

}  // namespace

rat_fun::rat_fun(poly num, poly den, unsigned long scale)
    : num_(std::move(num)), den_(std::move(den)), scale_(scale) {
    if (den_.is_zero()) throw std::domain_error("rat_fun: zero denominator");
    if (scale_ == 0) throw std::domain_error("rat_fun: zero scale");
    canonicalize();
}

rat_fun rat_fun::from_poly(poly p, unsigned long scale) {
    return rat_fun(std::move(p), poly(rat(1)), scale);
}

void rat_fun::canonicalize() {
    if (num_.is_zero()) {
        den_ = poly(rat(1));
        return;
    }
    poly g = poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly::exact_div(num_, g);
        den_ = poly::exact_div(den_, g);
    }
    rat low(0);
    for (const auto& c : den_.coeffs()) {
        if (!c.is_zero()) {
            low = c;
            break;
        }
    }
    rat inv = rat(1) / low;
    num_ *= inv;
    den_ *= inv;
}

std::pair<rat_fun, rat_fun> rat_fun::aligned(const rat_fun& a, const rat_fun& b) {
    if (a.scale_ == b.scale_) return {a, b};
    unsigned long d = std::lcm(a.scale_, b.scale_);
    rat_fun ra = a, rb = b;
    ra.num_ = stretch(a.num_, d / a.scale_);
    ra.den_ = stretch(a.den_, d / a.scale_);
    ra.scale_ = d;
    rb.num_ = stretch(b.num_, d / b.scale_);
    rb.den_ = stretch(b.den_, d / b.scale_);
    rb.scale_ = d;
    return {ra, rb};
}

rat_fun rat_fun::operator-() const {
    rat_fun r = *this;
    r.num_ = -r.num_;
    return r;
}

rat_fun operator+(const rat_fun& a, const rat_fun& b) {
    auto [x, y] = rat_fun::aligned(a, b);
    return rat_fun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, x.scale_);
}

rat_fun operator-(const rat_fun& a, const rat_fun& b) { return a + (-b); }

rat_fun operator*(const rat_fun& a, const rat_fun& b) {
    auto [x, y] = rat_fun::aligned(a, b);
    return rat_fun(x.num_ * y.num_, x.den_ * y.den_, x.scale_);
}

rat_fun operator/(const rat_fun& a, const rat_fun& b) {
    if (b.is_zero()) throw std::domain_error("rat_fun: division by zero");
    auto [x, y] = rat_fun::aligned(a, b);
    return rat_fun(x.num_ * y.den_, x.den_ * y.num_, x.scale_);
}

bool operator==(const rat_fun& a, const rat_fun& b) {
    auto [x, y] = rat_fun::aligned(a, b);
    return x.num_ == y.num_ && x.den_ == y.den_;
}

std::vector<rat> rat_fun::series_expand(std::size_t order) const {
    rat d0 = den_.coeff(0);
    if (d0.is_zero()) throw zero_constant_denominator();
    std::vector<rat> out(order + 1, rat(0));
    for (std::size_t k = 0; k <= order; ++k) {
        rat acc = num_.coeff(k);
        for (std::size_t j = 1; j <= k; ++j) acc -= den_.coeff(j) * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

double rat_fun::evaluate(double q0) const {
    double t0 = std::pow(q0, 1.0 / static_cast<double>(scale_));
    double d = den_.evaluate(t0);
    if (std::abs(d) < 1e-12) throw singular_evaluation();
    return num_.evaluate(t0) / d;
}

std::string rat_fun::str() const {
    gen_poly n = unscale_exponents(num_, scale_);
    gen_poly d = unscale_exponents(den_, scale_);
    if (d == gen_poly(rat(1))) return n.str();
    return "(" + n.str() + ") / (" + d.str() + ")";
}

}  // namespace maghom
