#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maghom/genpoly.hpp"
#include "maghom/polynomial.hpp"

namespace maghom {

// Common scale for a family of generalized polynomials: the least common
// multiple of all exponent denominators, so that every exponent ell maps to
// the integer degree ell*D of t = q^(1/D).
unsigned long common_scale(const std::vector<gen_poly>& ps);

// Rewrite a generalized polynomial in the scaled variable t = q^(1/D).
// D must be a multiple of every exponent denominator.
poly scale_exponents(const gen_poly& a, unsigned long D);

// Inverse of scale_exponents: t^k becomes q^(k/D).
gen_poly unscale_exponents(const poly& p, unsigned long D);

// Scale a whole family with one shared D.
std::pair<unsigned long, std::vector<poly>> scale_exponents(const std::vector<gen_poly>& ps);

// Rational function num/den over the rationals in t = q^(1/D).  Canonical
// form: gcd(num, den) = 1 and the denominator's lowest-order nonzero
// coefficient is exactly 1, so structural equality is mathematical equality.
class rat_fun {
public:
    rat_fun() : den_(rat(1)) {}
    rat_fun(const rat& constant) : num_(constant), den_(rat(1)) {}
    rat_fun(long constant) : rat_fun(rat(constant)) {}
    rat_fun(poly num, poly den, unsigned long scale = 1);
    static rat_fun from_poly(poly p, unsigned long scale = 1);

    const poly& num() const { return num_; }
    const poly& den() const { return den_; }
    unsigned long scale() const { return scale_; }
    bool is_zero() const { return num_.is_zero(); }

    rat_fun operator-() const;
    friend rat_fun operator+(const rat_fun& a, const rat_fun& b);
    friend rat_fun operator-(const rat_fun& a, const rat_fun& b);
    friend rat_fun operator*(const rat_fun& a, const rat_fun& b);
    friend rat_fun operator/(const rat_fun& a, const rat_fun& b);
    rat_fun& operator+=(const rat_fun& o) { return *this = *this + o; }
    rat_fun& operator-=(const rat_fun& o) { return *this = *this - o; }
    rat_fun& operator*=(const rat_fun& o) { return *this = *this * o; }
    rat_fun& operator/=(const rat_fun& o) { return *this = *this / o; }

    friend bool operator==(const rat_fun& a, const rat_fun& b);

    // Power-series coefficients of t^0 .. t^order by long division.  Throws
    // zero_constant_denominator when the denominator vanishes at t = 0.
    std::vector<rat> series_expand(std::size_t order) const;

    // Floating evaluation at q = q0 via t0 = q0^(1/D).  Throws
    // singular_evaluation when |den(t0)| < 1e-12.
    double evaluate(double q0) const;

    // Render with q-exponents, e.g. "(2) / (1 + q^(1/2))".
    std::string str() const;

private:
    poly num_;
    poly den_;
    unsigned long scale_ = 1;

    void canonicalize();
    static std::pair<rat_fun, rat_fun> aligned(const rat_fun& a, const rat_fun& b);
};

}  // namespace maghom
