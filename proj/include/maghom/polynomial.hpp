#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maghom/rat.hpp"

namespace maghom {

// Dense univariate polynomial over the rationals.  Coefficient k multiplies
// t^k; the trailing coefficient is always nonzero (the zero polynomial stores
// no coefficients).
class poly {
public:
    poly() = default;
    poly(const rat& constant);
    poly(long constant) : poly(rat(constant)) {}
    explicit poly(std::vector<rat> coeffs);
    static poly monomial(const rat& coeff, std::size_t degree);

    const std::vector<rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : rat(0); }
    rat leading() const;

    poly operator-() const;
    poly& operator+=(const poly& o);
    poly& operator-=(const poly& o);
    poly& operator*=(const rat& s);
    friend poly operator+(poly a, const poly& b) { return a += b; }
    friend poly operator-(poly a, const poly& b) { return a -= b; }
    friend poly operator*(const poly& a, const poly& b);
    friend poly operator*(poly a, const rat& s) { return a *= s; }
    friend poly operator*(const rat& s, poly a) { return a *= s; }

    friend bool operator==(const poly& a, const poly& b) { return a.c_ == b.c_; }

    // Quotient and remainder of division by a nonzero polynomial.
    static std::pair<poly, poly> divmod(const poly& a, const poly& b);
    // Division that is known to be exact; throws std::logic_error otherwise.
    static poly exact_div(const poly& a, const poly& b);
    // Monic greatest common divisor (Euclid's algorithm).
    static poly gcd(poly a, poly b);

    double evaluate(double t0) const;
    rat evaluate(const rat& t0) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<rat> c_;

    void trim();
};

}  // namespace maghom
