#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maghom/rat.hpp"

namespace maghom {

// Generalized polynomial: finite sum of terms a * q^e with rational a and
// rational exponent e >= 0, kept sorted by strictly increasing exponent with
// no zero coefficients stored.
class gen_poly {
public:
    using term = std::pair<rat, rat>;  // (exponent, coefficient)

    gen_poly() = default;
    gen_poly(const rat& constant);
    gen_poly(long constant) : gen_poly(rat(constant)) {}
    static gen_poly monomial(const rat& coeff, const rat& exponent);

    const std::vector<term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Sign in the ordered field where q is a positive infinitesimal: the sign
    // of the coefficient at the smallest exponent of the support.
    int sign() const;

    // Coefficient at a given exponent (zero if absent).
    rat coeff(const rat& exponent) const;

    gen_poly operator-() const;
    gen_poly& operator+=(const gen_poly& o);
    gen_poly& operator-=(const gen_poly& o);
    friend gen_poly operator+(gen_poly a, const gen_poly& b) { return a += b; }
    friend gen_poly operator-(gen_poly a, const gen_poly& b) { return a -= b; }
    friend gen_poly operator*(const gen_poly& a, const gen_poly& b);

    friend bool operator==(const gen_poly& a, const gen_poly& b) { return a.terms_ == b.terms_; }

    // Sum of a_i * q0^{e_i} in floating point.
    double evaluate(double q0) const;

    std::string str() const;

private:
    std::vector<term> terms_;

    void add_term(const rat& exponent, const rat& coeff);
};

}  // namespace maghom
