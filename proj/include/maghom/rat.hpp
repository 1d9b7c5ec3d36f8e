#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maghom {

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// Backed by GMP's mpq_class, which maintains exactly that canonical form.
class rat {
public:
    rat() : v_(0) {}
    rat(long n) : v_(n) {}
    rat(long num, long den);
    explicit rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    rat(mpz_class num, mpz_class den);

    // Accepts "p/q", "n", and decimal literals like "1.5" (parsed exactly as 3/2).
    static rat parse(std::string_view s);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    rat operator-() const { return rat(mpq_class(-v_)); }
    rat& operator+=(const rat& o) { v_ += o.v_; return *this; }
    rat& operator-=(const rat& o) { v_ -= o.v_; return *this; }
    rat& operator*=(const rat& o) { v_ *= o.v_; return *this; }
    rat& operator/=(const rat& o);

    friend rat operator+(rat a, const rat& b) { return a += b; }
    friend rat operator-(rat a, const rat& b) { return a -= b; }
    friend rat operator*(rat a, const rat& b) { return a *= b; }
    friend rat operator/(rat a, const rat& b) { return a /= b; }

    friend bool operator==(const rat& a, const rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const rat& a, const rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline rat abs(const rat& r) { return r.is_negative() ? -r : r; }

}  // namespace maghom
