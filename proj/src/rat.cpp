#include "maghom/rat.hpp"

#include <cctype>
#include <stdexcept>

#include "maghom/errors.hpp"

namespace maghom {

rat::rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

rat::rat(mpz_class num, mpz_class den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

rat& rat::operator/=(const rat& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

rat rat::parse(std::string_view s) {
    // trim surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw input_error("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw input_error("malformed rational literal");

    std::string body(s);
    mpq_class v;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw input_error("malformed rational literal '" + body + "'");
        mpz_class d(den);
        if (d == 0) throw input_error("rational literal with zero denominator");
        v = mpq_class(mpz_class(num), d);
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string intpart = body.substr(0, dot), fracpart = body.substr(dot + 1);
        if (intpart.empty()) intpart = "0";
        if (fracpart.empty()) fracpart = "0";
        if (!all_digits(intpart) || !all_digits(fracpart))
            throw input_error("malformed decimal literal '" + body + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracpart.size());
        v = mpq_class(mpz_class(intpart) * scale + mpz_class(fracpart), scale);
    } else {
        if (!all_digits(body)) throw input_error("malformed rational literal '" + body + "'");
        v = mpq_class(mpz_class(body));
    }
    v.canonicalize();
    if (negative) v = -v;
    return rat(std::move(v));
}

}  // namespace maghom
