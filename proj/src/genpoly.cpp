#include "maghom/genpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maghom {

gen_poly::gen_poly(const rat& constant) {
    if (!constant.is_zero()) terms_.emplace_back(rat(0), constant);
}

gen_poly gen_poly::monomial(const rat& coeff, const rat& exponent) {
    if (exponent.is_negative()) throw std::domain_error("gen_poly: negative exponent");
    gen_poly p;
    if (!coeff.is_zero()) p.terms_.emplace_back(exponent, coeff);
    return p;
}

int gen_poly::sign() const {
    if (terms_.empty()) return 0;
    return terms_.front().second.sign();
}

rat gen_poly::coeff(const rat& exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const term& t, const rat& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return rat(0);
}

void gen_poly::add_term(const rat& exponent, const rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const term& t, const rat& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {exponent, coeff});
    }
}

gen_poly gen_poly::operator-() const {
    gen_poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

gen_poly& gen_poly::operator+=(const gen_poly& o) {
    // Merge two sorted term lists.
    std::vector<term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first < o.terms_[j].first) {
            merged.push_back(terms_[i++]);
        } else if (o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            rat c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) merged.emplace_back(terms_[i].first, c);
            ++i, ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(terms_[i++]);
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

gen_poly& gen_poly::operator-=(const gen_poly& o) { return *this += -o; }

gen_poly operator*(const gen_poly& a, const gen_poly& b) {
    gen_poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

double gen_poly::evaluate(double q0) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c.to_double() * std::pow(q0, e.to_double());
    return s;
}

std::string gen_poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << "-";
        first = false;
        rat a = abs(c);
        if (e.is_zero()) {
            os << a.str();
        } else {
            if (!(a == rat(1))) os << a.str() << "*";
            if (e == rat(1))
                os << "q";
            else
                os << "q^" << (e.is_integer() ? e.str() : "(" + e.str() + ")");
        }
    }
    return os.str();
}

}  // namespace maghom
