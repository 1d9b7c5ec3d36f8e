#include "maghom/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace maghom {

poly::poly(const rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

poly::poly(std::vector<rat> coeffs) : c_(std::move(coeffs)) { trim(); }

poly poly::monomial(const rat& coeff, std::size_t degree) {
    poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, rat(0));
        p.c_[degree] = coeff;
    }
    return p;
}

rat poly::leading() const {
    if (c_.empty()) return rat(0);
    return c_.back();
}

void poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

poly poly::operator-() const {
    poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(-x);
    return r;
}

poly& poly::operator+=(const poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

poly& poly::operator-=(const poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

poly& poly::operator*=(const rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) return poly();
    poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

std::pair<poly, poly> poly::divmod(const poly& a, const poly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero");
    poly q, r = a;
    if (r.degree() >= b.degree()) {
        q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, rat(0));
        rat lead = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            rat factor = r.leading() / lead;
            q.c_[shift] = factor;
            r -= poly::monomial(factor, shift) * b;
        }
        q.trim();
    }
    return {q, r};
}

poly poly::exact_div(const poly& a, const poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly: division not exact");
    return q;
}

poly poly::gcd(poly a, poly b) {
    while (!b.is_zero()) {
        poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    rat inv_lead = rat(1) / a.leading();
    return a * inv_lead;
}

double poly::evaluate(double t0) const {
    double s = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) s = s * t0 + c_[k].to_double();
    return s;
}

rat poly::evaluate(const rat& t0) const {
    rat s(0);
    for (std::size_t k = c_.size(); k-- > 0;) s = s * t0 + c_[k];
    return s;
}

std::string poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << (c_[k].is_negative() ? " - " : " + ");
        else if (c_[k].is_negative()) os << "-";
        first = false;
        rat a = abs(c_[k]);
        if (k == 0) {
            os << a.str();
        } else {
            if (!(a == rat(1))) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace maghom
