#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "maghom/errors.hpp"
#include "maghom/genpoly.hpp"
#include "maghom/polynomial.hpp"
#include "maghom/rat.hpp"
#include "maghom/ratfun.hpp"

using namespace maghom;

TEST_CASE("rat reduces and normalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(0, 7) == rat(0));
    CHECK(rat(3, 2).str() == "3/2");
    CHECK(rat(-4).str() == "-4");
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK(rat(1, 2) * rat(2, 3) == rat(1, 3));
    CHECK(rat(1, 2) < rat(2, 3));
    CHECK(rat(7, 3).is_integer() == false);
    CHECK(rat(6, 3).is_integer());
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(rat(1) / rat(0), std::domain_error);
}

TEST_CASE("rat parses fractions, integers and decimals") {
    CHECK(rat::parse("3/4") == rat(3, 4));
    CHECK(rat::parse("-3/4") == rat(-3, 4));
    CHECK(rat::parse("12") == rat(12));
    CHECK(rat::parse("1.5") == rat(3, 2));
    CHECK(rat::parse("0.25") == rat(1, 4));
    CHECK(rat::parse("-0.1") == rat(-1, 10));
    CHECK(rat::parse("2.") == rat(2));
    CHECK_THROWS_AS(rat::parse("1/0"), input_error);
    CHECK_THROWS_AS(rat::parse("abc"), input_error);
    CHECK_THROWS_AS(rat::parse(""), input_error);
}

namespace {

gen_poly q_pow(const rat& e) { return gen_poly::monomial(rat(1), e); }

}  // namespace

TEST_CASE("gen_poly multiplication follows the exponent-addition rule") {
    CHECK(q_pow(rat(1)) * q_pow(rat(2)) == q_pow(rat(3)));

    gen_poly one_minus_q = gen_poly(1) - q_pow(rat(1));
    gen_poly one_plus_q = gen_poly(1) + q_pow(rat(1));
    CHECK(one_minus_q * one_plus_q == gen_poly(1) - q_pow(rat(2)));

    gen_poly a = gen_poly::monomial(rat(2), rat(1, 2));
    gen_poly b = gen_poly::monomial(rat(3), rat(1, 2));
    CHECK(a * b == gen_poly::monomial(rat(6), rat(1)));
}

TEST_CASE("gp_sign reads the smallest-exponent coefficient") {
    CHECK((gen_poly(1) - q_pow(rat(1))).sign() == 1);
    CHECK((q_pow(rat(1, 2)) - q_pow(rat(1))).sign() == 1);
    gen_poly m = gen_poly::monomial(rat(-1), rat(2)) + q_pow(rat(3));
    CHECK(m.sign() == -1);
    CHECK(gen_poly().sign() == 0);
}

TEST_CASE("gen_poly ring axioms hold on random triples") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        gen_poly a = testgen::rand_gen_poly(rng);
        gen_poly b = testgen::rand_gen_poly(rng);
        gen_poly c = testgen::rand_gen_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == gen_poly());
        CHECK(a * gen_poly(1) == a);
        CHECK(a * gen_poly() == gen_poly());
    }
}

TEST_CASE("gp_sign gives an order compatible with + and * by positives") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        gen_poly a = testgen::rand_gen_poly(rng);
        gen_poly b = testgen::rand_gen_poly(rng);
        // Trichotomy.
        int s = (a - b).sign();
        int t = (b - a).sign();
        CHECK(s == -t);
        if (a.sign() > 0 && b.sign() > 0) {
            CHECK((a + b).sign() > 0);
            CHECK((a * b).sign() > 0);
        }
        if (a.sign() != 0 && b.sign() != 0) CHECK((a * b).sign() == a.sign() * b.sign());
    }
    // q is a positive infinitesimal: 0 < q^e < c for every positive constant c.
    gen_poly q = q_pow(rat(1));
    CHECK(q.sign() > 0);
    CHECK((gen_poly(rat(1, 1000)) - q).sign() > 0);
    CHECK((gen_poly(rat(1, 1000)) - q_pow(rat(1, 7))).sign() > 0);
}

TEST_CASE("scale_exponents picks the lcm of exponent denominators") {
    {
        gen_poly p = q_pow(rat(1, 2)) + q_pow(rat(3, 2));
        auto [d, scaled] = scale_exponents(std::vector<gen_poly>{p});
        CHECK(d == 2);
        CHECK(scaled[0] == poly(std::vector<rat>{rat(0), rat(1), rat(0), rat(1)}));
    }
    {
        auto [d, scaled] = scale_exponents(std::vector<gen_poly>{q_pow(rat(1))});
        CHECK(d == 1);
        CHECK(scaled[0] == poly(std::vector<rat>{rat(0), rat(1)}));
    }
    {
        auto [d, scaled] = scale_exponents(std::vector<gen_poly>{q_pow(rat(1, 2)), q_pow(rat(1, 3))});
        CHECK(d == 6);
        CHECK(scaled[0] == poly::monomial(rat(1), 3));
        CHECK(scaled[1] == poly::monomial(rat(1), 2));
    }
}

TEST_CASE("scale/unscale round trip is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        gen_poly a = testgen::rand_gen_poly(rng, 6);
        auto [d, scaled] = scale_exponents(std::vector<gen_poly>{a});
        CHECK(unscale_exponents(scaled[0], d) == a);
    }
}

TEST_CASE("poly division and gcd") {
    poly x = poly::monomial(rat(1), 1);
    poly a = (x + poly(1)) * (x - poly(1));  // x^2 - 1
    CHECK(poly::exact_div(a, x + poly(1)) == x - poly(1));
    auto [q, r] = poly::divmod(a + poly(5), x + poly(1));
    CHECK(q == x - poly(1));
    CHECK(r == poly(5));
    CHECK(poly::gcd(a, (x + poly(1)) * x) == x + poly(1));
    CHECK(poly::gcd(a, poly()) == a * rat(1, 1));  // gcd normalizes; a is monic already
    CHECK_THROWS_AS(poly::exact_div(a + poly(5), x + poly(1)), std::logic_error);
}

TEST_CASE("series_expand matches hand long division") {
    poly one(1);
    poly t = poly::monomial(rat(1), 1);
    {
        rat_fun f(one, one + t);
        auto s = f.series_expand(3);
        CHECK(s == std::vector<rat>{rat(1), rat(-1), rat(1), rat(-1)});
    }
    {
        rat_fun f(one, one - t);
        auto s = f.series_expand(3);
        CHECK(s == std::vector<rat>{rat(1), rat(1), rat(1), rat(1)});
    }
    {
        rat_fun f(poly(2), one + t);
        auto s = f.series_expand(4);
        CHECK(s == std::vector<rat>{rat(2), rat(-2), rat(2), rat(-2), rat(2)});
    }
    rat_fun bad(one, t);
    CHECK_THROWS_AS(bad.series_expand(2), zero_constant_denominator);
}

TEST_CASE("den * series == num (mod t^(N+1)) on random rational functions") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> deg(0, 4);
    const std::size_t n = 8;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<rat> nc(deg(rng) + 1), dc(deg(rng) + 1);
        for (auto& c : nc) c = testgen::rand_rat(rng);
        for (auto& c : dc) c = testgen::rand_rat(rng);
        dc[0] = testgen::rand_rat(rng, 1, 9);  // nonzero constant term
        poly num{std::vector<rat>(nc)}, den{std::vector<rat>(dc)};
        if (den.is_zero()) continue;
        rat_fun f(num, den);
        auto s = f.series_expand(n);
        poly series_poly{std::vector<rat>(s)};
        poly back = f.den() * series_poly;
        for (std::size_t k = 0; k <= n; ++k) CHECK(back.coeff(k) == f.num().coeff(k));
    }
}

TEST_CASE("rat_fun canonical form makes equality structural") {
    poly one(1);
    poly t = poly::monomial(rat(1), 1);
    CHECK(rat_fun(one - t * t, one - t) == rat_fun(one + t, one));
    CHECK(rat_fun(poly(2) + t * rat(2), one + t) == rat_fun(rat(2)));
    // Denominator's lowest-order nonzero coefficient normalized to 1.
    rat_fun f(poly(3), poly(2) + t);
    CHECK(f.den().coeff(0) == rat(1));
    CHECK(f.num().coeff(0) == rat(3, 2));
    // Field axioms on a nontrivial value.
    rat_fun g(one + t, one - t);
    CHECK(g / g == rat_fun(rat(1)));
    CHECK(g - g == rat_fun());
    CHECK(g + (-g) == rat_fun());
}

TEST_CASE("rat_fun arithmetic aligns mixed scales") {
    // f = q^(1/2) as t with D=2, g = q with D=1; f*f == g.
    rat_fun f = rat_fun::from_poly(poly::monomial(rat(1), 1), 2);
    rat_fun g = rat_fun::from_poly(poly::monomial(rat(1), 1), 1);
    CHECK(f * f == g);
    CHECK((f + g).scale() == 2);
}

TEST_CASE("evaluate_at substitutes q0 and flags singularities") {
    poly one(1);
    poly t = poly::monomial(rat(1), 1);
    {
        // f = q^2
        rat_fun f = rat_fun::from_poly(poly::monomial(rat(1), 2), 1);
        CHECK(f.evaluate(0.5) == doctest::Approx(0.25).epsilon(1e-12));
    }
    {
        rat_fun f(poly(2), one + t);
        double q0 = std::exp(-1.0);
        CHECK(f.evaluate(q0) == doctest::Approx(2.0 / (1.0 + q0)).epsilon(1e-12));
    }
    {
        // 1/(2q - 1) at q0 = 0.5 hits a zero denominator.
        rat_fun f(one, t * rat(2) - one);
        CHECK_THROWS_AS(f.evaluate(0.5), singular_evaluation);
    }
}

TEST_CASE("gen_poly evaluation matches the term sum") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> qs(0.05, 0.95);
    for (int trial = 0; trial < 100; ++trial) {
        gen_poly a = testgen::rand_gen_poly(rng, 5);
        double q0 = qs(rng);
        double direct = 0.0;
        for (const auto& [e, c] : a.terms()) direct += c.to_double() * std::pow(q0, e.to_double());
        double got = a.evaluate(q0);
        CHECK(got == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("fractional-scale evaluation uses t = q^(1/D)") {
    // f = q^(1/2) represented at scale 2: value at q0 is sqrt(q0).
    rat_fun f = rat_fun::from_poly(poly::monomial(rat(1), 1), 2);
    CHECK(f.evaluate(0.25) == doctest::Approx(0.5).epsilon(1e-12));
}
