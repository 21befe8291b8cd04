#include <doctest.h>

#include <random>

#include "jacklab/alpha_rational.hpp"

using namespace jacklab;

namespace {

Poly poly_a() { return Poly::alpha(); }

RatFunc rf(long num) { return RatFunc(num); }

// Independent random rational functions for property tests.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    Rat rat() {
        std::uniform_int_distribution<long> num(-6, 6);
        std::uniform_int_distribution<long> den(1, 5);
        return rat_frac(num(gen), den(gen));
    }
    Poly poly(int max_deg, bool force_nonzero = false) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        std::vector<Rat> c(static_cast<size_t>(deg(gen)) + 1);
        for (auto& x : c) x = rat();
        Poly p = Poly::from_coeffs(std::move(c));
        if (force_nonzero && p.is_zero()) return Poly(1L);
        return p;
    }
    RatFunc ratfunc() { return RatFunc(poly(4), poly(3, true)); }
    RatFunc nonzero_ratfunc() {
        for (;;) {
            RatFunc x = ratfunc();
            if (!x.is_zero()) return x;
        }
    }
};

}  // namespace

TEST_CASE("rational parsing round-trips") {
    CHECK(rat_from_string("5/6") == rat_frac(5, 6));
    CHECK(rat_from_string("-3") == Rat(-3));
    CHECK(rat_to_string(rat_frac(4, 8)) == "1/2");
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK(rat_frac(1, 2) + rat_frac(1, 3) == rat_frac(5, 6));
}

TEST_CASE("field arithmetic is exact and canonical") {
    const RatFunc a(poly_a());
    CHECK(a / a == rf(1));
    // (a^2 - 1)/(a + 1) = a - 1
    const RatFunc q(Poly::from_coeffs({Rat(-1), Rat(0), Rat(1)}),
                    Poly::from_coeffs({Rat(1), Rat(1)}));
    CHECK(q == RatFunc(Poly::from_coeffs({Rat(-1), Rat(1)})));
    CHECK(q.is_polynomial());
    CHECK_THROWS_AS(a / RatFunc(), std::domain_error);
}

TEST_CASE("canonical form is structural and idempotent") {
    // 2a/2 and a are the same object; (2a+2)/(4) reduces with positive
    // primitive denominator.
    CHECK(RatFunc(Poly::from_coeffs({Rat(0), Rat(2)}), Poly(2L)) == RatFunc(poly_a()));
    const RatFunc x(Poly::from_coeffs({Rat(2), Rat(2)}), Poly(4L));
    CHECK(x.den() == Poly(1L));
    CHECK(x.num() == Poly::from_coeffs({rat_frac(1, 2), rat_frac(1, 2)}));
    // Negative denominators normalize away.
    const RatFunc y(Poly(1L), Poly(-2L));
    CHECK(y == RatFunc(rat_frac(-1, 2)));
    CHECK(y.den() == Poly(1L));
}

TEST_CASE("big-O predicate matches valuations") {
    const RatFunc ap(poly_a() * Poly::from_coeffs({Rat(2), Rat(3)}));  // a(2+3a)
    CHECK(ap.is_big_o(1));
    CHECK_FALSE(ap.is_big_o(2));
    const RatFunc inv_a(Poly(1L), poly_a());
    CHECK_FALSE(inv_a.is_big_o(0));
    CHECK(inv_a.is_big_o(-1));
    // (a-1)/(2a): valuation -1.
    const RatFunc h(Poly::from_coeffs({Rat(-1), Rat(1)}), Poly::from_coeffs({Rat(0), Rat(2)}));
    CHECK(h.valuation_at_zero() == -1);
    CHECK(h.is_big_o(-1));
    CHECK_FALSE(h.is_big_o(0));
    CHECK(RatFunc().is_big_o(100));
}

TEST_CASE("beta substitution") {
    CHECK(*RatFunc(Poly::from_coeffs({Rat(-1), Rat(1)})).to_beta_polynomial() ==
          Poly::from_coeffs({Rat(0), Rat(1)}));
    CHECK(*RatFunc(poly_a() * poly_a()).to_beta_polynomial() ==
          Poly::from_coeffs({Rat(1), Rat(2), Rat(1)}));
    CHECK_FALSE(RatFunc(Poly(1L), poly_a()).to_beta_polynomial().has_value());
}

TEST_CASE("beta substitution round-trips through the inverse shift") {
    Rng rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = rng.poly(6);
        CHECK(p.shifted_arg(1).shifted_arg(-1) == p);
    }
}

TEST_CASE("power series coefficient extraction") {
    const RatFunc a(poly_a());
    CHECK(a.coefficient_of_alpha(0) == 0);
    CHECK(a.coefficient_of_alpha(1) == 1);
    // 1/(1+a) = 1 - a + a^2 - ...
    const RatFunc geo(Poly(1L), Poly::from_coeffs({Rat(1), Rat(1)}));
    CHECK(geo.coefficient_of_alpha(1) == -1);
    CHECK(geo.coefficient_of_alpha(5) == -1);
    CHECK(geo.coefficient_of_alpha(4) == 1);
    CHECK_THROWS_AS(RatFunc(Poly(1L), poly_a()).coefficient_of_alpha(0), std::domain_error);
    // a/(1-a) has Taylor coefficients 0, 1, 1, 1, ...
    const RatFunc shifted(poly_a(), Poly::from_coeffs({Rat(1), Rat(-1)}));
    CHECK(shifted.coefficient_of_alpha(0) == 0);
    CHECK(shifted.coefficient_of_alpha(3) == 1);
}

TEST_CASE("valuation is additive under products") {
    Rng rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc x = rng.nonzero_ratfunc();
        RatFunc y = rng.nonzero_ratfunc();
        CHECK((x * y).valuation_at_zero() == x.valuation_at_zero() + y.valuation_at_zero());
    }
}

TEST_CASE("field axioms on random values") {
    Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc x = rng.ratfunc(), y = rng.ratfunc(), z = rng.ratfunc();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x + y == y + x);
        CHECK((x - y) + y == x);
        if (!y.is_zero()) CHECK(x / y * y == x);
    }
}

TEST_CASE("polynomial gcd and division") {
    const Poly a = Poly::from_coeffs({Rat(-1), Rat(0), Rat(1)});  // a^2 - 1
    const Poly b = Poly::from_coeffs({Rat(1), Rat(1)});           // a + 1
    CHECK(Poly::gcd(a, b) == b);  // monic already
    CHECK(Poly::div_exact(a, b) == Poly::from_coeffs({Rat(-1), Rat(1)}));
    CHECK_THROWS_AS(Poly::div_exact(b, a), std::domain_error);
    CHECK_THROWS_AS(Poly::divmod(a, Poly()), std::domain_error);
}
