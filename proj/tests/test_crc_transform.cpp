#include "generators.hpp"
#include "oracles.hpp"

#include <k3crc/crc_transform.hpp>
#include <k3crc/errors.hpp>

#include <doctest.h>

using namespace k3crc;

namespace {

GaussianRational q(long num, long den = 1)
{
    return GaussianRational(mpq_class(num, den));
}

HalfLaurent poly(std::vector<GaussianRational> c)
{
    HalfLaurent p;
    for (std::size_t k = 0; k < c.size(); ++k)
        p += HalfLaurent::y_power(static_cast<int>(k), c[k]);
    return p;
}

USeries real_series(const std::vector<mpq_class> &c)
{
    std::vector<GaussianRational> g;
    for (const auto &x : c)
        g.emplace_back(x);
    return {0, std::move(g), static_cast<int>(c.size())};
}

// Multiplicity of -1 as a root, by repeated evaluation of derivatives.
int root_multiplicity_at_minus_one(const HalfLaurent &p)
{
    std::map<int, GaussianRational> c(p.terms().begin(), p.terms().end());
    for (int m = 0;; ++m) {
        GaussianRational value;
        for (const auto &[s, a] : c)
            value += a * GaussianRational((s / 2) % 2 == 0 ? 1 : -1);
        if (!value.is_zero())
            return m;
        std::map<int, GaussianRational> d;
        for (const auto &[s, a] : c)
            if (s != 0)
                d[s - 2] += a * GaussianRational(s / 2);
        c = std::move(d);
    }
}

} // namespace

TEST_SUITE("crc-transform")
{
    TEST_CASE("rational functions are canonical")
    {
        const auto r = RationalFunction(poly({2, 2}), poly({4, -4}));
        CHECK(r.num() == poly({q(1, 2), q(1, 2)}));
        CHECK(r.den() == poly({1, -1}));
        // (1 - y^2) / (1 - y) reduces to 1 + y.
        const auto c = RationalFunction(poly({1, 0, -1}), poly({1, -1}));
        CHECK(c.is_laurent_polynomial());
        CHECK(c.num() == poly({1, 1}));
        CHECK_THROWS_AS(RationalFunction(poly({1}), HalfLaurent()), ZeroDenominator);
        CHECK_THROWS_AS(RationalFunction(HalfLaurent::monomial(1, 1)), HalfIntegerPower);
        const auto t = RationalFunction(poly({2, 1}), poly({1, 0, -1})).taylor(6);
        CHECK(t == std::vector<GaussianRational>{2, 1, 2, 1, 2, 1});
        CHECK_THROWS_AS(RationalFunction(HalfLaurent::y_power(-1)).taylor(3), std::domain_error);
    }

    TEST_CASE("pade reconstruction examples")
    {
        const std::vector<GaussianRational> ones(8, GaussianRational(1));
        const auto g = pade_reconstruct(ones, 0, 1);
        CHECK(g == RationalFunction(poly({1}), poly({1, -1})));

        const RationalFunction target(poly({2, 1}), poly({1, 0, -1}));
        CHECK(pade_reconstruct(target.taylor(8), 1, 2) == target);

        std::vector<GaussianRational> fib{1, 1};
        while (fib.size() < 10)
            fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        CHECK_THROWS_AS(pade_reconstruct(fib, 0, 1), NoSolution);
        CHECK(pade_reconstruct(fib, 0, 2) == RationalFunction(poly({1}), poly({1, -1, -1})));

        CHECK_THROWS_AS(pade_reconstruct(ones, 4, 4), std::invalid_argument);
        CHECK_THROWS_AS(pade_reconstruct(ones, -1, 2), std::invalid_argument);
    }

    TEST_CASE("polynomial data short-circuits")
    {
        const std::vector<GaussianRational> c{3, 0, q(1, 2), 0, 0, 0, 0};
        const auto r = pade_reconstruct(c, 3, 3);
        CHECK(r.is_laurent_polynomial());
        CHECK(r.num() == poly({3, 0, q(1, 2)}));
    }

    TEST_CASE("budget escalation")
    {
        std::vector<GaussianRational> fib{1, 1};
        while (fib.size() < 12)
            fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        CHECK(reconstruct_rational(fib, 1, 4) == RationalFunction(poly({1}), poly({1, -1, -1})));
        CHECK_THROWS_AS(reconstruct_rational(fib, 0, 1), NoSolution);
    }

    TEST_CASE("random rational functions round trip")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 60; ++trial) {
            const auto r = random_rational_function(rng, 5);
            CHECK(*r.den().min_exponent() == 0);
            CHECK(r.den().y_coefficient(0) == q(1));
            CHECK(pade_reconstruct(r.taylor(11), 5, 5) == r);
            CHECK(pade_reconstruct(r.taylor(16), 6, 7) == r);
        }
    }

    TEST_CASE("vanishing order at -1")
    {
        CHECK(vanishing_order_at_minus_one(poly({1, 2, 1})) == 2);
        CHECK(vanishing_order_at_minus_one(poly({1, 1}) * poly({1, 1}) * poly({1, 1}) * poly({2, 5})) == 3);
        CHECK(vanishing_order_at_minus_one(poly({1, -1})) == 0);
        CHECK(vanishing_order_at_minus_one(HalfLaurent::y_power(-1) + HalfLaurent(2) + HalfLaurent::y_power(1)) == 2);
        CHECK_THROWS_AS(vanishing_order_at_minus_one(HalfLaurent()), std::domain_error);
    }

    TEST_CASE("substitution examples")
    {
        const auto p = HalfLaurent::y_power(1) + HalfLaurent(2) + HalfLaurent::y_power(-1);
        const auto s = substitute_exponential(p, 12);
        CHECK(s == real_series(oracle::two_minus_two_cos(12)));
        CHECK(s.coefficient(2) == q(1));
        CHECK(s.coefficient(4) == q(-1, 12));
        CHECK(s.coefficient(6) == q(1, 360));
        CHECK(substitute_exponential(HalfLaurent(q(7, 3)), 5) == USeries::monomial(q(7, 3), 0, 5));
        for (int k = 1; k <= 5; ++k) {
            const auto sym = substitute_exponential(HalfLaurent::y_power(k) + HalfLaurent::y_power(-k), 8);
            CHECK(sym.coefficient(0) == q(k % 2 == 0 ? 2 : -2));
        }
        CHECK_THROWS_AS(substitute_exponential(HalfLaurent::monomial(1, 1), 4), HalfIntegerPower);
    }

    TEST_CASE("substituting rational functions")
    {
        const auto geo = substitute_rational(RationalFunction(poly({1}), poly({1, -1})), 6);
        CHECK(geo.valuation() == 0);
        CHECK(geo.coefficient(0) == q(1, 2));
        CHECK(geo.trunc() == 6);
        // Check the product with 1 + e^{iu} is 1.
        const auto den = substitute_exponential(poly({1, -1}), 6);
        CHECK(geo * den == USeries::one(6));

        CHECK(substitute_rational(RationalFunction(HalfLaurent(q(5))), 4) == USeries::monomial(q(5), 0, 4));

        const RationalFunction pole(poly({0, 1}), poly({1, 2, 1}));
        const auto s = substitute_rational(pole, 6);
        CHECK(s.valuation() == -2);
        CHECK(s.trunc() == 6);
        // y / (1 + y)^2 at y = -e^{iu} is 1 / (4 sin^2(u/2)) = 1/u^2 + 1/12 + ...
        CHECK(s.coefficient(-2) == q(1));
        CHECK(s.coefficient(0) == q(1, 12));
        CHECK(s.coefficient(-1).is_zero());
    }

    TEST_CASE("rational substitution agrees with polynomial substitution")
    {
        gen::Rng rng(32);
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = gen::palindromic(rng, 3);
            CHECK(substitute_rational(RationalFunction(p), 10) == substitute_exponential(p, 10));
        }
    }

    TEST_CASE("sym extraction")
    {
        const auto t = real_series(oracle::two_minus_two_cos(8));
        const auto m = sym_invariants_from_useries(t, 0, 2);
        CHECK(m.at(4) == q(1));
        CHECK(m.at(5) == q(-1, 12));
        CHECK(m.size() == 3);
        CHECK(sym_invariants_from_useries(USeries::zero(6), 0, 2).empty());
        const USeries odd(0, {1, 1}, 4);
        CHECK_THROWS_AS(sym_invariants_from_useries(odd, 0, 2), ParityViolation);
        CHECK(sym_invariants_from_useries(USeries::monomial(1, 1, 4), 1, 1).at(2) == q(1));
    }

    TEST_CASE("crc transform")
    {
        const auto t = crc_transform(2, 0, 8);
        const auto half = real_series(oracle::two_minus_two_cos(8)).scaled(q(1, 2));
        CHECK(t == half);
        CHECK(crc_transform(1, 1, 6) == USeries::monomial(q(24), 0, 6));
        CHECK(crc_transform(1, 0, 6) == USeries::one(6));
        for (int n = 1; n <= 3; ++n)
            for (int h = 0; h <= 3; ++h) {
                const auto s = crc_transform(n, h, 10);
                CHECK(s == substitute_exponential(hilb_generating_polynomial(n, h), 10));
            }
    }

    TEST_CASE("substitution is a ring homomorphism with real even image")
    {
        gen::Rng rng(33);
        const int u_order = 14;
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = gen::palindromic(rng, 4), b = gen::palindromic(rng, 4);
            const auto sa = substitute_exponential(a, u_order), sb = substitute_exponential(b, u_order);
            CHECK(substitute_exponential(a + b, u_order) == sa + sb);
            CHECK(equal_up_to_truncation(substitute_exponential(a * b, u_order), sa * sb));
            for (int e = 0; e < u_order; ++e) {
                const auto c = sa.coefficient(e);
                CHECK(c.is_real());
                if (e % 2 == 1)
                    CHECK(c.is_zero());
            }
            const int order = vanishing_order_at_minus_one(a);
            CHECK(order == root_multiplicity_at_minus_one(a));
            if (order < u_order)
                CHECK(sa.valuation() == order);
        }
    }
}
