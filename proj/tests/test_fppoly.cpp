#include "cyclocrit/fppoly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace cyclocrit;

namespace {

FpPoly random_poly(std::uint32_t p, int degree, std::mt19937& rng)
{
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    std::vector<std::int64_t> c(degree + 1);
    for (auto& v : c) v = dist(rng);
    if (c.back() == 0) c.back() = 1;
    return FpPoly(p, c);
}

}  // namespace

TEST_SUITE("fppoly")
{
    TEST_CASE("construction normalizes")
    {
        const FpPoly a(7, {8, -1, 0, 14});
        CHECK(a.coeffs() == std::vector<std::uint32_t>{1, 6});
        CHECK(a.degree() == 1);
        CHECK(FpPoly(7).degree() == -1);
        CHECK(FpPoly(7, {0, 0, 7}).is_zero());
        CHECK(FpPoly::monomial(5, 3, 2) == FpPoly(5, {0, 0, 3}));
        CHECK(FpPoly::monomial(5, 0, 2).is_zero());
    }

    TEST_CASE("ring operations")
    {
        const FpPoly a(7, {1, 1});   // 1 + T
        const FpPoly b(7, {-1, 1});  // T - 1
        CHECK(a * b == FpPoly(7, {-1, 0, 1}));
        CHECK(a + b == FpPoly(7, {0, 2}));
        CHECK(a - a == FpPoly(7));
        CHECK(a.evaluate(3) == Residue(4));
        CHECK(FpPoly(7, {2, 4}).monic() == FpPoly(7, {4, 1}));
        CHECK_THROWS_AS(a + FpPoly(5, {1}), std::invalid_argument);
        CHECK_THROWS_AS(a * FpPoly(5, {1}), std::invalid_argument);
    }

    TEST_CASE("divmod")
    {
        std::mt19937 rng(11);
        for (const std::uint32_t p : {5u, 13u, 101u})
            for (int k = 0; k < 30; ++k)
            {
                const FpPoly a = random_poly(p, 9, rng), b = random_poly(p, 4, rng);
                const auto [q, r] = a.divmod(b);
                REQUIRE(q * b + r == a);
                REQUIRE(r.degree() < b.degree());
            }
        CHECK_THROWS_AS(FpPoly(7, {1}).divmod(FpPoly(7)), std::domain_error);
    }

    TEST_CASE("poly_gcd")
    {
        const std::uint32_t p = 7;
        CHECK(poly_gcd(FpPoly(p, {-1, 0, 1}), FpPoly(p, {-1, 1})) == FpPoly(p, {-1, 1}));
        CHECK(poly_gcd(FpPoly(p, {2, 4}), FpPoly(p)) == FpPoly(p, {4, 1}));
        CHECK(poly_gcd(FpPoly(p), FpPoly(p)).is_zero());
        CHECK_THROWS_AS(poly_gcd(FpPoly(7, {1}), FpPoly(5, {1})), std::invalid_argument);

        std::mt19937 rng(3);
        for (const std::uint32_t q : {11u, 31u, 97u})
            for (int k = 0; k < 40; ++k)
            {
                const FpPoly a = random_poly(q, 5, rng), b = random_poly(q, 4, rng), c = random_poly(q, 3, rng);
                const FpPoly g = poly_gcd(a * c, b * c);
                REQUIRE(g.lead() == 1);
                REQUIRE(g.degree() >= c.degree());
                REQUIRE((a * c).divmod(g).second.is_zero());
                REQUIRE((b * c).divmod(g).second.is_zero());
                REQUIRE(g.divmod(c.monic()).second.is_zero());
            }
    }

    TEST_CASE("roots_in_units")
    {
        CHECK(roots_in_units(FpPoly(13, {-1, 0, 1})) == std::vector<std::uint32_t>{1, 12});
        CHECK(roots_in_units(FpPoly(13, {5})).empty());
        CHECK(roots_in_units(FpPoly(7, {-2, 1}) * FpPoly(7, {-3, 1})) == std::vector<std::uint32_t>{2, 3});
        CHECK_THROWS_AS(roots_in_units(FpPoly(7)), std::invalid_argument);
    }

    TEST_CASE("Mirimanoff evaluation")
    {
        const PrimeContext c7(7);
        CHECK(mirimanoff_eval(c7, 6, 2).value() == 3);
        CHECK_THROWS_AS(mirimanoff_eval(c7, 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(mirimanoff_eval(c7, 7, 2), std::invalid_argument);
        CHECK_THROWS_AS(mirimanoff_eval(c7, 3, 7), std::invalid_argument);
        for (const auto p : oracle::primes(5, 61))
        {
            const PrimeContext ctx(p);
            for (std::uint32_t t = 0; t < p; ++t)
            {
                const auto all = mirimanoff_all(ctx, t);
                REQUIRE(all.size() == p - 1);
                for (std::uint32_t m = 1; m < p; ++m)
                {
                    const auto v = mirimanoff_eval(ctx, m, t).value();
                    REQUIRE(v == oracle::mirimanoff(p, m, t));
                    REQUIRE(all[m - 1] == v);
                }
                if (t >= 2) REQUIRE(mirimanoff_eval(ctx, 1, t).value() == 0);
            }
            for (std::uint32_t m = 1; m < p; ++m)
                REQUIRE(mirimanoff_eval(ctx, m, 1).value() == ((m - 1) % (p - 1) == 0 ? p - 1 : 0));
        }
    }

    TEST_CASE("Mirimanoff star")
    {
        const PrimeContext c7(7);
        CHECK(mirimanoff_star_eval(c7, 1, 4).value() == 1);
        CHECK(mirimanoff_star_eval(c7, 3, 2) == mirimanoff_eval(c7, 3, 2));
        CHECK(mirimanoff_star_eval(c7, 5, 0).value() == 0);
        CHECK_THROWS_AS(mirimanoff_star_eval(c7, 2, 3), std::invalid_argument);
    }

    TEST_CASE("phi_{p-1} equals the Fermat-quotient closed form")
    {
        for (const auto p : oracle::primes(5, 101))
        {
            const PrimeContext ctx(p);
            const mpz_class p2 = mpz_class(p) * p;
            for (std::uint32_t t = 2; t + 2 <= p; ++t)
            {
                // (1 - t^p - (1-t)^p) / p mod p, computed in Z/p^2
                mpz_class a, b;
                mpz_powm_ui(a.get_mpz_t(), mpz_class(t).get_mpz_t(), p, p2.get_mpz_t());
                mpz_powm_ui(b.get_mpz_t(), mpz_class(p + 1 - t).get_mpz_t(), p, p2.get_mpz_t());
                mpz_class q = (1 - a - b) % p2;
                if (q < 0) q += p2;
                REQUIRE(q % p == 0);
                REQUIRE(mirimanoff_eval(ctx, p - 1, t).value() == mpz_class(q / p).get_ui());
            }
        }
    }

    TEST_CASE("Kummer polynomials")
    {
        const PrimeContext c13(13);
        CHECK(kummer_polynomial(c13, 0).evaluate(0).value() == 0);
        CHECK(kummer_polynomial(c13, 1) == FpPoly(13, {0, -1, -1}));
        CHECK(kummer_polynomial(c13, 2).evaluate(1).value() == 2);
        CHECK(kummer_polynomial(c13, 3) ==
              FpPoly(13, {0, -1, -1}) * FpPoly(13, {1, 56, 246, 56, 1}));
        CHECK_THROWS_AS(kummer_polynomial(c13, 4), std::domain_error);

        CHECK(kummer_relation_residual(PrimeContext(7), 1, 2).is_zero());
        CHECK(kummer_relation_residual(c13, 3, 5).is_zero());
        CHECK_THROWS_AS(kummer_relation_residual(c13, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(kummer_relation_residual(c13, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(kummer_relation_residual(c13, 4, 2), std::invalid_argument);
        for (const auto p : oracle::primes(11, 61))
        {
            const PrimeContext ctx(p);
            for (std::uint32_t m = 1; m <= 3; ++m)
                for (std::uint32_t t = 2; t + 2 <= p; ++t) REQUIRE(kummer_relation_residual(ctx, m, t).is_zero());
        }
    }

    TEST_CASE("symmetric sums vanish")
    {
        CHECK(symmetric_sum_residuals(PrimeContext(7), 2).full.is_zero());
        CHECK(symmetric_sum_residuals(PrimeContext(7), 2).even.is_zero());
        for (const auto p : oracle::primes(5, 61))
        {
            const PrimeContext ctx(p);
            for (std::uint32_t t = 0; t < p; ++t)
            {
                const auto r = symmetric_sum_residuals(ctx, t);
                REQUIRE(r.full.is_zero());
                REQUIRE(r.even.is_zero());
            }
        }
    }

    TEST_CASE("twisted sum equals k phi_{p-1}")
    {
        // Substituting i = kj shows sum_j j^(p-2) t^(kj mod p) = k phi_{p-1}(t),
        // so the residual against (p-k) is 2k phi_{p-1}(t).
        for (const auto p : oracle::primes(5, 61))
        {
            const PrimeContext ctx(p);
            for (std::uint32_t k = 1; k < p; ++k)
                for (std::uint32_t t = 0; t < p; ++t)
                {
                    const auto phi = mirimanoff_eval(ctx, p - 1, t).value();
                    REQUIRE(twisted_sum(ctx, k, t).value() == ctx.mul(k, phi));
                    REQUIRE(twisted_sum_residual(ctx, k, t).value() == ctx.mul(2 * k % p, phi));
                }
        }
        CHECK_THROWS_AS(twisted_sum(PrimeContext(7), 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(twisted_sum(PrimeContext(7), 7, 2), std::invalid_argument);
    }
}
