#include "cyclocrit/fp_core.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace cyclocrit;

TEST_SUITE("fp_core")
{
    TEST_CASE("pow_mod small cases")
    {
        CHECK(pow_mod(3, 0, 7) == 1);
        CHECK(pow_mod(2, 10, 1000) == 24);
        CHECK(pow_mod(-1, 3, 7) == 6);
        CHECK(pow_mod(-7, 1, 7) == 0);
        CHECK(pow_mod(5, 3, 2) == 1);
        CHECK_THROWS_AS(pow_mod(2, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(pow_mod(2, 3, 0), std::invalid_argument);
    }

    TEST_CASE("pow_mod at 1093^2 matches schoolbook exponentiation")
    {
        const std::uint64_t m = 1093ULL * 1093ULL;
        CHECK(pow_mod(2, 1092, m) == 1);
        CHECK(oracle::schoolbook_pow_mod(2, 1092, m) == 1);
        // a modulus near 2^62 needs the 128-bit products
        const std::uint64_t big = (1ULL << 61) - 1;
        CHECK(pow_mod(3, big - 1, big) == 1);
        CHECK(mpz_class(std::to_string(pow_mod(123456789, 77, big))) ==
              oracle::schoolbook_pow_mod(123456789, 77, mpz_class(std::to_string(big))));
    }

    TEST_CASE("smallest primitive root against exhaustive order check")
    {
        CHECK(smallest_primitive_root(7) == 3);
        CHECK(smallest_primitive_root(13) == 2);
        CHECK(smallest_primitive_root(41) == 6);
        for (const auto p : oracle::primes(3, 400)) CHECK(smallest_primitive_root(p) == oracle::smallest_root(p));
        CHECK_THROWS_AS(smallest_primitive_root(15), std::invalid_argument);
        CHECK_THROWS_AS(smallest_primitive_root(2), std::invalid_argument);
    }

    TEST_CASE("multiplicative order")
    {
        CHECK(mult_order(2, 7) == 3);
        CHECK(mult_order(1, 101) == 1);
        CHECK(mult_order(100, 101) == 2);
        CHECK(mult_order(-1, 101) == 2);
        CHECK_THROWS_AS(mult_order(0, 7), std::invalid_argument);
        CHECK_THROWS_AS(mult_order(14, 7), std::invalid_argument);
        for (const auto p : oracle::primes(3, 200))
            for (std::uint32_t a = 1; a < p; ++a)
            {
                const auto k = mult_order(a, p);
                REQUIRE(k == oracle::order(a, p));
                REQUIRE((p - 1) % k == 0);
            }
    }

    TEST_CASE("fermat quotient")
    {
        CHECK(fermat_quotient(2, 1093).value() == 0);
        CHECK(fermat_quotient(2, 3511).value() == 0);
        CHECK(fermat_quotient(3, 7).value() == 6);
        CHECK(fermat_quotient(2, 7).value() == 2);
        CHECK(fermat_quotient(2, 11).value() != 0);
        CHECK_THROWS_AS(fermat_quotient(14, 7), std::invalid_argument);

        // against (q^(p-1) - 1)/p computed with big integers
        for (const auto p : oracle::primes(3, 300))
            for (const long q : {2L, 3L, 5L, 10L, -2L})
            {
                if (q % static_cast<long>(p) == 0) continue;
                mpz_class v;
                mpz_pow_ui(v.get_mpz_t(), mpz_class(q).get_mpz_t(), p - 1);
                v = (v - 1) / p % p;
                if (v < 0) v += p;
                REQUIRE(fermat_quotient(q, p).value() == v.get_ui());
            }
    }

    TEST_CASE("fermat quotient is a logarithm")
    {
        std::mt19937 rng(7);
        for (const auto p : oracle::primes(5, 500))
            for (int k = 0; k < 10; ++k)
            {
                std::uniform_int_distribution<std::int64_t> dist(1, 100000);
                std::int64_t a = dist(rng), b = dist(rng);
                if (a % p == 0 || b % p == 0) continue;
                // fq depends on a mod p^2, so reduce the product there
                const std::int64_t p2 = std::int64_t(p) * p;
                const std::int64_t ab = (a % p2) * (b % p2) % p2;
                const auto lhs = fermat_quotient(ab, p).value();
                const auto rhs = (fermat_quotient(a, p).value() + fermat_quotient(b, p).value()) % p;
                REQUIRE(lhs == rhs);
            }
    }

    TEST_CASE("PrimeContext tables")
    {
        for (const auto p : oracle::primes(3, 1000))
        {
            const PrimeContext ctx(p);
            REQUIRE(ctx.root() == smallest_primitive_root(p));
            REQUIRE(ctx.upow(0) == 1);
            std::set<std::uint32_t> seen;
            for (std::int64_t i = 0; i + 1 < p; ++i)
            {
                const auto v = ctx.upow(i);
                REQUIRE(v >= 1);
                REQUIRE(v < p);
                seen.insert(v);
                REQUIRE(ctx.ind(v) == i);
            }
            REQUIRE(seen.size() == p - 1);
            for (std::uint32_t a = 1; a < p; ++a)
            {
                REQUIRE(ctx.mul(a, ctx.inv(a)) == 1);
                REQUIRE(ctx.pow(a, p - 1) == 1);
            }
            CHECK(ctx.upow(-1) == ctx.inv(ctx.root()));
            CHECK(ctx.upow(p - 1) == 1);
        }
    }

    TEST_CASE("PrimeContext with explicit root and bad input")
    {
        const PrimeContext ctx(7, 5);
        CHECK(ctx.root() == 5);
        CHECK(ctx.upow(1) == 5);
        CHECK(ctx.upow(2) == 4);
        CHECK_THROWS_AS(PrimeContext(7, 2), std::invalid_argument);
        CHECK_THROWS_AS(PrimeContext(9), std::invalid_argument);
        CHECK_THROWS_AS(PrimeContext(2), std::invalid_argument);
        CHECK_THROWS_AS(PrimeContext(1u << 31), std::invalid_argument);
    }

    TEST_CASE("PrimeContext arithmetic helpers")
    {
        const PrimeContext ctx(13);
        CHECK(ctx.reduce(-1) == 12);
        CHECK(ctx.reduce(27) == 1);
        CHECK(ctx.add(12, 5) == 4);
        CHECK(ctx.sub(3, 5) == 11);
        CHECK(ctx.neg(0) == 0);
        CHECK(ctx.neg(1) == 12);
        CHECK(ctx.pow_signed(2, -1) == 7);
        CHECK(ctx.pow_signed(2, 3) == 8);
        CHECK(ctx.residue(-14) == Residue(12));
    }

    TEST_CASE("primes_in_range")
    {
        CHECK(primes_in_range(3, 13) == std::vector<std::uint32_t>{3, 5, 7, 11, 13});
        CHECK(primes_in_range(14, 16).empty());
        CHECK(primes_in_range(190, 200) == std::vector<std::uint32_t>{191, 193, 197, 199});
    }
}
