#include "cyclocrit/bernoulli.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace cyclocrit;

TEST_SUITE("bernoulli")
{
    TEST_CASE("known values")
    {
        const PrimeContext c7(7);
        const auto t7 = bernoulli_even_mod_p(c7);
        CHECK(t7.size() == 2);
        CHECK(t7.at(2).value() == c7.inv(6));
        CHECK(t7.at(4).value() == 3);
        CHECK(t7.irregular().empty());
        CHECK(irregular_index(c7) == 0);

        const PrimeContext c37(37);
        const auto t37 = bernoulli_even_mod_p(c37);
        CHECK(t37.at(32).is_zero());
        CHECK(t37.irregular() == std::vector<std::uint32_t>{32});
        CHECK(irregular_index(c37) == 1);

        CHECK(irregular_index(PrimeContext(157)) == 2);
        CHECK(bernoulli_even_mod_p(PrimeContext(157)).irregular() == std::vector<std::uint32_t>{62, 110});
    }

    TEST_CASE("range checks")
    {
        CHECK_THROWS_AS(bernoulli_even_mod_p(PrimeContext(5)), std::invalid_argument);
        const auto t = bernoulli_even_mod_p(PrimeContext(11));
        CHECK_THROWS_AS(t.at(3), std::out_of_range);
        CHECK_THROWS_AS(t.at(0), std::out_of_range);
        CHECK_THROWS_AS(t.at(10), std::out_of_range);
        CHECK_NOTHROW(t.at(8));
        CHECK_THROWS_AS(vandiver_bernoulli_rhs(PrimeContext(11), 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(vandiver_bernoulli_rhs(PrimeContext(11), 2, 5), std::invalid_argument);
    }

    TEST_CASE("recurrence agrees with exact rational Bernoulli numbers")
    {
        const auto exact = oracle::bernoulli_rational(200);
        for (const auto p : oracle::primes(7, 199))
        {
            const auto t = bernoulli_even_mod_p(PrimeContext(p));
            REQUIRE(t.size() == (p - 3) / 2);
            for (std::uint32_t n = 2; n + 3 <= p; n += 2) REQUIRE(t.at(n).value() == oracle::reduce(exact[n], p));
        }
    }

    TEST_CASE("Vandiver power sums agree with the recurrence")
    {
        // p = 7, d = 2, m = 1 and p = 13, d = 3, m = 2 spelled out
        {
            const PrimeContext ctx(7);
            const auto b = bernoulli_even_mod_p(ctx).at(4).value();
            const auto factor = ctx.sub(1, ctx.inv(4));
            CHECK(vandiver_bernoulli_rhs(ctx, 2, 1).value() == ctx.mul(factor, b));
        }
        {
            const PrimeContext ctx(13);
            const auto b = bernoulli_even_mod_p(ctx).at(8).value();
            const auto factor = ctx.sub(1, ctx.inv(ctx.pow(3, 4)));
            CHECK(vandiver_bernoulli_rhs(ctx, 3, 2).value() == ctx.mul(factor, b));
        }
        for (const auto p : oracle::primes(7, 113))
        {
            const PrimeContext ctx(p);
            const auto t = bernoulli_even_mod_p(ctx);
            for (std::uint32_t d = 2; d <= p - 2; ++d)
                for (std::uint32_t m = 1; m <= (p - 3) / 2; ++m)
                {
                    // the identity holds even when 1 - d^-2m vanishes
                    const auto factor = ctx.sub(1, ctx.inv(ctx.pow(d, 2 * m)));
                    REQUIRE(vandiver_bernoulli_rhs(ctx, d, m).value() == ctx.mul(factor, t.at(p - 1 - 2 * m).value()));
                }
        }
    }

    TEST_CASE("irregular pairs below 200")
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> found;
        for (const auto p : oracle::primes(7, 199))
        {
            const BernoulliTable t = bernoulli_even_mod_p(PrimeContext(p));
            for (const auto n : t.irregular()) found.emplace_back(p, n);
        }
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> expected{
            {37, 32}, {59, 44}, {67, 58}, {101, 68}, {103, 24}, {131, 22}, {149, 130}, {157, 62}, {157, 110}};
        CHECK(found == expected);
    }
}
